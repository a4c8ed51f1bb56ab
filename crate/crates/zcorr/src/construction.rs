//! Classification of entangled states and construction of zero-covariance local pairs
//!
//! For every entangled two-qubit pure state there is a choice of non-degenerate local
//! observables Q_A⊗1 and 1⊗R_B whose covariance vanishes exactly. With the off-diagonal
//! phases pinned to s = (−κ+φ−λ)/2 and v = (κ−φ−λ)/2, the zero-covariance condition
//! collapses to a single polynomial identity in (ε, η, q, r):
//!
//!   2(αδ−βγ)(αδ+βγ)εη + (αδ+βγ)qr
//!     = 2(αδ−βγ)(αβ−γδ)ξqη + 2(αδ−βγ)(αγ−βδ)ξrε + 2(αγ+βδ)(αβ+γδ)ξ²qr
//!
//! where ξ = cos((λ−φ−κ)/2). The classifier walks the case tree of that identity; each leaf
//! leaves some parameters free and solves for the rest. Two cross-checks are exported:
//! [`zce2_residual`] (the fully expanded covariance, no phase substitution) and
//! [`zce3_residual`] (the simplified identity, which equals half the covariance).

use crate::observables::{assemble, covariance, CorrelationReport, ObservableError, ObservableParams};
use crate::state::{from_amplitudes, StateError, StateParams};
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// A classification guard counts as zero when its magnitude is at most this.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Guards inside (tol, 10·tol] mark the state as numerically sensitive.
pub const SENSITIVITY_WINDOW: f64 = 10.0;

#[derive(Debug, Error, PartialEq)]
pub enum ConstructionError {
    #[error("state fits no classification branch even after canonicalization")]
    UnclassifiableState,
    #[error("invalid construction options: {0}")]
    InvalidOptions(String),
    #[error(transparent)]
    InvalidState(#[from] StateError),
    #[error(transparent)]
    Observable(#[from] ObservableError),
}

/// Leaf of the case tree. Labels mirror the branching structure: the first two digits are
/// the top-level split on (αδ−βγ, ξ), the rest name the sub-case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    C311,
    C312iOptA,
    C312iOptB,
    C312ii,
    C312iii,
    C312ivA,
    C312ivB,
    C312ivCGeneric,
    C312ivCDegenerate,
    C321,
    C322,
    C331,
    C332,
    C341Separable,
    C342i,
    C342ii,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 16] = [
        CaseLabel::C311,
        CaseLabel::C312iOptA,
        CaseLabel::C312iOptB,
        CaseLabel::C312ii,
        CaseLabel::C312iii,
        CaseLabel::C312ivA,
        CaseLabel::C312ivB,
        CaseLabel::C312ivCGeneric,
        CaseLabel::C312ivCDegenerate,
        CaseLabel::C321,
        CaseLabel::C322,
        CaseLabel::C331,
        CaseLabel::C332,
        CaseLabel::C341Separable,
        CaseLabel::C342i,
        CaseLabel::C342ii,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::C311 => "3.1.1",
            CaseLabel::C312iOptA => "3.1.2(i-A)",
            CaseLabel::C312iOptB => "3.1.2(i-B)",
            CaseLabel::C312ii => "3.1.2(ii)",
            CaseLabel::C312iii => "3.1.2(iii)",
            CaseLabel::C312ivA => "3.1.2(iv-a)",
            CaseLabel::C312ivB => "3.1.2(iv-b)",
            CaseLabel::C312ivCGeneric => "3.1.2(iv-c)",
            CaseLabel::C312ivCDegenerate => "3.1.2(iv-c-degenerate)",
            CaseLabel::C321 => "3.2.1",
            CaseLabel::C322 => "3.2.2",
            CaseLabel::C331 => "3.3.1",
            CaseLabel::C332 => "3.3.2",
            CaseLabel::C341Separable => "3.4.1",
            CaseLabel::C342i => "3.4.2(i)",
            CaseLabel::C342ii => "3.4.2(ii)",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Which solution family to use inside branch 3.1.2(i), where two exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PreferOption {
    #[default]
    #[serde(rename = "auto")]
    Auto,
    #[serde(rename = "A")]
    A,
    #[serde(rename = "B")]
    B,
}

/// Knobs for the construction: magnitudes of the free parameters, operator centers, and
/// the guard tolerance used by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ConstructionOptions {
    pub scale: f64,
    pub q0: f64,
    pub r0: f64,
    pub tol: f64,
    pub prefer_option: PreferOption,
}

impl Default for ConstructionOptions {
    fn default() -> Self {
        ConstructionOptions {
            scale: 1.0,
            q0: 0.0,
            r0: 0.0,
            tol: CLASSIFY_TOL,
            prefer_option: PreferOption::Auto,
        }
    }
}

/// One of ε, η, q, r: its signed value and whether the branch dictated it
/// (solved from the constraint or pinned to zero) or left it free.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamChoice {
    pub value: f64,
    pub constrained: bool,
}

impl ParamChoice {
    fn free(value: f64) -> Self {
        ParamChoice {
            value,
            constrained: false,
        }
    }

    fn pinned(value: f64) -> Self {
        ParamChoice {
            value,
            constrained: true,
        }
    }
}

/// Signed (ε, η, q, r) choices behind a construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FreeChoices {
    pub eps: ParamChoice,
    pub eta: ParamChoice,
    pub q: ParamChoice,
    pub r: ParamChoice,
}

/// A constructed zero-covariance pair together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstructionResult {
    pub case: CaseLabel,
    pub qa_params: ObservableParams,
    pub rb_params: ObservableParams,
    pub xi: f64,
    pub free_choices: FreeChoices,
    pub numerically_sensitive: bool,
}

/// ξ = cos((λ−φ−κ)/2) for the given parametrization.
pub fn xi_of(p: &StateParams) -> f64 {
    ((p.lambda - p.phi - p.kappa) / 2.0).cos()
}

/// Off-diagonal phases (s, v) that collapse the covariance to the single identity,
/// wrapped onto [0, 2π).
pub fn substitution_phases(p: &StateParams) -> (f64, f64) {
    let s = (-p.kappa + p.phi - p.lambda) / 2.0;
    let v = (p.kappa - p.phi - p.lambda) / 2.0;
    (crate::state::wrap_angle(s), crate::state::wrap_angle(v))
}

/// Tracks guard comparisons so near-boundary states can be flagged.
struct GuardTracker {
    tol: f64,
    sensitive: bool,
}

impl GuardTracker {
    fn new(tol: f64) -> Self {
        GuardTracker {
            tol,
            sensitive: false,
        }
    }

    fn is_zero(&mut self, g: f64) -> bool {
        let a = g.abs();
        if a <= self.tol {
            return true;
        }
        if a <= SENSITIVITY_WINDOW * self.tol {
            self.sensitive = true;
        }
        false
    }
}

/// Classification outcome plus the parametrization the construction formulas should use
/// (canonicalized only when the given signed representation fits no branch pattern).
struct Analysis {
    label: CaseLabel,
    params: StateParams,
    sensitive: bool,
}

fn analyze(p: &StateParams, tol: f64, prefer: PreferOption, depth: u8) -> Result<Analysis, ConstructionError> {
    let mut gt = GuardTracker::new(tol);
    let (al, be, ga, de) = (p.alpha, p.beta, p.gamma, p.delta);
    let d_minus = al * de - be * ga;
    let d_plus = al * de + be * ga;
    let xi = xi_of(p);

    let label = if !gt.is_zero(d_minus) {
        if !gt.is_zero(xi) {
            // 3.1: entangled with a live phase factor.
            if gt.is_zero(d_plus) {
                CaseLabel::C311
            } else {
                let dd = al * be - ga * de;
                let mm = al * ga - be * de;
                match (gt.is_zero(dd), gt.is_zero(mm)) {
                    (false, false) => match prefer {
                        PreferOption::A => CaseLabel::C312iOptA,
                        PreferOption::B => CaseLabel::C312iOptB,
                        PreferOption::Auto => {
                            if dd.abs() >= mm.abs() {
                                CaseLabel::C312iOptA
                            } else {
                                CaseLabel::C312iOptB
                            }
                        }
                    },
                    (false, true) => CaseLabel::C312ii,
                    (true, false) => CaseLabel::C312iii,
                    (true, true) => {
                        // αβ = γδ and αγ = βδ leave three shapes for nonnegative
                        // amplitudes; a signed representation can also realize
                        // α = −δ, β = −γ, which only the canonical form classifies.
                        if gt.is_zero(al) && gt.is_zero(de) {
                            CaseLabel::C312ivA
                        } else if gt.is_zero(be) && gt.is_zero(ga) {
                            CaseLabel::C312ivB
                        } else if gt.is_zero(al - de) && gt.is_zero(be - ga) {
                            let g_deg = 16.0 * al * al * be * be * xi * xi - 1.0;
                            if gt.is_zero(g_deg) {
                                CaseLabel::C312ivCDegenerate
                            } else {
                                CaseLabel::C312ivCGeneric
                            }
                        } else {
                            if depth > 0 {
                                return Err(ConstructionError::UnclassifiableState);
                            }
                            let canonical = from_amplitudes(&p.to_amplitudes())?;
                            let mut inner = analyze(&canonical, tol, prefer, depth + 1)?;
                            inner.sensitive |= gt.sensitive;
                            return Ok(inner);
                        }
                    }
                }
            }
        } else {
            // 3.2: the phase factor ξ vanishes.
            if gt.is_zero(d_plus) {
                CaseLabel::C321
            } else {
                CaseLabel::C322
            }
        }
    } else if gt.is_zero(xi) {
        // 3.3: αδ = βγ with ξ = 0.
        if gt.is_zero(be * ga) {
            CaseLabel::C331
        } else {
            CaseLabel::C332
        }
    } else {
        // 3.4: αδ = βγ with ξ ≠ 0. ξ = 1 is the separable alignment; a separable state
        // represented with λ−φ−κ = −2π instead lands at ξ = −1 and passes through (i).
        if gt.is_zero(xi - 1.0) {
            CaseLabel::C341Separable
        } else {
            let h = be * ga - xi * xi * (al * ga + be * de) * (al * be + ga * de);
            if gt.is_zero(h) {
                CaseLabel::C342i
            } else {
                CaseLabel::C342ii
            }
        }
    };

    Ok(Analysis {
        label,
        params: *p,
        sensitive: gt.sensitive,
    })
}

/// Case label for a validated state under the auto option preference.
pub fn classify(p: &StateParams, tol: f64) -> Result<CaseLabel, ConstructionError> {
    analyze(p, tol, PreferOption::Auto, 0).map(|a| a.label)
}

fn check_options(o: &ConstructionOptions) -> Result<(), ConstructionError> {
    if !(o.scale.is_finite() && o.q0.is_finite() && o.r0.is_finite() && o.tol.is_finite()) {
        return Err(ConstructionError::InvalidOptions("non-finite option".into()));
    }
    if o.scale.abs() <= 1e-12 {
        return Err(ConstructionError::InvalidOptions(
            "scale must be nonzero".into(),
        ));
    }
    if o.tol <= 0.0 {
        return Err(ConstructionError::InvalidOptions(
            "tol must be positive".into(),
        ));
    }
    Ok(())
}

/// Builds a zero-covariance local pair for the given state.
///
/// The branch constraints are solved with every free magnitude set to `options.scale`;
/// when a branch ties a product down, the first factor is fixed to scale and the second
/// solved. Signs produced by solving are absorbed into the observable phase by
/// [`ObservableParams::new`], the raw signed values stay visible in `free_choices`.
pub fn construct(
    p: &StateParams,
    options: &ConstructionOptions,
) -> Result<ConstructionResult, ConstructionError> {
    check_options(options)?;
    let p = p.validate()?;
    let analysis = analyze(&p, options.tol, options.prefer_option, 0)?;
    let w = &analysis.params;
    let (al, be, ga, de) = (w.alpha, w.beta, w.gamma, w.delta);
    let d_minus = al * de - be * ga;
    let d_plus = al * de + be * ga;
    let dd = al * be - ga * de;
    let mm = al * ga - be * de;
    let xi = xi_of(w);
    let sc = options.scale;

    use CaseLabel::*;
    let choices = match analysis.label {
        // q = r = 0 is forced: with αδ+βγ = 0 every remaining term carries q or r.
        C311 => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::free(sc),
            q: ParamChoice::pinned(0.0),
            r: ParamChoice::pinned(0.0),
        },
        // (αδ+βγ)ε = qξ(αβ−γδ), r = 0.
        C312iOptA => FreeChoices {
            eps: ParamChoice::pinned(sc * xi * dd / d_plus),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::pinned(0.0),
        },
        // (αδ+βγ)η = rξ(αγ−βδ), q = 0.
        C312iOptB => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::pinned(sc * xi * mm / d_plus),
            q: ParamChoice::pinned(0.0),
            r: ParamChoice::free(sc),
        },
        C312ii => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::pinned(0.0),
            q: ParamChoice::pinned(0.0),
            r: ParamChoice::free(sc),
        },
        C312iii => FreeChoices {
            eps: ParamChoice::pinned(0.0),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::pinned(0.0),
        },
        // 2βγ·εη = qr.
        C312ivA => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::pinned(2.0 * be * ga * sc),
        },
        // −2αδ·εη = qr.
        C312ivB => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::pinned(-2.0 * al * de * sc),
        },
        // 2(α²−β²)εη = (16α²β²ξ²−1)qr.
        C312ivCGeneric => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::pinned(
                2.0 * (al * al - be * be) * sc / (16.0 * al * al * be * be * xi * xi - 1.0),
            ),
        },
        // εη = 0 with both observables kept non-degenerate through the off-diagonals.
        C312ivCDegenerate => FreeChoices {
            eps: ParamChoice::pinned(0.0),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::free(sc),
        },
        C321 | C331 | C341Separable | C342i => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::free(sc),
        },
        // ξ = 0 leaves 2(αδ−βγ)εη + qr = 0 after dividing by αδ+βγ ≠ 0.
        C322 => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::free(sc),
            q: ParamChoice::free(sc),
            r: ParamChoice::pinned(-2.0 * d_minus * sc),
        },
        // qr = 0 suffices.
        C332 | C342ii => FreeChoices {
            eps: ParamChoice::free(sc),
            eta: ParamChoice::free(sc),
            q: ParamChoice::pinned(0.0),
            r: ParamChoice::free(sc),
        },
    };

    let (s, v) = substitution_phases(w);
    let qa_params = ObservableParams::new(options.q0, choices.eps.value, choices.q.value, s);
    let rb_params = ObservableParams::new(options.r0, choices.eta.value, choices.r.value, v);
    // Non-degeneracy is structural: every branch keeps ε or q (and η or r) at |scale|.
    assemble(&qa_params)?;
    assemble(&rb_params)?;

    Ok(ConstructionResult {
        case: analysis.label,
        qa_params,
        rb_params,
        xi,
        free_choices: choices,
        numerically_sensitive: analysis.sensitive,
    })
}

/// Runs the matrix oracle on a construction: assembles both observables and evaluates the
/// covariance on the state the construction was made for.
pub fn verify_construction(
    p: &StateParams,
    result: &ConstructionResult,
) -> Result<CorrelationReport, ConstructionError> {
    let state = p.validate()?.to_amplitudes();
    let qa = assemble(&result.qa_params)?;
    let rb = assemble(&result.rb_params)?;
    Ok(covariance(&state, &qa, &rb)?)
}

/// Fully expanded covariance polynomial: <XY> minus <X><Y> written term by term, with no
/// restriction on the observable phases. Agrees with the matrix oracle for every input.
pub fn zce2_residual(p: &StateParams, qa: &ObservableParams, rb: &ObservableParams) -> f64 {
    let (al, be, ga, de) = (p.alpha, p.beta, p.gamma, p.delta);
    let (phi, kap, lam) = (p.phi, p.kappa, p.lambda);
    let (qp, qm, q, s) = (qa.center + qa.eps, qa.center - qa.eps, qa.offdiag, qa.phase);
    let (rp, rm, r, v) = (rb.center + rb.eps, rb.center - rb.eps, rb.offdiag, rb.phase);

    let e_xy = al * al * qp * rp
        + be * be * qp * rm
        + ga * ga * qm * rp
        + de * de * qm * rm
        + 2.0 * al * be * (phi + v).cos() * qp * r
        + 2.0 * al * ga * (kap + s).cos() * q * rp
        + 2.0 * be * de * (lam - phi + s).cos() * q * rm
        + 2.0 * ga * de * (lam - kap + v).cos() * qm * r
        + 2.0 * al * de * (lam + s + v).cos() * q * r
        + 2.0 * be * ga * (kap - phi + s - v).cos() * q * r;
    let e_x = (al * al + be * be) * qp
        + (ga * ga + de * de) * qm
        + 2.0 * al * ga * (kap + s).cos() * q
        + 2.0 * be * de * (lam - phi + s).cos() * q;
    let e_y = (al * al + ga * ga) * rp
        + (be * be + de * de) * rm
        + 2.0 * al * be * (phi + v).cos() * r
        + 2.0 * ga * de * (lam - kap + v).cos() * r;
    e_xy - e_x * e_y
}

/// Residual of the simplified identity at the substituted phases. For normalized params
/// it equals exactly half the matrix covariance of the corresponding pair, for any centers.
pub fn zce3_residual(p: &StateParams, eps: f64, eta: f64, q: f64, r: f64) -> f64 {
    let (al, be, ga, de) = (p.alpha, p.beta, p.gamma, p.delta);
    let d_minus = al * de - be * ga;
    let d_plus = al * de + be * ga;
    let dd = al * be - ga * de;
    let mm = al * ga - be * de;
    let pp = al * ga + be * de;
    let ss = al * be + ga * de;
    let xi = xi_of(p);
    let lhs = 2.0 * d_minus * d_plus * eps * eta + d_plus * q * r;
    let rhs = 2.0 * d_minus * dd * xi * q * eta
        + 2.0 * d_minus * mm * xi * r * eps
        + 2.0 * pp * ss * xi * xi * q * r;
    lhs - rhs
}
