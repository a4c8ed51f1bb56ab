//! Two-qubit pure states in the amplitude/phase parametrization
//!
//! A state is written `α|a1b1> + βe^{iφ}|a1b2> + γe^{iκ}|a2b1> + δe^{iλ}|a2b2>` with real
//! (possibly signed) amplitudes and phases in [0, 2π). The same physical state admits many
//! parametrizations; [`from_amplitudes`] picks the canonical one (nonnegative amplitudes,
//! first nonzero component real and positive).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use thiserror::Error;

/// Acceptance budget for the squared norm: inputs with |Σ amplitude² − 1| inside this budget
/// are renormalized, anything further off is rejected.
pub const NORM_TOL: f64 = 1e-9;

/// Default tolerance for the separability determinant test.
pub const SEPARABILITY_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum StateError {
    #[error("state parameters must be finite")]
    NonFinite,
    #[error("squared amplitude norm {0} is not within {NORM_TOL} of 1")]
    NormViolation(f64),
    #[error("amplitude vector is zero")]
    ZeroVector,
}

/// Amplitude/phase parameters of a two-qubit pure state.
///
/// Amplitudes may be signed; a negative amplitude is the same state as its absolute value
/// with the matching phase shifted by π. Branch classification is representation-sensitive,
/// the constructed covariance is not.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub phi: f64,
    pub kappa: f64,
    pub lambda: f64,
}

/// Complex amplitudes (ω11, ω12, ω21, ω22) of a two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "AmplitudesRepr", into = "AmplitudesRepr")]
pub struct Amplitudes {
    pub omega11: Complex64,
    pub omega12: Complex64,
    pub omega21: Complex64,
    pub omega22: Complex64,
}

/// Wire format: {"amplitudes": [[re, im]; 4]} in (11, 12, 21, 22) order.
#[derive(Serialize, Deserialize)]
struct AmplitudesRepr {
    amplitudes: [[f64; 2]; 4],
}

impl From<AmplitudesRepr> for Amplitudes {
    fn from(r: AmplitudesRepr) -> Self {
        let c = |p: [f64; 2]| Complex64::new(p[0], p[1]);
        Amplitudes {
            omega11: c(r.amplitudes[0]),
            omega12: c(r.amplitudes[1]),
            omega21: c(r.amplitudes[2]),
            omega22: c(r.amplitudes[3]),
        }
    }
}

impl From<Amplitudes> for AmplitudesRepr {
    fn from(a: Amplitudes) -> Self {
        let p = |z: Complex64| [z.re, z.im];
        AmplitudesRepr {
            amplitudes: [p(a.omega11), p(a.omega12), p(a.omega21), p(a.omega22)],
        }
    }
}

impl Amplitudes {
    pub fn as_array(&self) -> [Complex64; 4] {
        [self.omega11, self.omega12, self.omega21, self.omega22]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.as_array().iter().map(|z| z.norm_sqr()).sum()
    }
}

/// Outcome of the separability test.
///
/// `criterion_residuals` carries the two residuals of the equivalent two-condition form
/// (|αδ−βγ|, angular distance of λ from (φ+κ) mod 2π); they are diagnostics, the verdict
/// itself comes from the determinant magnitude alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparabilityReport {
    pub is_separable: bool,
    pub determinant_magnitude: f64,
    pub criterion_residuals: (f64, f64),
}

/// Maps an angle onto [0, 2π).
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    // rem_euclid can return TAU itself when x is a tiny negative number, and
    // -0.0 when x is a negative multiple of TAU; normalize both.
    if r >= TAU {
        r - TAU
    } else {
        r + 0.0
    }
}

/// Distance between two angles on the circle, in [0, π].
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = wrap_angle(a - b);
    d.min(TAU - d)
}

impl StateParams {
    pub fn new(
        alpha: f64,
        beta: f64,
        gamma: f64,
        delta: f64,
        phi: f64,
        kappa: f64,
        lambda: f64,
    ) -> Self {
        StateParams {
            alpha,
            beta,
            gamma,
            delta,
            phi,
            kappa,
            lambda,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.alpha * self.alpha
            + self.beta * self.beta
            + self.gamma * self.gamma
            + self.delta * self.delta
    }

    /// Checks finiteness and normalization, wraps phases onto [0, 2π).
    ///
    /// A squared norm within [`NORM_TOL`] of 1 is silently renormalized; anything further
    /// off is a [`StateError::NormViolation`].
    pub fn validate(&self) -> Result<StateParams, StateError> {
        let all = [
            self.alpha,
            self.beta,
            self.gamma,
            self.delta,
            self.phi,
            self.kappa,
            self.lambda,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(StateError::NonFinite);
        }
        let n2 = self.norm_sqr();
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(StateError::NormViolation(n2));
        }
        let scale = 1.0 / n2.sqrt();
        Ok(StateParams {
            alpha: self.alpha * scale,
            beta: self.beta * scale,
            gamma: self.gamma * scale,
            delta: self.delta * scale,
            phi: wrap_angle(self.phi),
            kappa: wrap_angle(self.kappa),
            lambda: wrap_angle(self.lambda),
        })
    }

    /// Complex amplitude vector (ω11, ω12, ω21, ω22) of this parametrization.
    pub fn to_amplitudes(&self) -> Amplitudes {
        Amplitudes {
            omega11: Complex64::new(self.alpha, 0.0),
            omega12: Complex64::from_polar(self.beta, self.phi),
            omega21: Complex64::from_polar(self.gamma, self.kappa),
            omega22: Complex64::from_polar(self.delta, self.lambda),
        }
    }
}

/// Canonical parameters for a normalized amplitude vector.
///
/// The global phase is fixed by rotating the first nonzero amplitude (in ω11, ω12, ω21, ω22
/// order) onto the positive real axis; magnitudes land in α..δ, relative phases in φ, κ, λ.
/// Phases attached to zero amplitudes are set to 0.
pub fn from_amplitudes(amps: &Amplitudes) -> Result<StateParams, StateError> {
    let v = amps.as_array();
    if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(StateError::NonFinite);
    }
    let n2 = amps.norm_sqr();
    if n2 == 0.0 {
        return Err(StateError::ZeroVector);
    }
    if (n2 - 1.0).abs() > NORM_TOL {
        return Err(StateError::NormViolation(n2));
    }
    let scale = 1.0 / n2.sqrt();
    let first_arg = v
        .iter()
        .find(|z| z.norm() > 0.0)
        .map(|z| z.arg())
        .ok_or(StateError::ZeroVector)?;
    // Phase differences instead of an explicit rotation: the leading amplitude's
    // phase comes out exactly zero.
    let phase_of = |z: &Complex64| {
        if z.norm() > 0.0 {
            wrap_angle(z.arg() - first_arg)
        } else {
            0.0
        }
    };
    Ok(StateParams {
        alpha: v[0].norm() * scale,
        beta: v[1].norm() * scale,
        gamma: v[2].norm() * scale,
        delta: v[3].norm() * scale,
        phi: phase_of(&v[1]),
        kappa: phase_of(&v[2]),
        lambda: phase_of(&v[3]),
    })
}

/// Separability test via the amplitude determinant |ω11ω22 − ω12ω21|.
///
/// The state is a product state exactly when the determinant vanishes. For canonical
/// (nonnegative) parameters with αδ ≠ 0 or βγ ≠ 0 this is equivalent to the two-condition
/// form αδ = βγ together with λ ≡ (φ+κ) mod 2π, whose residuals are reported alongside.
pub fn separability(params: &StateParams, tol: f64) -> SeparabilityReport {
    let a = params.to_amplitudes();
    let det = a.omega11 * a.omega22 - a.omega12 * a.omega21;
    let determinant_magnitude = det.norm();
    let amp_residual = (params.alpha * params.delta - params.beta * params.gamma).abs();
    let phase_residual = angular_distance(params.lambda, params.phi + params.kappa);
    SeparabilityReport {
        is_separable: determinant_magnitude <= tol,
        determinant_magnitude,
        criterion_residuals: (amp_residual, phase_residual),
    }
}
