//! The four Bell states and their explicit zero-covariance operator pairs
//!
//! Φ± = (|a1b1> ± |a2b2>)/√2 and Ψ± = (|a1b2> ± |a2b1>)/√2. For Φ⁺ and Ψ⁻ the pair
//! Q = Q₀·1 + m(σx−σz), R = R₀·1 + m(σx+σz) has zero covariance; for Φ⁻ and Ψ⁺ both
//! operators are Q₀/R₀-shifted copies of m(σx+σz).

use crate::observables::ObservableParams;
use crate::state::StateParams;
use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    /// Signed parametrization with all phases zero; minus states carry a negative amplitude.
    pub fn params_signed(&self) -> StateParams {
        let h = FRAC_1_SQRT_2;
        match self {
            BellState::PhiPlus => StateParams::new(h, 0.0, 0.0, h, 0.0, 0.0, 0.0),
            BellState::PhiMinus => StateParams::new(h, 0.0, 0.0, -h, 0.0, 0.0, 0.0),
            BellState::PsiPlus => StateParams::new(0.0, h, h, 0.0, 0.0, 0.0, 0.0),
            BellState::PsiMinus => StateParams::new(0.0, h, -h, 0.0, 0.0, 0.0, 0.0),
        }
    }

    /// Canonical parametrization: nonnegative amplitudes, the sign moved into a π phase.
    pub fn params_canonical(&self) -> StateParams {
        let h = FRAC_1_SQRT_2;
        match self {
            BellState::PhiPlus => StateParams::new(h, 0.0, 0.0, h, 0.0, 0.0, 0.0),
            BellState::PhiMinus => StateParams::new(h, 0.0, 0.0, h, 0.0, 0.0, PI),
            BellState::PsiPlus => StateParams::new(0.0, h, h, 0.0, 0.0, 0.0, 0.0),
            BellState::PsiMinus => StateParams::new(0.0, h, h, 0.0, 0.0, PI, 0.0),
        }
    }

    /// The explicit operator pair (Q_A, R_B) with strength m and centers q0, r0.
    pub fn operator_pair(&self, m: f64, q0: f64, r0: f64) -> (ObservableParams, ObservableParams) {
        let rb = ObservableParams::new(r0, m, m, 0.0); // R₀·1 + m(σx+σz)
        let qa = match self {
            // Q₀·1 + m(σx−σz)
            BellState::PhiPlus | BellState::PsiMinus => ObservableParams::new(q0, -m, m, 0.0),
            // Q₀·1 + m(σx+σz)
            BellState::PhiMinus | BellState::PsiPlus => ObservableParams::new(q0, m, m, 0.0),
        };
        (qa, rb)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            BellState::PhiPlus => "phi+",
            BellState::PhiMinus => "phi-",
            BellState::PsiPlus => "psi+",
            BellState::PsiMinus => "psi-",
        }
    }
}

impl fmt::Display for BellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BellState {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "phi+" | "phiplus" => Ok(BellState::PhiPlus),
            "phi-" | "phiminus" => Ok(BellState::PhiMinus),
            "psi+" | "psiplus" => Ok(BellState::PsiPlus),
            "psi-" | "psiminus" => Ok(BellState::PsiMinus),
            other => Err(format!(
                "unknown Bell state {other:?}, expected phi+, phi-, psi+ or psi-"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{classify, CaseLabel, CLASSIFY_TOL};
    use crate::observables::{assemble, covariance};

    #[test]
    fn operator_pairs_cancel_correlations_exactly() {
        for bell in BellState::ALL {
            for (m, q0, r0) in [(1.0, 0.0, 0.0), (2.5, 0.7, -1.2)] {
                let (qa, rb) = bell.operator_pair(m, q0, r0);
                for params in [bell.params_signed(), bell.params_canonical()] {
                    let r = covariance(
                        &params.to_amplitudes(),
                        &assemble(&qa).unwrap(),
                        &assemble(&rb).unwrap(),
                    )
                    .unwrap();
                    assert!(
                        r.covariance.abs() < 1e-14,
                        "{bell} m={m}: covariance {}",
                        r.covariance
                    );
                }
            }
        }
    }

    #[test]
    fn signed_forms_classify_as_stated() {
        for bell in [BellState::PhiPlus, BellState::PhiMinus] {
            assert_eq!(
                classify(&bell.params_signed().validate().unwrap(), CLASSIFY_TOL).unwrap(),
                CaseLabel::C312ivB
            );
        }
        for bell in [BellState::PsiPlus, BellState::PsiMinus] {
            assert_eq!(
                classify(&bell.params_signed().validate().unwrap(), CLASSIFY_TOL).unwrap(),
                CaseLabel::C312ivA
            );
        }
    }

    #[test]
    fn signed_and_canonical_forms_are_the_same_vector() {
        for bell in BellState::ALL {
            let a = bell.params_signed().to_amplitudes();
            let b = bell.params_canonical().to_amplitudes();
            let overlap = a.omega11 * b.omega11.conj()
                + a.omega12 * b.omega12.conj()
                + a.omega21 * b.omega21.conj()
                + a.omega22 * b.omega22.conj();
            assert!((overlap.norm() - 1.0).abs() < 1e-14, "{bell}");
        }
    }

    #[test]
    fn selector_parsing() {
        assert_eq!("phi+".parse::<BellState>().unwrap(), BellState::PhiPlus);
        assert_eq!("PSI-".parse::<BellState>().unwrap(), BellState::PsiMinus);
        assert!("omega".parse::<BellState>().is_err());
    }
}
