//! One representative state per classification label
//!
//! The catalog is the ground truth used by the integration tests and the case-tree
//! example: every label in [`CaseLabel::ALL`] appears exactly once, each fixture
//! classifies to its stated label, and each constructed pair passes verification.

use crate::construction::CaseLabel;
use crate::state::StateParams;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

#[derive(Debug, Clone)]
pub struct CaseFixture {
    pub label: CaseLabel,
    pub params: StateParams,
    /// What makes this state land in its branch.
    pub note: &'static str,
}

/// Offset used by the near-degenerate fixture; small enough to sit inside the
/// classifier tolerance of its branch guard, large enough to keep the state distinct.
pub const DEGENERATE_OFFSET: f64 = 1e-7;

pub fn case_tree() -> Vec<CaseFixture> {
    let h = FRAC_1_SQRT_2;
    let b14 = 0.14f64.sqrt();
    let b17 = 0.17f64.sqrt();
    let hi = (0.25 + DEGENERATE_OFFSET).sqrt();
    let lo = (0.25 - DEGENERATE_OFFSET).sqrt();
    vec![
        CaseFixture {
            label: CaseLabel::C311,
            params: StateParams::new(0.5, 0.5, -0.5, 0.5, 0.0, 0.0, 0.0),
            note: "entangled, αδ+βγ = 0: both off-diagonal strengths forced to zero",
        },
        CaseFixture {
            label: CaseLabel::C312iOptA,
            params: StateParams::new(0.7, 0.5, 0.3, b17, 0.0, 0.0, 0.0),
            note: "generic branch, |αβ−γδ| dominates: solve ε with r = 0",
        },
        CaseFixture {
            label: CaseLabel::C312iOptB,
            params: StateParams::new(0.7, 0.3, 0.5, b17, 0.0, 0.0, 0.0),
            note: "generic branch, |αγ−βδ| dominates: solve η with q = 0",
        },
        CaseFixture {
            label: CaseLabel::C312ii,
            params: StateParams::new(0.8, 0.4, 0.2, 0.4, 0.0, 0.0, 0.0),
            note: "αγ = βδ exactly: ε and r stay free, η = q = 0",
        },
        CaseFixture {
            label: CaseLabel::C312iii,
            params: StateParams::new(0.8, 0.2, 0.4, 0.4, 0.0, 0.0, 0.0),
            note: "αβ = γδ exactly: η and q stay free, ε = r = 0",
        },
        CaseFixture {
            label: CaseLabel::C312ivA,
            params: StateParams::new(0.0, h, h, 0.0, 0.0, 0.0, 0.0),
            note: "anti-diagonal state (α = δ = 0): r = 2βγ·scale",
        },
        CaseFixture {
            label: CaseLabel::C312ivB,
            params: StateParams::new(h, 0.0, 0.0, h, 0.0, 0.0, 0.0),
            note: "diagonal state (β = γ = 0): r = -2αδ·scale",
        },
        CaseFixture {
            label: CaseLabel::C312ivCGeneric,
            params: StateParams::new(0.6, b14, b14, 0.6, 0.0, 0.0, 0.0),
            note: "α = δ, β = γ with 16α²β²ξ² ≠ 1: r solved from the balance equation",
        },
        CaseFixture {
            label: CaseLabel::C312ivCDegenerate,
            params: StateParams::new(hi, lo, lo, hi, 0.0, 0.0, 0.0),
            note: "α = δ, β = γ with 16α²β²ξ² = 1 inside tolerance: ε = 0 instead",
        },
        CaseFixture {
            label: CaseLabel::C321,
            params: StateParams::new(0.5, 0.5, -0.5, 0.5, 0.0, 0.0, PI),
            note: "ξ = 0 and αδ+βγ = 0: every choice of ε, η, q, r works",
        },
        CaseFixture {
            label: CaseLabel::C322,
            params: StateParams::new(h, 0.0, 0.0, h, 0.0, 0.0, PI),
            note: "ξ = 0, αδ+βγ ≠ 0: r = -2(αδ-βγ)·scale balances the diagonal term",
        },
        CaseFixture {
            label: CaseLabel::C331,
            params: StateParams::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, PI),
            note: "αδ = βγ = 0 and ξ = 0: basis state, unconstrained",
        },
        CaseFixture {
            label: CaseLabel::C332,
            params: StateParams::new(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, PI),
            note: "αδ = βγ ≠ 0 and ξ = 0: q = 0 suffices",
        },
        CaseFixture {
            label: CaseLabel::C341Separable,
            params: StateParams::new(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 0.0),
            note: "product state with ξ = 1: zero covariance for every local pair",
        },
        CaseFixture {
            label: CaseLabel::C342i,
            params: StateParams::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, FRAC_PI_2),
            note: "αδ = βγ, ξ ∉ {0, 1}, βγ = ξ²(αγ+βδ)(αβ+γδ): unconstrained",
        },
        CaseFixture {
            label: CaseLabel::C342ii,
            params: StateParams::new(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, FRAC_PI_2),
            note: "αδ = βγ, ξ ∉ {0, 1}, residual phase term survives: q = 0",
        },
    ]
}

pub fn fixture(label: CaseLabel) -> CaseFixture {
    case_tree()
        .into_iter()
        .find(|f| f.label == label)
        .expect("catalog covers every label")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{
        classify, construct, verify_construction, ConstructionOptions, CLASSIFY_TOL,
    };

    #[test]
    fn catalog_covers_every_label_once() {
        let labels: Vec<CaseLabel> = case_tree().iter().map(|f| f.label).collect();
        assert_eq!(labels.len(), CaseLabel::ALL.len());
        for label in CaseLabel::ALL {
            assert_eq!(labels.iter().filter(|l| **l == label).count(), 1, "{label}");
        }
    }

    #[test]
    fn fixtures_classify_to_their_labels() {
        for f in case_tree() {
            let params = f.params.validate().unwrap();
            assert_eq!(classify(&params, CLASSIFY_TOL).unwrap(), f.label, "{}", f.note);
        }
    }

    #[test]
    fn fixtures_construct_and_verify() {
        for f in case_tree() {
            let result = construct(&f.params, &ConstructionOptions::default()).unwrap();
            assert_eq!(result.case, f.label);
            let check = verify_construction(&f.params, &result).unwrap();
            assert!(
                check.covariance.abs() <= 1e-12,
                "{}: covariance {}",
                f.label,
                check.covariance
            );
        }
    }

    #[test]
    fn mirrored_phase_alignment_lands_in_the_free_branch() {
        // λ-φ-κ = -2π gives ξ = -1; a product state there must stay unconstrained.
        let params = StateParams::new(0.5, 0.5, 0.5, 0.5, PI, PI, 0.0);
        let valid = params.validate().unwrap();
        assert_eq!(classify(&valid, CLASSIFY_TOL).unwrap(), CaseLabel::C342i);
        let result = construct(&params, &ConstructionOptions::default()).unwrap();
        let check = verify_construction(&params, &result).unwrap();
        assert!(check.covariance.abs() <= 1e-12);
    }
}
