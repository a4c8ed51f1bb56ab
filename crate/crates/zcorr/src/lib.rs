//! Zero-correlation local observables for entangled two-qubit states
//!
//! Any entangled pure state of two qubits admits a pair of non-trivial local
//! observables X = Q_A ⊗ 1 and Y = 1 ⊗ R_B whose correlation vanishes:
//! <XY> - <X><Y> = 0. This crate classifies a state into the branch of the case
//! tree that decides which observable parameters stay free, constructs such a
//! pair explicitly, and verifies the result against a dense matrix oracle. The
//! classical counterpart shows the contrast: a dependent pair of binary random
//! variables always has covariance (x1-x2)(y1-y2)(p11·p22 - p12·p21) ≠ 0.
//!
//! Start with the runnable examples:
//!
//! - `construct_for_state`: classify one state and build its zero-covariance pair
//! - `bell_operator_pairs`: the explicit operator pairs for all four Bell states
//! - `case_tree_tour`: one representative state per branch of the case tree
//! - `soundness_campaign`: seeded random sweep, thousands of states, max residual
//! - `classical_never_zero`: why dependent 2x2 distributions cannot reach zero
//! - `separability_diagnostics`: the determinant criterion on the state coefficients
//! - `identity_crosscheck`: expanded covariance polynomials vs the matrix oracle
//!
//! The same operations are scriptable through the thin `zcorr` binary; run
//! `zcorr --help` for the subcommands.

pub mod bell;
pub mod classical;
pub mod cli;
pub mod construction;
pub mod fixtures;
pub mod observables;
pub mod sampling;
pub mod state;

pub use bell::BellState;
pub use classical::{ClassicalReport, JointDist2x2};
pub use construction::{
    classify, construct, verify_construction, CaseLabel, ConstructionOptions, ConstructionResult,
    PreferOption,
};
pub use observables::{assemble, covariance, CorrelationReport, ObservableParams};
pub use state::{separability, Amplitudes, SeparabilityReport, StateParams};
