//! Local observables on either qubit and the correlation oracle
//!
//! An observable on one qubit is the Hermitian 2×2 matrix [[Q+, q e^{is}], [q e^{-is}, Q-]]
//! with Q± = center ± eps. The pair acts on the joint space as X = Q⊗1 and Y = 1⊗R, and the
//! covariance <XY> − <X><Y> is evaluated by dense matrix-vector products. That path is the
//! defining relation everything else in this crate is checked against.

use crate::state::Amplitudes;
use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// An observable is degenerate (a multiple of the identity) when eps² + offdiag² ≤ this.
pub const DEGENERACY_TOL: f64 = 1e-24;

/// Imaginary residue on a Hermitian expectation value larger than this is a logic error.
pub const IM_ERROR_TOL: f64 = 1e-10;

/// Imaginary residue expected from mere rounding noise; tests hold expectations below this.
pub const IM_NOISE_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum ObservableError {
    #[error("observable is a multiple of the identity (eps² + offdiag² ≤ {DEGENERACY_TOL})")]
    DegenerateObservable,
    #[error("expectation value has imaginary residue {0}, input is not Hermitian")]
    NonHermitianInput(f64),
}

/// Parameters (center, eps, offdiag, phase) of a 2×2 Hermitian observable.
///
/// `offdiag` is stored nonnegative; construct through [`ObservableParams::new`] (or serde),
/// which absorbs a negative off-diagonal magnitude into a π phase shift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "RawObservableParams")]
pub struct ObservableParams {
    pub center: f64,
    pub eps: f64,
    pub offdiag: f64,
    pub phase: f64,
}

#[derive(Deserialize)]
struct RawObservableParams {
    center: f64,
    eps: f64,
    offdiag: f64,
    phase: f64,
}

impl From<RawObservableParams> for ObservableParams {
    fn from(r: RawObservableParams) -> Self {
        ObservableParams::new(r.center, r.eps, r.offdiag, r.phase)
    }
}

impl ObservableParams {
    /// Accepts a signed off-diagonal value; the sign moves into the phase.
    pub fn new(center: f64, eps: f64, offdiag: f64, phase: f64) -> Self {
        let (offdiag, phase) = if offdiag < 0.0 {
            (-offdiag, crate::state::wrap_angle(phase + PI))
        } else {
            (offdiag, crate::state::wrap_angle(phase))
        };
        ObservableParams {
            center,
            eps,
            offdiag,
            phase,
        }
    }

    /// σx as observable parameters.
    pub fn pauli_x() -> Self {
        ObservableParams::new(0.0, 0.0, 1.0, 0.0)
    }

    /// σz as observable parameters.
    pub fn pauli_z() -> Self {
        ObservableParams::new(0.0, 1.0, 0.0, 0.0)
    }
}

/// Explicit entries of an assembled 2×2 Hermitian observable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianObservable {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl HermitianObservable {
    pub fn matrix(&self) -> Matrix2<Complex64> {
        Matrix2::new(self.m11, self.m12, self.m21, self.m22)
    }
}

/// Builds the matrix [[center+eps, offdiag e^{iφ}], [offdiag e^{-iφ}, center−eps]].
///
/// Fails when the parameters describe a multiple of the identity: such an observable has a
/// single eigenvalue and can never witness anything.
pub fn assemble(p: &ObservableParams) -> Result<HermitianObservable, ObservableError> {
    if p.eps * p.eps + p.offdiag * p.offdiag <= DEGENERACY_TOL {
        return Err(ObservableError::DegenerateObservable);
    }
    let off = Complex64::from_polar(p.offdiag, p.phase);
    Ok(HermitianObservable {
        m11: Complex64::new(p.center + p.eps, 0.0),
        m12: off,
        m21: off.conj(),
        m22: Complex64::new(p.center - p.eps, 0.0),
    })
}

/// Lifts (Q_A, R_B) to the joint space: X = Q_A ⊗ 1 and Y = 1 ⊗ R_B.
pub fn local_pair(
    qa: &HermitianObservable,
    rb: &HermitianObservable,
) -> (Matrix4<Complex64>, Matrix4<Complex64>) {
    let id = Matrix2::<Complex64>::identity();
    (qa.matrix().kronecker(&id), id.kronecker(&rb.matrix()))
}

fn state_vector(state: &Amplitudes) -> Vector4<Complex64> {
    Vector4::new(state.omega11, state.omega12, state.omega21, state.omega22)
}

/// <ψ|op|ψ> for a Hermitian 4×4 operator.
///
/// The imaginary residue is rounding noise on Hermitian input; a residue beyond
/// [`IM_ERROR_TOL`] means the operator was not Hermitian and is reported as an error.
pub fn expectation(state: &Amplitudes, op: &Matrix4<Complex64>) -> Result<f64, ObservableError> {
    let psi = state_vector(state);
    let value = (psi.adjoint() * op * psi)[(0, 0)];
    if value.im.abs() > IM_ERROR_TOL {
        return Err(ObservableError::NonHermitianInput(value.im.abs()));
    }
    Ok(value.re)
}

/// The three expectations and the covariance of a local pair on one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub e_xy: f64,
    pub e_x: f64,
    pub e_y: f64,
    pub covariance: f64,
}

/// Covariance <XY> − <X><Y> of X = Q_A⊗1 and Y = 1⊗R_B on a normalized state.
///
/// XY = Q_A ⊗ R_B since the factors act on different qubits.
pub fn covariance(
    state: &Amplitudes,
    qa: &HermitianObservable,
    rb: &HermitianObservable,
) -> Result<CorrelationReport, ObservableError> {
    let (x, y) = local_pair(qa, rb);
    let xy = qa.matrix().kronecker(&rb.matrix());
    let e_xy = expectation(state, &xy)?;
    let e_x = expectation(state, &x)?;
    let e_y = expectation(state, &y)?;
    Ok(CorrelationReport {
        e_xy,
        e_x,
        e_y,
        covariance: e_xy - e_x * e_y,
    })
}
