//! Classical 2×2 joint distributions: the impossibility side of the story
//!
//! For two binary random variables the covariance factors exactly as
//! Cov(X,Y) = (x1−x2)(y1−y2)(p11·p22 − p12·p21), and the determinant vanishes precisely
//! when the distribution is independent. Dependent binary variables therefore can never be
//! zero-correlated, in contrast to the entangled quantum pairs built in [`crate::construction`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Probabilities must sum to 1 within this.
pub const PROB_SUM_TOL: f64 = 1e-12;

/// Outcome values on each side must be separated by more than this.
pub const VALUE_TOL: f64 = 1e-12;

/// The factorization identity is asserted to this (scaled by the value spread).
pub const FACTORIZATION_TOL: f64 = 1e-13;

#[derive(Debug, Error, PartialEq)]
pub enum ClassicalError {
    #[error("probabilities and values must be finite")]
    NonFinite,
    #[error("probabilities must be nonnegative, got {0}")]
    NegativeProbability(f64),
    #[error("probabilities sum to {0}, not 1")]
    NotNormalized(f64),
    #[error("outcome values on a side coincide (separation ≤ {VALUE_TOL})")]
    DegenerateValues,
}

/// Joint distribution of binary X ∈ {x1, x2} and Y ∈ {y1, y2}; p_ij = P(X = x_i, Y = y_j).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "JointDistRepr", into = "JointDistRepr")]
pub struct JointDist2x2 {
    pub p11: f64,
    pub p12: f64,
    pub p21: f64,
    pub p22: f64,
    pub x1: f64,
    pub x2: f64,
    pub y1: f64,
    pub y2: f64,
}

/// Wire format: {"p": [p11, p12, p21, p22], "x": [x1, x2], "y": [y1, y2]}.
#[derive(Serialize, Deserialize)]
struct JointDistRepr {
    p: [f64; 4],
    x: [f64; 2],
    y: [f64; 2],
}

impl TryFrom<JointDistRepr> for JointDist2x2 {
    type Error = ClassicalError;

    fn try_from(r: JointDistRepr) -> Result<Self, Self::Error> {
        JointDist2x2::new(r.p, r.x, r.y)
    }
}

impl From<JointDist2x2> for JointDistRepr {
    fn from(d: JointDist2x2) -> Self {
        JointDistRepr {
            p: [d.p11, d.p12, d.p21, d.p22],
            x: [d.x1, d.x2],
            y: [d.y1, d.y2],
        }
    }
}

/// Marginal probabilities of both sides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Marginals {
    pub px1: f64,
    pub px2: f64,
    pub py1: f64,
    pub py2: f64,
}

/// Moments, covariance, and the independence verdict of one distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalReport {
    pub e_xy: f64,
    pub e_x: f64,
    pub e_y: f64,
    pub covariance: f64,
    pub determinant: f64,
    pub is_independent: bool,
}

impl JointDist2x2 {
    pub fn new(p: [f64; 4], x: [f64; 2], y: [f64; 2]) -> Result<Self, ClassicalError> {
        if p.iter().chain(x.iter()).chain(y.iter()).any(|v| !v.is_finite()) {
            return Err(ClassicalError::NonFinite);
        }
        if let Some(neg) = p.iter().find(|v| **v < 0.0) {
            return Err(ClassicalError::NegativeProbability(*neg));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(ClassicalError::NotNormalized(sum));
        }
        if (x[0] - x[1]).abs() <= VALUE_TOL || (y[0] - y[1]).abs() <= VALUE_TOL {
            return Err(ClassicalError::DegenerateValues);
        }
        Ok(JointDist2x2 {
            p11: p[0],
            p12: p[1],
            p21: p[2],
            p22: p[3],
            x1: x[0],
            x2: x[1],
            y1: y[0],
            y2: y[1],
        })
    }

    /// p11·p22 − p12·p21; zero exactly for independent distributions.
    pub fn determinant(&self) -> f64 {
        self.p11 * self.p22 - self.p12 * self.p21
    }

    pub fn marginals(&self) -> Marginals {
        Marginals {
            px1: self.p11 + self.p12,
            px2: self.p21 + self.p22,
            py1: self.p11 + self.p21,
            py2: self.p12 + self.p22,
        }
    }

    /// Moments and the independence verdict (|determinant| ≤ tol).
    ///
    /// The covariance is computed from the moments; the factorization identity
    /// (x1−x2)(y1−y2)·det ties it to the determinant and is checked on every call.
    pub fn analyze(&self, tol: f64) -> ClassicalReport {
        let m = self.marginals();
        let e_x = m.px1 * self.x1 + m.px2 * self.x2;
        let e_y = m.py1 * self.y1 + m.py2 * self.y2;
        let e_xy = self.p11 * self.x1 * self.y1
            + self.p12 * self.x1 * self.y2
            + self.p21 * self.x2 * self.y1
            + self.p22 * self.x2 * self.y2;
        let covariance = e_xy - e_x * e_y;
        let determinant = self.determinant();
        let spread = (self.x1 - self.x2) * (self.y1 - self.y2);
        debug_assert!(
            (covariance - spread * determinant).abs()
                <= FACTORIZATION_TOL * spread.abs().max(1.0),
            "covariance {covariance} drifted from factorization {}",
            spread * determinant
        );
        ClassicalReport {
            e_xy,
            e_x,
            e_y,
            covariance,
            determinant,
            is_independent: determinant.abs() <= tol,
        }
    }

    /// |Cov(X,Y)|, which by the factorization identity is bounded below by
    /// |x1−x2|·|y1−y2|·|det|: strictly positive for every dependent distribution.
    pub fn dependence_gap(&self) -> Result<f64, ClassicalError> {
        if (self.x1 - self.x2).abs() <= VALUE_TOL || (self.y1 - self.y2).abs() <= VALUE_TOL {
            return Err(ClassicalError::DegenerateValues);
        }
        Ok(self.analyze(0.0).covariance.abs())
    }
}
