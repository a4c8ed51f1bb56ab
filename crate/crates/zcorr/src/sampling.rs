//! Seeded random generators for states, observables, and 2x2 joint distributions
//!
//! Every campaign draw goes through [`trial_rng`], which gives each trial its own
//! ChaCha8 stream under one seed. Replays are exact no matter how many values an
//! individual trial consumes.

use crate::classical::JointDist2x2;
use crate::observables::ObservableParams;
use crate::state::{from_amplitudes, Amplitudes, StateParams};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::TAU;

/// Minimum value separation guaranteed by the joint-distribution generators.
pub const MIN_VALUE_SEPARATION: f64 = 0.25;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn normal(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Uniform draw from the full state space: four complex standard normals, normalized.
pub fn random_amplitudes(rng: &mut impl Rng) -> Amplitudes {
    loop {
        let raw: [Complex64; 4] =
            std::array::from_fn(|_| Complex64::new(normal(rng), normal(rng)));
        let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return Amplitudes {
                omega11: raw[0] / norm,
                omega12: raw[1] / norm,
                omega21: raw[2] / norm,
                omega22: raw[3] / norm,
            };
        }
    }
}

/// Random state in canonical parameters (nonnegative amplitudes, phases in [0, 2π)).
pub fn random_canonical_state(rng: &mut impl Rng) -> StateParams {
    from_amplitudes(&random_amplitudes(rng)).expect("normalized draw is always convertible")
}

/// Random state with signed real amplitudes on the unit 3-sphere and uniform phases.
pub fn random_signed_state(rng: &mut impl Rng) -> StateParams {
    loop {
        let raw: [f64; 4] = std::array::from_fn(|_| normal(rng));
        let norm = raw.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return StateParams::new(
                raw[0] / norm,
                raw[1] / norm,
                raw[2] / norm,
                raw[3] / norm,
                rng.gen_range(0.0..TAU),
                rng.gen_range(0.0..TAU),
                rng.gen_range(0.0..TAU),
            );
        }
    }
}

/// Random non-degenerate observable.
pub fn random_observable(rng: &mut impl Rng) -> ObservableParams {
    loop {
        let eps = rng.gen_range(-1.0..1.0);
        let offdiag = rng.gen_range(-1.0..1.0);
        if eps * eps + offdiag * offdiag > 1e-6 {
            return ObservableParams::new(
                rng.gen_range(-1.0..1.0),
                eps,
                offdiag,
                rng.gen_range(0.0..TAU),
            );
        }
    }
}

fn random_qubit(rng: &mut impl Rng) -> (Complex64, Complex64) {
    loop {
        let a = Complex64::new(normal(rng), normal(rng));
        let b = Complex64::new(normal(rng), normal(rng));
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if norm > 1e-6 {
            return (a / norm, b / norm);
        }
    }
}

/// Random product state: a tensor product of two normalized single-qubit vectors.
pub fn random_product_amplitudes(rng: &mut impl Rng) -> Amplitudes {
    let (a1, a2) = random_qubit(rng);
    let (b1, b2) = random_qubit(rng);
    Amplitudes {
        omega11: a1 * b1,
        omega12: a1 * b2,
        omega21: a2 * b1,
        omega22: a2 * b2,
    }
}

fn random_simplex_point(rng: &mut impl Rng) -> [f64; 4] {
    loop {
        // Exponential spacings give a uniform draw on the probability simplex.
        let e: [f64; 4] = std::array::from_fn(|_| -rng.gen_range(f64::MIN_POSITIVE..1.0f64).ln());
        let total: f64 = e.iter().sum();
        if total > 1e-9 {
            return [e[0] / total, e[1] / total, e[2] / total, e[3] / total];
        }
    }
}

fn separated_pair(rng: &mut impl Rng) -> (f64, f64) {
    loop {
        let a: f64 = rng.gen_range(-2.0..2.0);
        let b: f64 = rng.gen_range(-2.0..2.0);
        if (a - b).abs() >= MIN_VALUE_SEPARATION {
            return (a, b);
        }
    }
}

/// Random dependent distribution with |p11·p22 − p12·p21| ≥ min_det and value
/// separations of at least [`MIN_VALUE_SEPARATION`] on both sides.
pub fn random_dependent_dist(rng: &mut impl Rng, min_det: f64) -> JointDist2x2 {
    loop {
        let p = random_simplex_point(rng);
        if (p[0] * p[3] - p[1] * p[2]).abs() < min_det {
            continue;
        }
        let (x1, x2) = separated_pair(rng);
        let (y1, y2) = separated_pair(rng);
        if let Ok(dist) = JointDist2x2::new(p, [x1, x2], [y1, y2]) {
            return dist;
        }
    }
}

/// Random independent distribution: a product of two Bernoulli marginals.
pub fn random_independent_dist(rng: &mut impl Rng) -> JointDist2x2 {
    loop {
        let px = rng.gen_range(0.05..0.95);
        let py = rng.gen_range(0.05..0.95);
        let (x1, x2) = separated_pair(rng);
        let (y1, y2) = separated_pair(rng);
        let dist = JointDist2x2::new(
            [
                px * py,
                px * (1.0 - py),
                (1.0 - px) * py,
                (1.0 - px) * (1.0 - py),
            ],
            [x1, x2],
            [y1, y2],
        );
        if let Ok(dist) = dist {
            return dist;
        }
    }
}
