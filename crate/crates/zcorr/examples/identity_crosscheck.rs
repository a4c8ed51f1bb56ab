//! Cross-check the expanded covariance polynomial and its reduced form against
//! the dense matrix computation.
//!
//! Run with: cargo run --example identity_crosscheck

use rand::Rng;
use zcorr::construction::{substitution_phases, zce2_residual, zce3_residual};
use zcorr::observables::{assemble, covariance, ObservableParams};
use zcorr::sampling::{random_canonical_state, random_observable, random_signed_state, trial_rng};

fn main() {
    // full polynomial in 7 state + 8 observable parameters vs <XY> - <X><Y>
    let mut max_full = 0.0f64;
    for trial in 0..5_000u64 {
        let mut rng = trial_rng(23, trial);
        let p = if trial % 2 == 0 {
            random_canonical_state(&mut rng)
        } else {
            random_signed_state(&mut rng).validate().unwrap()
        };
        let qa = random_observable(&mut rng);
        let rb = random_observable(&mut rng);
        let oracle = covariance(
            &p.to_amplitudes(),
            &assemble(&qa).unwrap(),
            &assemble(&rb).unwrap(),
        )
        .unwrap()
        .covariance;
        max_full = max_full.max((oracle - zce2_residual(&p, &qa, &rb)).abs());
    }
    println!("expanded polynomial vs matrices, 5000 draws: max |diff| {max_full:.3e}");
    assert!(max_full < 1e-12);

    // with the substitution phases s, v in place, the whole phase dependence
    // collapses and the matrix covariance equals exactly twice the reduced form
    let mut max_reduced = 0.0f64;
    for trial in 0..5_000u64 {
        let mut rng = trial_rng(24, trial);
        let p = random_canonical_state(&mut rng);
        let (s, v) = substitution_phases(&p);
        let eps: f64 = rng.gen_range(-1.0..1.0);
        let eta: f64 = rng.gen_range(-1.0..1.0);
        let q: f64 = rng.gen_range(0.05..1.0);
        let r: f64 = rng.gen_range(0.05..1.0);
        let oracle = covariance(
            &p.to_amplitudes(),
            &assemble(&ObservableParams::new(0.0, eps, q, s)).unwrap(),
            &assemble(&ObservableParams::new(0.0, eta, r, v)).unwrap(),
        )
        .unwrap()
        .covariance;
        let reduced = 2.0 * zce3_residual(&p, eps, eta, q, r);
        max_reduced = max_reduced.max((oracle - reduced).abs());
    }
    println!("reduced form x 2   vs matrices, 5000 draws: max |diff| {max_reduced:.3e}");
    assert!(max_reduced < 1e-12);

    println!();
    println!("the factor of 2 between the reduced residual and the covariance is exact;");
    println!("solving the reduced equation is what every branch of construct() does");
}
