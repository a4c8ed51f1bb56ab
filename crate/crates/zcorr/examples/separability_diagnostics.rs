//! The determinant criterion for separability on the state coefficients.
//!
//! Run with: cargo run --example separability_diagnostics

use std::f64::consts::PI;
use zcorr::sampling::{random_canonical_state, random_product_amplitudes, trial_rng};
use zcorr::state::{from_amplitudes, separability, StateParams, SEPARABILITY_TOL};

fn show(name: &str, p: &StateParams) {
    let valid = p.validate().unwrap();
    let report = separability(&valid, SEPARABILITY_TOL);
    let (amp_res, phase_res) = report.criterion_residuals;
    println!(
        "{:<28} det {:<10.3e} amp residual {:<10.3e} phase residual {:<10.3e} {}",
        name,
        report.determinant_magnitude,
        amp_res,
        phase_res,
        if report.is_separable { "separable" } else { "entangled" }
    );
}

fn main() {
    let h = std::f64::consts::FRAC_1_SQRT_2;

    show("uniform product", &StateParams::new(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 0.0));
    show("phi+", &StateParams::new(h, 0.0, 0.0, h, 0.0, 0.0, 0.0));
    show("basis state", &StateParams::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0));

    // same magnitudes as the uniform product, but a diagonal phase twist:
    // lambda != phi + kappa breaks the factorization even though alpha delta = beta gamma
    show("uniform + pi twist", &StateParams::new(0.5, 0.5, 0.5, 0.5, 0.0, 0.0, PI));

    // phases that wrap: lambda = phi + kappa - 2 pi is still separable
    show(
        "wrapped phase match",
        &StateParams::new(0.5, 0.5, 0.5, 0.5, 4.0, 4.0, 8.0 - 2.0 * PI),
    );

    // signed amplitudes: the determinant sees through representation changes
    show("phi- signed", &StateParams::new(h, 0.0, 0.0, -h, 0.0, 0.0, 0.0));
    show("psi- signed", &StateParams::new(0.0, h, -h, 0.0, 0.0, 0.0, 0.0));

    // random sweep: products stay below tolerance, generic draws far above
    let mut product_max = 0.0f64;
    let mut entangled_min = f64::INFINITY;
    for trial in 0..2_000u64 {
        let mut rng = trial_rng(17, trial);
        let p = from_amplitudes(&random_product_amplitudes(&mut rng)).unwrap();
        product_max = product_max.max(separability(&p, SEPARABILITY_TOL).determinant_magnitude);
        let e = random_canonical_state(&mut rng);
        entangled_min =
            entangled_min.min(separability(&e, SEPARABILITY_TOL).determinant_magnitude);
    }
    println!();
    println!("2000 product draws:  max det {product_max:.3e}");
    println!("2000 generic draws:  min det {entangled_min:.3e}");
    assert!(product_max <= SEPARABILITY_TOL);
    assert!(entangled_min > SEPARABILITY_TOL);
}
