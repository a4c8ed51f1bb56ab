//! Dependent 2x2 distributions cannot have zero covariance; independent ones must.
//!
//! Run with: cargo run --example classical_never_zero

use zcorr::classical::JointDist2x2;
use zcorr::sampling::{random_dependent_dist, random_independent_dist, trial_rng};

fn main() {
    // covariance factors exactly: Cov = (x1-x2)(y1-y2)(p11 p22 - p12 p21)
    let d = JointDist2x2::new([0.4, 0.1, 0.1, 0.4], [1.0, -1.0], [1.0, -1.0]).unwrap();
    let r = d.analyze(1e-12);
    println!("correlated coins:   det {:+.3}  covariance {:+.3}", r.determinant, r.covariance);
    assert!(!r.is_independent);

    let d = JointDist2x2::new([0.25, 0.25, 0.25, 0.25], [1.0, -1.0], [1.0, -1.0]).unwrap();
    let r = d.analyze(1e-12);
    println!("product marginals:  det {:+.3}  covariance {:+.3}", r.determinant, r.covariance);
    assert!(r.is_independent);

    // the determinant is a hard floor: dependence forces |Cov| >= |x1-x2||y1-y2||det|
    println!();
    println!("{:<10} {:<14} {:<14} floor held", "det floor", "min |det| seen", "min |cov| seen");
    for floor in [1e-1, 1e-2, 1e-3] {
        let mut min_det = f64::INFINITY;
        let mut min_cov = f64::INFINITY;
        let mut held = true;
        for trial in 0..2_000u64 {
            let mut rng = trial_rng(31, trial);
            let d = random_dependent_dist(&mut rng, floor);
            let gap = d.dependence_gap().unwrap();
            let bound = (d.x1 - d.x2).abs() * (d.y1 - d.y2).abs() * d.determinant().abs();
            min_det = min_det.min(d.determinant().abs());
            min_cov = min_cov.min(gap);
            held &= (gap - bound).abs() < 1e-12;
        }
        println!("{floor:<10.0e} {min_det:<14.3e} {min_cov:<14.3e} {held}");
        assert!(held);
        assert!(min_cov > 0.0);
    }

    // while independent draws sit at numerical zero
    let mut max_cov = 0.0f64;
    for trial in 0..2_000u64 {
        let mut rng = trial_rng(32, trial);
        let r = random_independent_dist(&mut rng).analyze(1e-12);
        max_cov = max_cov.max(r.covariance.abs());
        assert!(r.is_independent);
    }
    println!();
    println!("2000 independent draws: max |covariance| {max_cov:.3e}");
    assert!(max_cov < 1e-12);

    println!();
    println!("no dependent 2x2 distribution reaches zero covariance with separated values,");
    println!("which is exactly what entangled quantum states can do with local observables");
}
