//! The explicit operator pairs that decorrelate each Bell state.
//!
//! Run with: cargo run --example bell_operator_pairs

use zcorr::bell::BellState;
use zcorr::construction::{classify, CLASSIFY_TOL};
use zcorr::observables::{assemble, covariance};

fn main() {
    let m = 1.0;
    println!("{:<6} {:<12} {:<26} {:<26} covariance", "state", "case", "Q_A", "R_B");

    for bell in BellState::ALL {
        let params = bell.params_signed().validate().unwrap();
        let (qa, rb) = bell.operator_pair(m, 0.0, 0.0);
        let report = covariance(
            &params.to_amplitudes(),
            &assemble(&qa).unwrap(),
            &assemble(&rb).unwrap(),
        )
        .unwrap();
        let case = classify(&params, CLASSIFY_TOL).unwrap();

        let describe = |eps: f64| {
            if eps < 0.0 { "m(sx - sz)" } else { "m(sx + sz)" }
        };
        println!(
            "{:<6} {:<12} {:<26} {:<26} {:+.3e}",
            bell.as_str(),
            case.to_string(),
            describe(qa.eps),
            describe(rb.eps),
            report.covariance
        );
        assert!(report.covariance.abs() < 1e-14);
    }

    println!();
    println!("phi+ and psi- share one pairing, phi- and psi+ the other;");
    println!("shifting the centers or rescaling m never changes the covariance:");

    let bell = BellState::PhiPlus;
    let params = bell.params_signed().validate().unwrap();
    for (m, q0, r0) in [(0.5, 3.0, -1.0), (4.0, -0.25, 0.75)] {
        let (qa, rb) = bell.operator_pair(m, q0, r0);
        let report = covariance(
            &params.to_amplitudes(),
            &assemble(&qa).unwrap(),
            &assemble(&rb).unwrap(),
        )
        .unwrap();
        println!("  m={m:<4} q0={q0:<6} r0={r0:<6} covariance {:+.3e}", report.covariance);
        assert!(report.covariance.abs() < 1e-14);
    }
}
