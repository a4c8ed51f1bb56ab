//! Classify a state, construct a zero-covariance local pair, verify it.
//!
//! Run with: cargo run --example construct_for_state

use zcorr::construction::{construct, verify_construction, ConstructionOptions};
use zcorr::state::StateParams;

fn main() {
    // |psi> = 0.6|a1 b1> + 0.8 e^{i lambda} |a2 b2> with a diagonal twist
    let state = StateParams::new(0.6, 0.0, 0.0, 0.8, 0.0, 0.0, 1.2);

    let result = construct(&state, &ConstructionOptions::default()).unwrap();
    println!("case                 {}", result.case);
    println!("xi                   {:.6}", result.xi);
    println!("sensitive            {}", result.numerically_sensitive);
    println!();
    println!("Q_A: center {:+.4}  eps {:+.4}  offdiag {:.4}  phase {:.4}",
        result.qa_params.center, result.qa_params.eps,
        result.qa_params.offdiag, result.qa_params.phase);
    println!("R_B: center {:+.4}  eps {:+.4}  offdiag {:.4}  phase {:.4}",
        result.rb_params.center, result.rb_params.eps,
        result.rb_params.offdiag, result.rb_params.phase);
    println!();

    let choices = result.free_choices;
    for (name, c) in [
        ("eps", choices.eps),
        ("eta", choices.eta),
        ("q", choices.q),
        ("r", choices.r),
    ] {
        let kind = if c.constrained { "constrained" } else { "free" };
        println!("{name:<4} = {:+.6}  ({kind})", c.value);
    }

    let report = verify_construction(&state, &result).unwrap();
    println!();
    println!("<XY>       = {:+.12}", report.e_xy);
    println!("<X>        = {:+.12}", report.e_x);
    println!("<Y>        = {:+.12}", report.e_y);
    println!("covariance = {:+.3e}", report.covariance);

    assert!(report.covariance.abs() < 1e-12);
    println!("\nzero covariance despite entanglement: ok");
}
