//! Seeded random sweep: thousands of states, every constructed pair verified.
//!
//! Run with: cargo run --release --example soundness_campaign

use zcorr::cli::{run_campaign, CampaignMode};

fn main() {
    let seed = 7;
    let tol = 1e-10;
    let trials = 5_000;

    for mode in [CampaignMode::Amplitudes, CampaignMode::Signed, CampaignMode::Mixed] {
        let summary = run_campaign(mode, trials, seed, tol);
        println!(
            "{:<10} trials {}  failures {}  sensitive {}  max |cov| {:.3e}  ({} ms)",
            summary.mode,
            summary.trials,
            summary.failures,
            summary.sensitive,
            summary.max_abs_covariance,
            summary.elapsed_ms
        );
        for (case, count) in &summary.per_case_counts {
            println!("           {case:<14} {count}");
        }
        assert_eq!(summary.failures, 0);
        assert!(summary.max_abs_covariance <= tol);
    }

    println!();
    println!("random states overwhelmingly land in the generic two-option branch;");
    println!("the remaining branches are measure zero and need crafted states (see case_tree_tour)");
}
