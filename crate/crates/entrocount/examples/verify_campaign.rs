//! Driving the randomized verification campaigns from code.
//!
//! The same suites back `entrocount verify`; a fixed seed makes every run
//! reproducible, and any violation would carry a replayable instance dump.
//!
//! ```bash
//! cargo run -p entrocount --example verify_campaign
//! ```

use entrocount::{run_all_suites, RunConfig};

fn main() -> entrocount::Result<()> {
    let mut config = RunConfig::new(0xC0FFEE, 100);
    config.tolerance = 1e-10;

    for outcome in run_all_suites(&config)? {
        println!(
            "{:<10} {} checks, {} violations, worst slack {:.3e}, worst equality gap {:.3e}",
            outcome.suite,
            outcome.checks_run,
            outcome.violations.len(),
            outcome.worst_slack,
            outcome.worst_equality_gap,
        );
        if outcome.suite == "permanent" {
            println!(
                "           {} zero-row matrices drawn and excluded from validity stats",
                outcome.excluded_zero_rows
            );
        }
        for v in &outcome.violations {
            println!(
                "  VIOLATION {}",
                serde_json::to_string(v).expect("serializable")
            );
        }
    }
    Ok(())
}
