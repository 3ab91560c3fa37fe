//! A small randomized audit of the bounds, printed as CSV with a summary.
//!
//! Run with `cargo run --release --example sweep`.

use apolarity_lab::sweep::{run_sweep, SweepConfig};
use apolarity_lab::Result;

fn main() -> Result<()> {
    let cfg = SweepConfig {
        num_vars: 2..=3,
        socle_degrees: 2..=4,
        types: 1..=2,
        trials: 2,
        seed: 5,
        ..SweepConfig::default()
    };
    let outcome = run_sweep(&cfg)?;
    print!("{}", outcome.to_csv());
    eprintln!("{}", outcome.summary());
    for why in &outcome.skipped {
        eprintln!("skipped {why}");
    }
    Ok(())
}
