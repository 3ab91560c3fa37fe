//! Runs the built-in reference checks and prints the table.
//!
//! Run with `cargo run --example reference_suite`.

use apolarity_lab::verify::{run_suite, Suite};
use apolarity_lab::{PrimeField, Result};

fn main() -> Result<()> {
    let report = run_suite(Suite::All, PrimeField::default(), 42)?;
    println!("{report}");
    if !report.pass() {
        std::process::exit(1);
    }
    Ok(())
}
