//! Both bounds on a relatively compressed level quotient, with the exact
//! rational lower bound next to its ceiling.
//!
//! Run with `cargo run --example bounds`.

use apolarity_lab::{bounds_report, HVector, Result};

fn main() -> Result<()> {
    let h: HVector = "1,4,9,13,13,13,9,6,4".parse()?;
    let report = bounds_report(&h, 6, 3)?;
    println!("{report}\n");

    println!("{:>2}  {:>8}  {:>5}  {:>5}", "i", "exact", "lower", "upper");
    for i in 1..=report.d {
        println!(
            "{i:>2}  {:>8}  {:>5}  {:>5}",
            report.lower_exact[i - 1].to_string(),
            report.lower_int[i - 1],
            report.upper[i - 1]
        );
    }

    // Sweeping the type shows where the two bounds meet.
    for c in 1..=h[6] {
        let r = bounds_report(&h, 6, c)?;
        let tight: Vec<usize> = (1..=6).filter(|&i| r.lower_int[i - 1] == r.upper[i - 1]).collect();
        println!("c = {c}: lower {:?} upper {:?} tight at {tight:?}", r.lower_vector(), r.upper_vector());
    }
    Ok(())
}
