//! Generic level quotients of a compressed algebra, checked against the bounds.
//!
//! Run with `cargo run --example generic_quotient`.

use apolarity_lab::constructions::generic_presentation;
use apolarity_lab::{check_within, PrimeField, Result, SeededRng};

fn main() -> Result<()> {
    let field = PrimeField::default();
    let mut rng = SeededRng::new(7);
    let ambient = generic_presentation(field, 3, 6, 2, &mut rng)?;
    let h = ambient.hvector()?;
    println!("ambient: 2 generic sextics in 3 variables, h = {h}");

    for d in 2..=6u32 {
        for c in 1..=h[d as usize] {
            let q = ambient.generic_quotient(d, c, &mut rng)?;
            let big_h = q.hvector()?;
            let verdict = check_within(&big_h, &h, d as usize, c)?;
            let upper_gap: i64 = verdict.upper_gaps().iter().sum();
            let lower_gap: i64 = verdict.lower_gaps().iter().sum();
            println!(
                "d={d} c={c:>2}  H = {big_h:<24} within={} gaps: lower {lower_gap}, upper {upper_gap}",
                verdict.pass
            );
        }
    }
    Ok(())
}
