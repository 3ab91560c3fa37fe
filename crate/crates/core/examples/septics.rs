//! Two generic ternary septics and the quotient by one partial of each: the
//! quotient attains the upper bound, and does so for every seed.
//!
//! Run with `cargo run --example septics`.

use apolarity_lab::{bounds_report, compressed_hvector, septic_pair, PrimeField, Result, SeededRng};

fn main() -> Result<()> {
    let field = PrimeField::default();
    println!("compressed h for r=3, e=7, t=2: {}", compressed_hvector(3, 7, 2)?);
    for seed in 1..=5 {
        let pair = septic_pair(field, &mut SeededRng::new(seed))?;
        let h = pair.ambient.hvector()?;
        let big_h = pair.quotient.hvector()?;
        let upper = bounds_report(&h, 6, 2)?.upper_vector();
        println!("seed {seed}: h = {h}, H = {big_h}, upper = {upper:?}");
    }
    Ok(())
}
