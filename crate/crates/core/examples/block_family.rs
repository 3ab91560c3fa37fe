//! The shared-block family: its h-vector has a closed form, and every generic
//! quotient of the top degree lands exactly on the lower bound.
//!
//! Run with `cargo run --example block_family -- 3 2 5` (t, p, e).

use apolarity_lab::{bounds_report, BlockFamily, PrimeField, Result, SeededRng};

fn main() -> Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (t, p, e) = match args[..] {
        [t, p, e] => (t, p, e as u32),
        _ => (2, 2, 4),
    };
    let field = PrimeField::default();
    let fam = BlockFamily::new(t, p, e)?;
    let pres = fam.presentation(field)?;
    for g in pres.generators() {
        println!("F = {g}");
    }
    let h = pres.hvector()?;
    println!("h = {h} (closed form {})", fam.expected_h());

    let mut rng = SeededRng::new(1);
    for c in 1..=t {
        let big_h = pres.generic_quotient(e, c, &mut rng)?.hvector()?;
        let report = bounds_report(&h, e as usize, c)?;
        let exact: Vec<String> = report.lower_exact.iter().map(|v| v.to_string()).collect();
        println!(
            "c = {c}: H = {big_h}, lower = {:?}, exact lower = [{}]",
            report.lower_vector(),
            exact.join(", ")
        );
    }
    Ok(())
}
