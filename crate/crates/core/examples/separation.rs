//! Two level algebras with the same h-vector whose Gorenstein quotients in the
//! top degree differ: the h-vector alone does not determine them.
//!
//! Run with `cargo run --example separation`.

use apolarity_lab::{separation_pair, PrimeField, Result, SeededRng};

fn main() -> Result<()> {
    let field = PrimeField::default();
    let mut rng = SeededRng::new(3);
    let pair = separation_pair(field, 2, 2, 4, &mut rng)?;
    println!("A1 = block family, h = {}", pair.a1.hvector()?);
    println!("A2 = power sums,   h = {}", pair.a2.hvector()?);

    let generic = pair.a1.generic_quotient(4, 1, &mut rng)?.hvector()?;
    let designated = pair.designated_quotient()?.hvector()?;
    println!("generic Gorenstein quotient of A1:     {generic}");
    println!("quotient of A2 by its long power sum:  {designated}");
    println!("generic Gorenstein quotient of A2:     {}", pair.a2.generic_quotient(4, 1, &mut rng)?.hvector()?);
    Ok(())
}
