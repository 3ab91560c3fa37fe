//! h-vector of a level algebra from explicit forms.
//!
//! Run with `cargo run --example hvector`.

use apolarity_lab::{Form, FieldElem, LevelPresentation, Monomial, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::default();
    // F = y1^2 y2 + y3^3, G = y1 y2 y3
    let f = Form::from_terms(
        field,
        3,
        3,
        [
            (Monomial::new(vec![2, 1, 0]), FieldElem::ONE),
            (Monomial::new(vec![0, 0, 3]), FieldElem::ONE),
        ],
    )?;
    let g = Form::from_terms(field, 3, 3, [(Monomial::new(vec![1, 1, 1]), FieldElem::ONE)])?;
    println!("F = {f}");
    println!("G = {g}");

    let p = LevelPresentation::new(vec![f, g])?;
    println!("h-vector: {}", p.hvector()?);
    println!("type {}, socle degree {}", p.type_count(), p.socle_degree());

    for space in p.derivative_spaces()? {
        let basis: Vec<String> = space.forms(field)?.iter().map(|b| b.to_string()).collect();
        println!("degree {}: rank {}  [{}]", space.degree(), space.rank(), basis.join(", "));
    }
    Ok(())
}
