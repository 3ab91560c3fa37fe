//! Sums of powers of linear forms, written to and read back from the JSON
//! form format.
//!
//! Run with `cargo run --example power_sums`.

use apolarity_lab::document::{parse_presentation, presentation_to_json};
use apolarity_lab::{power_sum_presentation, LinearForm, PowerSumSpec, PrimeField, Result, SeededRng};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let mut rng = SeededRng::new(11);

    // (y1 + y2)^3 + y3^3, and one generic cube.
    let spec = PowerSumSpec {
        num_vars: 3,
        degree: 3,
        generators: vec![
            vec![LinearForm::Fixed(vec![1, 1, 0]), LinearForm::Fixed(vec![0, 0, 1])],
            vec![LinearForm::Generic],
        ],
    };
    let p = power_sum_presentation(field, &spec, &mut rng)?;
    println!("h = {}", p.hvector()?);

    let json = presentation_to_json(&p);
    println!("{json}");
    let back = parse_presentation(&json)?;
    assert_eq!(back.generators(), p.generators());

    for s in 1..=6 {
        let q = power_sum_presentation(field, &PowerSumSpec::generic(3, 4, &[s]), &mut rng)?;
        println!("{s} generic quartic powers: h = {}", q.hvector()?);
    }
    Ok(())
}
