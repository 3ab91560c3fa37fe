//! Macaulay inverse systems of level algebras.
//!
//! A level algebra of type `t` and socle degree `e` in `r` variables is
//! presented by `t` linearly independent forms of degree `e` in the dual ring
//! `k[y_1..y_r]`. Its h-vector entry `h_i` is the dimension of the space
//! spanned by all derivatives of order `e - i` of the generators.
//!
//! The level truncation `A/A_{d+1}` is presented by a basis of the degree-`d`
//! derivative space, and a generic level quotient of type `c` and socle
//! degree `d` by `c` random combinations of that basis. Genericity is
//! simulated by drawing coefficients uniformly from a large prime field.

use crate::error::{Error, Result};
use crate::field::{PrimeField, SeededRng};
use crate::hvector::HVector;
use crate::linalg::{random_combinations, rref, MatrixFp, ReducedBasis};
use crate::poly::{monomial_count, Form, Monomial};

/// Generators of an inverse-system module, all of the socle degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPresentation {
    field: PrimeField,
    num_vars: usize,
    socle_degree: u32,
    generators: Vec<Form>,
}

/// One graded piece of the derivative closure of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeSpace {
    degree: u32,
    num_vars: usize,
    basis: ReducedBasis,
}

/// Checks that `generators` minimally generate a level module and returns the type.
///
/// Generators must be nonzero forms over one field, in one variable count and
/// one positive degree, and linearly independent; `p` must exceed the degree.
pub fn validate_level(generators: &[Form]) -> Result<usize> {
    let first = generators.first().ok_or(Error::EmptyPresentation)?;
    let (r, e, field) = (first.num_vars(), first.degree(), first.field());
    if e == 0 {
        return Err(Error::InvalidParameters(
            "socle degree 0 presents the field itself, not an artinian level algebra".into(),
        ));
    }
    field.check_degree(e)?;
    let mut rows = Vec::with_capacity(generators.len());
    for (index, g) in generators.iter().enumerate() {
        if g.field() != field {
            return Err(Error::FieldMismatch {
                expected: field.modulus(),
                found: g.field().modulus(),
            });
        }
        if g.num_vars() != r {
            return Err(Error::MixedVariableCounts {
                index,
                expected: r,
                found: g.num_vars(),
            });
        }
        if g.degree() != e {
            return Err(Error::MixedDegrees {
                index,
                expected: e,
                found: g.degree(),
            });
        }
        rows.push(g.to_coord_row());
        let m = MatrixFp::from_rows(field, monomial_count(r, e), &rows)?;
        if rref(&m).rank() < rows.len() {
            return Err(Error::DependentGenerators { index });
        }
    }
    Ok(generators.len())
}

impl LevelPresentation {
    pub fn new(generators: Vec<Form>) -> Result<Self> {
        validate_level(&generators)?;
        let first = &generators[0];
        Ok(LevelPresentation {
            field: first.field(),
            num_vars: first.num_vars(),
            socle_degree: first.degree(),
            generators,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    /// The type `t`, i.e. the number of generators.
    pub fn type_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Form] {
        &self.generators
    }

    fn check_degree(&self, i: u32, min: u32) -> Result<()> {
        if i < min || i > self.socle_degree {
            return Err(Error::DegreeOutOfRange {
                degree: i,
                min,
                max: self.socle_degree,
            });
        }
        Ok(())
    }

    /// Span of every derivative of order `e - i` of every generator.
    pub fn derivative_space(&self, i: u32) -> Result<DerivativeSpace> {
        self.check_degree(i, 0)?;
        let order = self.socle_degree - i;
        let cols = monomial_count(self.num_vars, i);
        let ops = Monomial::all(self.num_vars, order);
        let mut rows = Vec::with_capacity(ops.len() * self.generators.len());
        for g in &self.generators {
            for op in &ops {
                rows.push(g.differentiate(op)?.to_coord_row());
            }
        }
        let m = MatrixFp::from_rows(self.field, cols, &rows)?;
        Ok(DerivativeSpace {
            degree: i,
            num_vars: self.num_vars,
            basis: rref(&m),
        })
    }

    /// Derivative spaces in degrees `e, e-1, ..., lowest`, each obtained from
    /// the first partials of the basis one degree up.
    fn derivative_chain(&self, lowest: u32) -> Result<Vec<DerivativeSpace>> {
        let top_rows: Vec<_> = self.generators.iter().map(Form::to_coord_row).collect();
        let top = MatrixFp::from_rows(self.field, monomial_count(self.num_vars, self.socle_degree), &top_rows)?;
        let mut chain = vec![DerivativeSpace {
            degree: self.socle_degree,
            num_vars: self.num_vars,
            basis: rref(&top),
        }];
        for i in (lowest..self.socle_degree).rev() {
            let above = chain.last().expect("chain starts nonempty");
            let mut rows = Vec::with_capacity(above.rank() * self.num_vars);
            for form in above.forms(self.field)? {
                for var in 0..self.num_vars {
                    rows.push(form.partial(var)?.to_coord_row());
                }
            }
            let m = MatrixFp::from_rows(self.field, monomial_count(self.num_vars, i), &rows)?;
            chain.push(DerivativeSpace {
                degree: i,
                num_vars: self.num_vars,
                basis: rref(&m),
            });
        }
        Ok(chain)
    }

    /// All derivative spaces, indexed by degree `0..=e`.
    pub fn derivative_spaces(&self) -> Result<Vec<DerivativeSpace>> {
        let mut chain = self.derivative_chain(0)?;
        chain.reverse();
        Ok(chain)
    }

    pub fn hvector(&self) -> Result<HVector> {
        HVector::new(self.derivative_spaces()?.iter().map(DerivativeSpace::rank).collect())
    }

    /// The canonical basis `G_1..G_{h_d}` of the degree-`d` derivative space.
    pub fn truncation_basis(&self, d: u32) -> Result<Vec<Form>> {
        self.check_degree(d, 1)?;
        let chain = self.derivative_chain(d)?;
        chain.last().expect("chain reaches d").forms(self.field)
    }

    /// The level truncation `A/A_{d+1}` as a presentation of socle degree `d`.
    pub fn truncation(&self, d: u32) -> Result<LevelPresentation> {
        LevelPresentation::new(self.truncation_basis(d)?)
    }

    /// A generic level quotient of type `c` and socle degree `d` of the truncation.
    pub fn generic_quotient(&self, d: u32, c: usize, rng: &mut SeededRng) -> Result<LevelPresentation> {
        self.check_degree(d, 1)?;
        let chain = self.derivative_chain(d)?;
        chain.last().expect("chain reaches d").generic_subspace(self.field, c, rng)
    }
}

impl DerivativeSpace {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &ReducedBasis {
        &self.basis
    }

    /// Basis rows converted back to forms.
    pub fn forms(&self, field: PrimeField) -> Result<Vec<Form>> {
        self.basis
            .basis_rows()
            .row_vecs()
            .iter()
            .map(|row| Form::from_coord_row(field, self.num_vars, self.degree, row))
            .collect()
    }

    /// A presentation generated by `c` random combinations of this space's basis.
    pub fn generic_subspace(&self, field: PrimeField, c: usize, rng: &mut SeededRng) -> Result<LevelPresentation> {
        if c == 0 {
            return Err(Error::InvalidParameters("quotient type must be at least 1".into()));
        }
        let combos = random_combinations(&self.basis, c, rng)?;
        let gens = combos
            .row_vecs()
            .iter()
            .map(|row| Form::from_coord_row(field, self.num_vars, self.degree, row))
            .collect::<Result<Vec<_>>>()?;
        LevelPresentation::new(gens)
    }
}
