//! Homogeneous forms in the dual variables `y_1..y_r` and the
//! differentiation action of `x`-monomials on them.
//!
//! Monomials of a fixed degree are ordered lexicographically on their
//! exponent vectors, largest first exponent first; this order fixes the
//! column layout of every coefficient matrix in the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::field::{FieldElem, PrimeField};

/// Number of monomials of degree `degree` in `num_vars` variables.
pub fn monomial_count(num_vars: usize, degree: u32) -> usize {
    if num_vars == 0 {
        return usize::from(degree == 0);
    }
    binomial(degree as usize + num_vars - 1, num_vars - 1)
}

/// An exponent vector with its cached total degree.
///
/// The same type serves as a `y`-monomial in a form and as an `x`-monomial
/// differential operator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    /// `y_var` (or `x_var`) in `num_vars` variables, 0-based.
    pub fn variable(num_vars: usize, var: usize) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[var] = 1;
        Monomial { exponents, degree: 1 }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial::new(vec![0; num_vars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Position in the lexicographic enumeration of its degree.
    pub fn rank(&self) -> usize {
        let r = self.num_vars();
        let mut rank = 0;
        let mut rem = self.degree;
        for (k, &e) in self.exponents.iter().enumerate().take(r.saturating_sub(1)) {
            // monomials agreeing so far but with a larger exponent at k come first
            for v in (e + 1)..=rem {
                rank += monomial_count(r - k - 1, rem - v);
            }
            rem -= e;
        }
        rank
    }

    /// Inverse of [`Monomial::rank`].
    pub fn unrank(num_vars: usize, degree: u32, index: usize) -> Result<Monomial> {
        let count = monomial_count(num_vars, degree);
        if index >= count || num_vars == 0 {
            return Err(Error::IndexOutOfRange { index, count });
        }
        let mut exponents = vec![0; num_vars];
        let mut rem = degree;
        let mut idx = index;
        for k in 0..num_vars - 1 {
            let mut v = rem;
            loop {
                let block = monomial_count(num_vars - k - 1, rem - v);
                if idx < block {
                    break;
                }
                idx -= block;
                v -= 1;
            }
            exponents[k] = v;
            rem -= v;
        }
        exponents[num_vars - 1] = rem;
        Ok(Monomial { exponents, degree })
    }

    /// All monomials of a degree, in rank order.
    pub fn all(num_vars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(monomial_count(num_vars, degree));
        let mut current = vec![0; num_vars];
        fill(&mut current, 0, degree, &mut out);
        out
    }
}

fn fill(current: &mut Vec<u32>, pos: usize, rem: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = rem;
        out.push(Monomial::new(current.clone()));
        return;
    }
    if current.is_empty() {
        return;
    }
    for v in (0..=rem).rev() {
        current[pos] = v;
        fill(current, pos + 1, rem - v, out);
    }
    current[pos] = 0;
}

impl Ord for Monomial {
    /// Degree first, then reverse lexicographic on exponents, so that within a
    /// degree the sort order agrees with [`Monomial::rank`].
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "y{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A homogeneous form over `F_p` with sparse terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    field: PrimeField,
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Form {
    pub fn zero(field: PrimeField, num_vars: usize, degree: u32) -> Self {
        Form {
            field,
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a form from `(monomial, coefficient)` pairs, summing repeats and
    /// dropping zeros.
    pub fn from_terms<I>(field: PrimeField, num_vars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, FieldElem)>,
    {
        let mut form = Form::zero(field, num_vars, degree);
        for (m, c) in terms {
            form.add_term(m, c)?;
        }
        Ok(form)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: FieldElem) -> Result<()> {
        if m.num_vars() != self.num_vars {
            return Err(Error::VariableMismatch {
                expected: self.num_vars,
                found: m.num_vars(),
            });
        }
        if m.degree() != self.degree {
            return Err(Error::NotHomogeneous {
                expected: self.degree,
                found: m.degree(),
            });
        }
        let field = self.field;
        let entry = self.terms.entry(m).or_insert(FieldElem::ZERO);
        *entry = field.add(*entry, c);
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).copied().unwrap_or(FieldElem::ZERO)
    }

    /// Terms in rank order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElem)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn scale(&self, s: FieldElem) -> Form {
        let f = self.field;
        let mut out = Form::zero(f, self.num_vars, self.degree);
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(m, &c)| (m.clone(), f.mul(c, s))).collect();
        }
        out
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Form) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field.modulus(),
                found: other.field.modulus(),
            });
        }
        if self.num_vars != other.num_vars {
            return Err(Error::VariableMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        if self.degree != other.degree {
            return Err(Error::NotHomogeneous {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    /// Applies the operator `x^a`, i.e. `d^|a| / dy^a`.
    ///
    /// Each surviving term `y^b` picks up the falling factorial
    /// `prod_k b_k (b_k - 1) ... (b_k - a_k + 1)`.
    pub fn differentiate(&self, op: &Monomial) -> Result<Form> {
        if op.num_vars() != self.num_vars {
            return Err(Error::VariableMismatch {
                expected: self.num_vars,
                found: op.num_vars(),
            });
        }
        if op.degree() > self.degree {
            return Err(Error::DegreeExceeded {
                operator: op.degree(),
                form: self.degree,
            });
        }
        let f = self.field;
        let mut out = Form::zero(f, self.num_vars, self.degree - op.degree());
        for (m, c) in self.terms() {
            if let Some((reduced, scalar)) = apply_operator(&f, m, op) {
                let coeff = f.mul(c, scalar);
                if coeff.is_zero() {
                    continue;
                }
                let entry = out.terms.entry(reduced).or_insert(FieldElem::ZERO);
                *entry = f.add(*entry, coeff);
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// `d/dy_var` (0-based).
    pub fn partial(&self, var: usize) -> Result<Form> {
        self.differentiate(&Monomial::variable(self.num_vars, var))
    }

    /// Dense coefficients indexed by monomial rank.
    pub fn to_coord_row(&self) -> Vec<FieldElem> {
        let mut row = vec![FieldElem::ZERO; monomial_count(self.num_vars, self.degree)];
        for (m, c) in self.terms() {
            row[m.rank()] = c;
        }
        row
    }

    pub fn from_coord_row(field: PrimeField, num_vars: usize, degree: u32, row: &[FieldElem]) -> Result<Form> {
        let expected = monomial_count(num_vars, degree);
        if row.len() != expected {
            return Err(Error::RaggedInput {
                row: 0,
                expected,
                found: row.len(),
            });
        }
        let monomials = Monomial::all(num_vars, degree);
        let terms = monomials
            .into_iter()
            .zip(row)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, &c)| (m, field.elem(c.value())))
            .collect();
        Ok(Form {
            field,
            num_vars,
            degree,
            terms,
        })
    }
}

/// `x^a . y^b` as `(y^(b-a), falling factorial)`, or `None` when it vanishes.
fn apply_operator(field: &PrimeField, m: &Monomial, op: &Monomial) -> Option<(Monomial, FieldElem)> {
    let mut scalar = FieldElem::ONE;
    let mut exps = Vec::with_capacity(m.num_vars());
    for (&b, &a) in m.exponents().iter().zip(op.exponents()) {
        if a > b {
            return None;
        }
        for k in 0..a {
            scalar = field.mul(scalar, field.elem(u64::from(b - k)));
        }
        exps.push(b - a);
    }
    Some((Monomial::new(exps), scalar))
}

/// `(c_1 y_1 + ... + c_r y_r)^e`, expanded with multinomial coefficients.
pub fn power_of_linear_form(field: PrimeField, coeffs: &[FieldElem], e: u32) -> Result<Form> {
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroForm);
    }
    let r = coeffs.len();
    // multinomial(e; b) = e! / prod b_k!
    let mut fact = vec![FieldElem::ONE; e as usize + 1];
    for k in 1..=e as usize {
        fact[k] = field.mul(fact[k - 1], field.elem(k as u64));
    }
    let mut terms = BTreeMap::new();
    for m in Monomial::all(r, e) {
        let mut c = fact[e as usize];
        for (k, &b) in m.exponents().iter().enumerate() {
            let denom = field.inv(fact[b as usize])?;
            c = field.mul(c, field.mul(denom, field.pow(coeffs[k], u64::from(b))));
        }
        if !c.is_zero() {
            terms.insert(m, c);
        }
    }
    Ok(Form {
        field,
        num_vars: r,
        degree: e,
        terms,
    })
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (c.value(), m.degree()) {
                (1, d) if d > 0 => write!(f, "{m}")?,
                (_, 0) => write!(f, "{c}")?,
                _ => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::SeededRng;
    use proptest::prelude::*;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn form(r: usize, d: u32, terms: &[(&[u32], u64)]) -> Form {
        let f = fp();
        Form::from_terms(f, r, d, terms.iter().map(|(e, c)| (mono(e), f.elem(*c)))).unwrap()
    }

    #[test]
    fn ranks_follow_lex_order() {
        assert_eq!(mono(&[2, 0]).rank(), 0);
        assert_eq!(mono(&[1, 1]).rank(), 1);
        assert_eq!(mono(&[0, 2]).rank(), 2);
        assert_eq!(mono(&[1, 0, 0]).rank(), 0);
        assert_eq!(mono(&[0, 1, 0]).rank(), 1);
        assert_eq!(mono(&[0, 0, 1]).rank(), 2);
        assert_eq!(monomial_count(3, 1), 3);
    }

    #[test]
    fn ternary_septics_enumeration() {
        let all = Monomial::all(3, 7);
        assert_eq!(all.len(), 36);
        assert_eq!(monomial_count(3, 7), 36);
        assert_eq!(Monomial::unrank(3, 7, 35).unwrap(), mono(&[0, 0, 7]));
        // brute force: filter all exponent triples summing to 7, sort descending
        let mut brute: Vec<Vec<u32>> = (0..=7u32)
            .flat_map(|a| (0..=7u32).flat_map(move |b| (0..=7u32).map(move |c| vec![a, b, c])))
            .filter(|v| v.iter().sum::<u32>() == 7)
            .collect();
        brute.sort_by(|a, b| b.cmp(a));
        let listed: Vec<_> = all.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(listed, brute);
    }

    #[test]
    fn unrank_out_of_range() {
        assert_eq!(
            Monomial::unrank(3, 7, 36),
            Err(Error::IndexOutOfRange { index: 36, count: 36 })
        );
    }

    #[test]
    fn rank_unrank_bijection_exhaustive() {
        for r in 1..=6 {
            for d in 0..=10 {
                let all = Monomial::all(r, d);
                assert_eq!(all.len(), monomial_count(r, d));
                for (k, m) in all.iter().enumerate() {
                    assert_eq!(m.rank(), k, "r={r} d={d} {m:?}");
                    assert_eq!(&Monomial::unrank(r, d, k).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn differentiate_examples() {
        let f = form(2, 3, &[(&[2, 1], 1)]);
        assert_eq!(f.differentiate(&mono(&[1, 0])).unwrap(), form(2, 2, &[(&[1, 1], 2)]));
        let mixed = f.differentiate(&mono(&[1, 1])).unwrap();
        assert_eq!(mixed, form(2, 1, &[(&[1, 0], 2)]));
        let stepwise = f.partial(0).unwrap().partial(1).unwrap();
        assert_eq!(mixed, stepwise);
        let dead = f.differentiate(&mono(&[0, 2])).unwrap();
        assert!(dead.is_zero());
        assert_eq!(dead.degree(), 1);
    }

    #[test]
    fn differentiate_errors() {
        let f = form(2, 3, &[(&[2, 1], 1)]);
        assert_eq!(
            f.differentiate(&mono(&[2, 2])),
            Err(Error::DegreeExceeded { operator: 4, form: 3 })
        );
        assert_eq!(
            f.differentiate(&mono(&[1, 0, 0])),
            Err(Error::VariableMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn power_examples() {
        let f = fp();
        let p = power_of_linear_form(f, &[f.elem(1), FieldElem::ZERO, FieldElem::ZERO], 5).unwrap();
        assert_eq!(p, form(3, 5, &[(&[5, 0, 0], 1)]));
        let p = power_of_linear_form(f, &[f.elem(1), f.elem(1)], 2).unwrap();
        assert_eq!(p, form(2, 2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        // (y1 + 2 y2)^3 by repeated multiplication: 1, 6, 12, 8
        let p = power_of_linear_form(f, &[f.elem(1), f.elem(2)], 3).unwrap();
        assert_eq!(p, form(2, 3, &[(&[3, 0], 1), (&[2, 1], 6), (&[1, 2], 12), (&[0, 3], 8)]));
        assert_eq!(power_of_linear_form(f, &[FieldElem::ZERO; 2], 3), Err(Error::ZeroForm));
    }

    #[test]
    fn coord_rows() {
        assert_eq!(Form::zero(fp(), 2, 2).to_coord_row(), vec![FieldElem::ZERO; 3]);
        let row: Vec<u64> = form(2, 2, &[(&[1, 1], 1)]).to_coord_row().iter().map(|c| c.value()).collect();
        assert_eq!(row, vec![0, 1, 0]);
    }

    #[test]
    fn add_term_cancels() {
        let f = fp();
        let mut g = form(2, 2, &[(&[1, 1], 3)]);
        g.add_term(mono(&[1, 1]), f.neg(f.elem(3))).unwrap();
        assert!(g.is_zero());
        assert!(matches!(g.add_term(mono(&[1, 0]), FieldElem::ONE), Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn display_is_readable() {
        let g = form(3, 3, &[(&[2, 1, 0], 1), (&[0, 0, 3], 5)]);
        assert_eq!(g.to_string(), "y1^2*y2 + 5*y3^3");
    }

    fn random_sparse_form(rng: &mut SeededRng, r: usize, d: u32, nterms: usize) -> Form {
        use rand::Rng;
        let f = fp();
        let count = monomial_count(r, d);
        let mut g = Form::zero(f, r, d);
        for _ in 0..nterms {
            let m = Monomial::unrank(r, d, rng.gen_range(0..count)).unwrap();
            g.add_term(m, f.random_nonzero(rng)).unwrap();
        }
        g
    }

    #[test]
    fn coord_row_round_trip_on_random_forms() {
        let mut rng = SeededRng::new(11);
        for k in 0..100 {
            let r = 1 + k % 4;
            let d = (k % 6) as u32;
            let g = random_sparse_form(&mut rng, r, d, 1 + k % 5);
            let row = g.to_coord_row();
            let back = Form::from_coord_row(fp(), r, d, &row).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.to_coord_row(), row);
        }
    }

    fn small_form() -> impl Strategy<Value = (usize, u32, u64)> {
        (1usize..=4, 1u32..=6, any::<u64>())
    }

    proptest! {
        #[test]
        fn differentiation_commutes_and_composes((r, d, seed) in small_form(), ia in any::<u32>(), ib in any::<u32>()) {
            let mut rng = SeededRng::new(seed);
            let g = random_sparse_form(&mut rng, r, d, 6);
            let da = (ia % (d + 1)) / 2;
            let db = (ib % (d + 1)) / 2;
            let a = Monomial::unrank(r, da, ia as usize % monomial_count(r, da)).unwrap();
            let b = Monomial::unrank(r, db, ib as usize % monomial_count(r, db)).unwrap();
            let ab = g.differentiate(&a).unwrap().differentiate(&b).unwrap();
            let ba = g.differentiate(&b).unwrap().differentiate(&a).unwrap();
            let joint = g.differentiate(&a.mul(&b)).unwrap();
            prop_assert_eq!(&ab, &ba);
            prop_assert_eq!(&ab, &joint);
            prop_assert_eq!(joint.degree(), d - da - db);
        }

        #[test]
        fn differentiation_is_linear((r, d, seed) in small_form(), s in 1u64..1000) {
            let f = fp();
            let mut rng = SeededRng::new(seed);
            let g = random_sparse_form(&mut rng, r, d, 4);
            let h = random_sparse_form(&mut rng, r, d, 4);
            let op = Monomial::variable(r, 0);
            let lhs = g.scale(f.elem(s)).add(&h).unwrap().differentiate(&op).unwrap();
            let rhs = g.differentiate(&op).unwrap().scale(f.elem(s)).add(&h.differentiate(&op).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn euler_rule_on_powers(r in 1usize..=4, e in 1u32..=8, seed in any::<u64>(), var in 0usize..4) {
            let f = fp();
            let var = var % r;
            let mut rng = SeededRng::new(seed);
            let coeffs: Vec<_> = (0..r).map(|_| f.random_nonzero(&mut rng)).collect();
            let l_e = power_of_linear_form(f, &coeffs, e).unwrap();
            let lhs = l_e.partial(var).unwrap();
            let rhs = if e == 1 {
                Form::from_terms(f, r, 0, [(Monomial::one(r), coeffs[var])]).unwrap()
            } else {
                power_of_linear_form(f, &coeffs, e - 1).unwrap().scale(f.mul(f.elem(e as u64), coeffs[var]))
            };
            prop_assert_eq!(lhs, rhs);
        }
    }
}
