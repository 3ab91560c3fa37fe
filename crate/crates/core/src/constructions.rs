//! Explicit level algebras whose h-vectors and quotient h-vectors are known
//! in closed form, used to show both bounds are attained.
//!
//! * [`BlockFamily`]: `F_j = sum_m y_{jp+m} y_m^{e-1}`, whose level quotients
//!   all sit on the lower bound.
//! * [`septic_pair`]: two generic ternary septics and the quotient
//!   generated by `dF/dy_1, dG/dy_2`, which sits on the upper bound.
//! * [`separation_pair`]: two algebras with equal h-vector whose Gorenstein
//!   quotients have different h-vectors.

use crate::error::{Error, Result};
use crate::field::{FieldElem, PrimeField, SeededRng};
use crate::hvector::HVector;
use crate::inverse_system::LevelPresentation;
use crate::poly::{monomial_count, power_of_linear_form, Form, Monomial};

/// Redraws allowed when a random construction comes out dependent.
pub const REDRAW_ATTEMPTS: usize = 3;

/// Parameters of the shared-block family: type `t`, block size `p`, socle degree `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockFamily {
    pub t: usize,
    pub p: usize,
    pub e: u32,
}

impl BlockFamily {
    pub fn new(t: usize, p: usize, e: u32) -> Result<Self> {
        if t == 0 || p == 0 || e < 3 {
            return Err(Error::InvalidParameters(format!(
                "block family needs t >= 1, p >= 1, e >= 3 (got t = {t}, p = {p}, e = {e})"
            )));
        }
        Ok(BlockFamily { t, p, e })
    }

    /// `r = (t + 1) p`.
    pub fn num_vars(&self) -> usize {
        (self.t + 1) * self.p
    }

    /// Generators `F_1..F_t`.
    ///
    /// With 1-based variables, `F_j = y_{jp+1} y_1^{e-1} + ... + y_{(j+1)p} y_p^{e-1}`.
    /// Variables `y_1..y_p` are shared; block `j` owns `y_{jp+1}..y_{(j+1)p}`.
    /// Internally `y_k` is index `k - 1`.
    pub fn presentation(&self, field: PrimeField) -> Result<LevelPresentation> {
        let r = self.num_vars();
        let gens = (1..=self.t)
            .map(|j| {
                let terms = (1..=self.p).map(|m| {
                    let mut exps = vec![0u32; r];
                    exps[m - 1] = self.e - 1;
                    exps[j * self.p + m - 1] = 1;
                    (Monomial::new(exps), FieldElem::ONE)
                });
                Form::from_terms(field, r, self.e, terms)
            })
            .collect::<Result<Vec<_>>>()?;
        LevelPresentation::new(gens)
    }

    /// `(1, (t+1)p, ..., (t+1)p, t)`.
    pub fn expected_h(&self) -> HVector {
        plateau(self.e, (self.t + 1) * self.p, self.t)
    }

    /// `(1, (c+1)p, ..., (c+1)p, c)`, the h-vector of every level quotient of
    /// type `c` and socle degree `e`.
    pub fn expected_quotient_h(&self, c: usize) -> Result<HVector> {
        if c == 0 || c > self.t {
            return Err(Error::TypeTooLarge {
                requested: c,
                available: self.t,
            });
        }
        Ok(plateau(self.e, (c + 1) * self.p, c))
    }
}

fn plateau(e: u32, middle: usize, last: usize) -> HVector {
    let mut v = vec![1];
    v.extend(std::iter::repeat_n(middle, e as usize - 1));
    v.push(last);
    HVector::new(v).expect("plateau entries are positive")
}

/// A linear form: explicit coefficients, or drawn at random.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearForm {
    Fixed(Vec<u64>),
    Generic,
}

/// Each generator is a sum of `degree`-th powers of its linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumSpec {
    pub num_vars: usize,
    pub degree: u32,
    pub generators: Vec<Vec<LinearForm>>,
}

impl PowerSumSpec {
    /// Generator `k` is a sum of `counts[k]` generic powers.
    pub fn generic(num_vars: usize, degree: u32, counts: &[usize]) -> Self {
        PowerSumSpec {
            num_vars,
            degree,
            generators: counts.iter().map(|&s| vec![LinearForm::Generic; s]).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.num_vars == 0 || self.degree == 0 {
            return Err(Error::InvalidParameters("power sums need r >= 1 and e >= 1".into()));
        }
        if self.generators.is_empty() {
            return Err(Error::EmptyPresentation);
        }
        for (k, g) in self.generators.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::InvalidParameters(format!("generator {k} has no summands")));
            }
            for l in g {
                if let LinearForm::Fixed(c) = l {
                    if c.len() != self.num_vars {
                        return Err(Error::VariableMismatch {
                            expected: self.num_vars,
                            found: c.len(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the presentation of a [`PowerSumSpec`], redrawing generic summands
/// if the generators come out dependent.
pub fn power_sum_presentation(field: PrimeField, spec: &PowerSumSpec, rng: &mut SeededRng) -> Result<LevelPresentation> {
    draw_power_sum(field, spec, rng).map(|(_, p)| p)
}

/// As [`power_sum_presentation`], also returning the spec with every generic
/// linear form replaced by the one drawn.
pub fn draw_power_sum(
    field: PrimeField,
    spec: &PowerSumSpec,
    rng: &mut SeededRng,
) -> Result<(PowerSumSpec, LevelPresentation)> {
    spec.validate()?;
    let mut last_err = None;
    for _ in 0..REDRAW_ATTEMPTS {
        let resolved = PowerSumSpec {
            num_vars: spec.num_vars,
            degree: spec.degree,
            generators: spec
                .generators
                .iter()
                .map(|summands| {
                    summands
                        .iter()
                        .map(|l| match l {
                            LinearForm::Fixed(c) => LinearForm::Fixed(c.iter().map(|&v| field.elem(v).value()).collect()),
                            LinearForm::Generic => {
                                LinearForm::Fixed((0..spec.num_vars).map(|_| field.random_nonzero(rng).value()).collect())
                            }
                        })
                        .collect()
                })
                .collect(),
        };
        let gens = resolved
            .generators
            .iter()
            .map(|summands| {
                let mut acc = Form::zero(field, spec.num_vars, spec.degree);
                for l in summands {
                    let LinearForm::Fixed(c) = l else {
                        unreachable!("resolved above")
                    };
                    let coeffs: Vec<FieldElem> = c.iter().map(|&v| field.elem(v)).collect();
                    acc = acc.add(&power_of_linear_form(field, &coeffs, spec.degree)?)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        match LevelPresentation::new(gens) {
            Ok(p) => return Ok((resolved, p)),
            Err(e @ Error::DependentGenerators { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

/// `h_i = min(C(i+r-1, r-1), t C(e-i+r-1, r-1))`, the h-vector of a
/// compressed level algebra of type `t`.
pub fn compressed_hvector(r: usize, e: u32, t: usize) -> Result<HVector> {
    if r == 0 || e == 0 || t == 0 {
        return Err(Error::InvalidParameters("compressed h-vector needs r, e, t >= 1".into()));
    }
    HVector::new(
        (0..=e)
            .map(|i| monomial_count(r, i).min(t.saturating_mul(monomial_count(r, e - i))))
            .collect(),
    )
}

/// A form of degree `e` in `r` variables with every coefficient random nonzero.
pub fn dense_random_form(field: PrimeField, r: usize, e: u32, rng: &mut SeededRng) -> Form {
    let mut f = Form::zero(field, r, e);
    for m in Monomial::all(r, e) {
        f.add_term(m, field.random_nonzero(rng)).expect("monomial has the right shape");
    }
    f
}

/// `t` dense random forms, redrawn until independent. Presents a compressed
/// level algebra with overwhelming probability.
pub fn generic_presentation(field: PrimeField, r: usize, e: u32, t: usize, rng: &mut SeededRng) -> Result<LevelPresentation> {
    let available = monomial_count(r, e);
    if t > available {
        return Err(Error::TypeTooLarge {
            requested: t,
            available,
        });
    }
    let mut last_err = None;
    for _ in 0..REDRAW_ATTEMPTS {
        let gens = (0..t).map(|_| dense_random_form(field, r, e, rng)).collect();
        match LevelPresentation::new(gens) {
            Ok(p) => return Ok(p),
            Err(e @ Error::DependentGenerators { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

/// Ambient algebra of two generic ternary septics `F, G` with the quotient
/// generated by `dF/dy_1` and `dG/dy_2`.
#[derive(Clone, Debug)]
pub struct SepticPair {
    pub ambient: LevelPresentation,
    pub quotient: LevelPresentation,
}

pub fn septic_pair(field: PrimeField, rng: &mut SeededRng) -> Result<SepticPair> {
    let mut last_err = None;
    for _ in 0..REDRAW_ATTEMPTS {
        let ambient = generic_presentation(field, 3, 7, 2, rng)?;
        let [f, g] = ambient.generators() else {
            unreachable!("two generators requested")
        };
        match LevelPresentation::new(vec![f.partial(0)?, g.partial(1)?]) {
            Ok(quotient) => return Ok(SepticPair { ambient, quotient }),
            Err(e @ Error::DependentGenerators { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

/// Two level algebras with the same h-vector `(1, (t+1)p, ..., (t+1)p, t)`.
///
/// `a1` is the block family. `a2` is generated by `F`, a sum of
/// `(t+1)p - (t-1)` generic `e`-th powers, together with `t - 1` single
/// generic `e`-th powers.
#[derive(Clone, Debug)]
pub struct SeparationPair {
    pub family: BlockFamily,
    pub a1: LevelPresentation,
    pub a2: LevelPresentation,
}

impl SeparationPair {
    /// The Gorenstein quotient of `a2` generated by its first generator `F`.
    pub fn designated_quotient(&self) -> Result<LevelPresentation> {
        LevelPresentation::new(vec![self.a2.generators()[0].clone()])
    }

    /// `(1, (t+1)p - (t-1), ..., (t+1)p - (t-1), 1)`.
    pub fn expected_designated_h(&self) -> HVector {
        let BlockFamily { t, p, e } = self.family;
        plateau(e, (t + 1) * p - (t - 1), 1)
    }
}

pub fn separation_pair(field: PrimeField, t: usize, p: usize, e: u32, rng: &mut SeededRng) -> Result<SeparationPair> {
    if t < 2 || p < 2 {
        return Err(Error::InvalidParameters(format!(
            "separation needs t > 1 and p > 1 (got t = {t}, p = {p})"
        )));
    }
    let family = BlockFamily::new(t, p, e)?;
    let a1 = family.presentation(field)?;
    let mut counts = vec![(t + 1) * p - (t - 1)];
    counts.extend(std::iter::repeat_n(1, t - 1));
    let a2 = power_sum_presentation(field, &PowerSumSpec::generic(family.num_vars(), e, &counts), rng)?;
    Ok(SeparationPair { family, a1, a2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn smallest_block_family() {
        let fam = BlockFamily::new(1, 1, 3).unwrap();
        let p = fam.presentation(fp()).unwrap();
        assert_eq!(p.num_vars(), 2);
        assert_eq!(p.generators()[0].to_string(), "y1^2*y2");
        assert_eq!(fam.expected_h().entries(), &[1, 2, 2, 1]);
    }

    #[test]
    fn block_family_two_two_four() {
        let fam = BlockFamily::new(2, 2, 4).unwrap();
        let p = fam.presentation(fp()).unwrap();
        assert_eq!(p.num_vars(), 6);
        let shown: Vec<_> = p.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["y1^3*y3 + y2^3*y4", "y1^3*y5 + y2^3*y6"]);
        assert_eq!(p.hvector().unwrap(), fam.expected_h());
        assert_eq!(fam.expected_h().entries(), &[1, 6, 6, 6, 2]);
        assert_eq!(fam.expected_quotient_h(1).unwrap().entries(), &[1, 4, 4, 4, 1]);
        assert!(fam.expected_quotient_h(3).is_err());
    }

    #[test]
    fn block_family_rejects_bad_params() {
        assert!(BlockFamily::new(0, 1, 3).is_err());
        assert!(BlockFamily::new(1, 0, 3).is_err());
        assert!(BlockFamily::new(1, 1, 2).is_err());
    }

    #[test]
    fn compressed_closed_form() {
        assert_eq!(compressed_hvector(3, 7, 2).unwrap().entries(), &[1, 3, 6, 10, 15, 12, 6, 2]);
        assert_eq!(compressed_hvector(1, 5, 1).unwrap().entries(), &[1; 6]);
        // r = 2: C(i+1,1) = i+1 against C(4-i,1) = 4-i
        assert_eq!(compressed_hvector(2, 3, 1).unwrap().entries(), &[1, 2, 2, 1]);
    }

    #[test]
    fn single_fixed_power() {
        let spec = PowerSumSpec {
            num_vars: 3,
            degree: 4,
            generators: vec![vec![LinearForm::Fixed(vec![1, 0, 0])]],
        };
        let p = power_sum_presentation(fp(), &spec, &mut SeededRng::new(0)).unwrap();
        assert_eq!(p.generators()[0].to_string(), "y1^4");
        assert_eq!(p.hvector().unwrap().entries(), &[1; 5]);
    }

    #[test]
    fn generic_power_sum_first_derivatives() {
        // s generic powers span min(s, r) linear forms after e-1 derivatives
        for (r, s) in [(3, 1), (3, 2), (3, 3), (4, 2), (2, 5)] {
            let spec = PowerSumSpec::generic(r, 4, &[s]);
            let h = power_sum_presentation(fp(), &spec, &mut SeededRng::new(5)).unwrap().hvector().unwrap();
            assert_eq!(h[1], s.min(r), "r={r} s={s}");
        }
    }

    #[test]
    fn dependent_power_sums_fail_after_redraws() {
        // two fixed equal summands can never be independent
        let spec = PowerSumSpec {
            num_vars: 2,
            degree: 3,
            generators: vec![vec![LinearForm::Fixed(vec![1, 1])], vec![LinearForm::Fixed(vec![1, 1])]],
        };
        assert_eq!(
            power_sum_presentation(fp(), &spec, &mut SeededRng::new(0)),
            Err(Error::DependentGenerators { index: 1 })
        );
    }

    #[test]
    fn power_sum_spec_validation() {
        let rng = &mut SeededRng::new(0);
        let bad = PowerSumSpec {
            num_vars: 2,
            degree: 3,
            generators: vec![vec![LinearForm::Fixed(vec![1, 1, 1])]],
        };
        assert!(matches!(power_sum_presentation(fp(), &bad, rng), Err(Error::VariableMismatch { .. })));
        let empty = PowerSumSpec::generic(2, 3, &[0]);
        assert!(power_sum_presentation(fp(), &empty, rng).is_err());
    }

    #[test]
    fn septics() {
        let pair = septic_pair(fp(), &mut SeededRng::new(17)).unwrap();
        assert_eq!(pair.ambient.hvector().unwrap().entries(), &[1, 3, 6, 10, 15, 12, 6, 2]);
        assert_eq!(pair.quotient.hvector().unwrap().entries(), &[1, 3, 6, 10, 12, 6, 2]);
    }

    #[test]
    fn separation() {
        let pair = separation_pair(fp(), 2, 2, 4, &mut SeededRng::new(3)).unwrap();
        assert_eq!(pair.a1.hvector().unwrap().entries(), &[1, 6, 6, 6, 2]);
        assert_eq!(pair.a2.hvector().unwrap().entries(), &[1, 6, 6, 6, 2]);
        let q = pair.designated_quotient().unwrap();
        assert_eq!(q.hvector().unwrap(), pair.expected_designated_h());
        assert_eq!(q.hvector().unwrap().entries(), &[1, 5, 5, 5, 1]);
        assert!(separation_pair(fp(), 1, 2, 4, &mut SeededRng::new(3)).is_err());
        assert!(separation_pair(fp(), 2, 1, 4, &mut SeededRng::new(3)).is_err());
    }

    #[test]
    fn generic_presentation_limits() {
        assert!(matches!(
            generic_presentation(fp(), 1, 4, 2, &mut SeededRng::new(0)),
            Err(Error::TypeTooLarge { .. })
        ));
    }
}
