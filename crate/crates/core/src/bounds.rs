//! Upper and lower bounds on the h-vector `H` of a level algebra of socle
//! degree `d` and type `c` that is relatively compressed with respect to a
//! level algebra with h-vector `h`:
//!
//! ```text
//! ((h_d - c) h_{d-i} + (c h_d - 1) h_i) / (h_d^2 - 1)  <=  H_i  <=  min(h_i, c h_{d-i})
//! ```
//!
//! for `i = 1..=d`. The lower side is kept as an exact rational and also
//! rounded up, since `H_i` is an integer.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hvector::{join, HVector};

/// An exact rational in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalValue(BigRational);

impl RationalValue {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        RationalValue(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        RationalValue(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl Serialize for RationalValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_params(h: &HVector, d: usize, c: usize) -> Result<()> {
    let e = h.socle_degree();
    if d == 0 || d > e {
        return Err(Error::InvalidParameters(format!(
            "socle degree d = {d} must lie in 1..={e}"
        )));
    }
    if c == 0 {
        return Err(Error::InvalidParameters("type c must be at least 1".into()));
    }
    if c > h[d] {
        return Err(Error::TypeTooLarge {
            requested: c,
            available: h[d],
        });
    }
    Ok(())
}

/// The raw lower-bound expression at index `i`. Fails with
/// [`Error::DegenerateSocle`] when `h_d = 1`.
pub fn lower_bound_formula(h: &HVector, d: usize, c: usize, i: usize) -> Result<RationalValue> {
    check_params(h, d, c)?;
    if i > d {
        return Err(Error::ShapeMismatch(format!("index {i} exceeds d = {d}")));
    }
    let hd = BigInt::from(h[d]);
    if hd == BigInt::from(1) {
        return Err(Error::DegenerateSocle { d });
    }
    let c = BigInt::from(c);
    let numer = (&hd - &c) * BigInt::from(h[d - i]) + (&c * &hd - 1) * BigInt::from(h[i]);
    let denom = &hd * &hd - 1;
    Ok(RationalValue::new(numer, denom))
}

/// Lower bound for `i = 1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub exact: Vec<RationalValue>,
    pub ceiled: Vec<usize>,
    /// Set when `h_d = 1`: the truncation is Gorenstein, `H` equals the
    /// truncated `h`, and the formula is bypassed.
    pub degenerate: bool,
}

pub fn lower_bound(h: &HVector, d: usize, c: usize) -> Result<LowerBound> {
    check_params(h, d, c)?;
    let mut exact = Vec::with_capacity(d);
    let degenerate = h[d] == 1;
    for i in 1..=d {
        let v = if degenerate {
            RationalValue::from_integer(h[i])
        } else {
            lower_bound_formula(h, d, c, i)?
        };
        exact.push(v);
    }
    let ceiled = exact
        .iter()
        .map(|v| {
            let n = v.ceil();
            n.to_usize()
                .ok_or_else(|| Error::InvalidHVector(format!("lower bound {n} is out of range")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LowerBound {
        exact,
        ceiled,
        degenerate,
    })
}

/// `min(h_i, c h_{d-i})` for `i = 1..=d`.
pub fn upper_bound(h: &HVector, d: usize, c: usize) -> Result<Vec<usize>> {
    check_params(h, d, c)?;
    Ok((1..=d).map(|i| h[i].min(c.saturating_mul(h[d - i]))).collect())
}

/// Both bounds for one `(h, d, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub h: HVector,
    pub d: usize,
    pub c: usize,
    /// Indexed `1..=d`.
    pub lower_exact: Vec<RationalValue>,
    /// Indexed `1..=d`.
    pub lower_int: Vec<usize>,
    /// Indexed `1..=d`.
    pub upper: Vec<usize>,
    pub degenerate_case: bool,
}

pub fn bounds_report(h: &HVector, d: usize, c: usize) -> Result<BoundsReport> {
    let lower = lower_bound(h, d, c)?;
    let upper = upper_bound(h, d, c)?;
    Ok(BoundsReport {
        h: h.clone(),
        d,
        c,
        lower_exact: lower.exact,
        lower_int: lower.ceiled,
        upper,
        degenerate_case: lower.degenerate,
    })
}

impl BoundsReport {
    /// `(1, lower_int...)`, the lower bound as a full h-vector.
    pub fn lower_vector(&self) -> Vec<usize> {
        std::iter::once(1).chain(self.lower_int.iter().copied()).collect()
    }

    /// `(1, upper...)`.
    pub fn upper_vector(&self) -> Vec<usize> {
        std::iter::once(1).chain(self.upper.iter().copied()).collect()
    }

    /// Whether `lower_int <= upper` at every index.
    pub fn is_consistent(&self) -> bool {
        self.lower_int.iter().zip(&self.upper).all(|(l, u)| l <= u)
    }

    /// Indices `1..=d` where the ceiled lower bound exceeds the upper bound.
    pub fn inconsistent_indices(&self) -> Vec<usize> {
        (1..=self.d)
            .filter(|&i| self.lower_int[i - 1] > self.upper[i - 1])
            .collect()
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "h = {}", self.h)?;
        writeln!(f, "d = {}, c = {}", self.d, self.c)?;
        let exact: Vec<String> = std::iter::once("1".to_string())
            .chain(self.lower_exact.iter().map(|v| v.to_string()))
            .collect();
        writeln!(f, "lower_exact = {}", exact.join(","))?;
        writeln!(f, "lower = {}", join(&self.lower_vector(), ","))?;
        write!(f, "upper = {}", join(&self.upper_vector(), ","))?;
        if self.degenerate_case {
            write!(
                f,
                "\nnote: h_d = 1, so the truncation is Gorenstein and H is the truncated h"
            )?;
        }
        Ok(())
    }
}

/// Verdict for one index of a candidate `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexVerdict {
    pub index: usize,
    pub value: usize,
    pub lower: usize,
    pub upper: usize,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub verdicts: Vec<IndexVerdict>,
    pub pass: bool,
}

impl Containment {
    pub fn first_failure(&self) -> Option<&IndexVerdict> {
        self.verdicts.iter().find(|v| !(v.lower_ok && v.upper_ok))
    }

    pub fn failing_indices(&self) -> Vec<usize> {
        self.verdicts
            .iter()
            .filter(|v| !(v.lower_ok && v.upper_ok))
            .map(|v| v.index)
            .collect()
    }

    /// `H_i - lower_i` for `i = 1..=d` (negative means violated).
    pub fn lower_gaps(&self) -> Vec<i64> {
        self.verdicts.iter().map(|v| v.value as i64 - v.lower as i64).collect()
    }

    /// `upper_i - H_i` for `i = 1..=d`.
    pub fn upper_gaps(&self) -> Vec<i64> {
        self.verdicts.iter().map(|v| v.upper as i64 - v.value as i64).collect()
    }
}

/// Checks a candidate `H` of socle degree `d` and type `c` against both bounds.
pub fn check_within(big_h: &HVector, h: &HVector, d: usize, c: usize) -> Result<Containment> {
    if big_h.socle_degree() != d {
        return Err(Error::ShapeMismatch(format!(
            "H has socle degree {}, expected {d}",
            big_h.socle_degree()
        )));
    }
    if big_h.last() != c {
        return Err(Error::ShapeMismatch(format!(
            "H_d = {}, expected the type c = {c}",
            big_h.last()
        )));
    }
    let report = bounds_report(h, d, c)?;
    Ok(check_against(big_h, &report))
}

/// Containment of `H` in an already computed report.
pub fn check_against(big_h: &HVector, report: &BoundsReport) -> Containment {
    let verdicts: Vec<IndexVerdict> = (1..=report.d)
        .map(|i| {
            let value = big_h[i];
            let (lower, upper) = (report.lower_int[i - 1], report.upper[i - 1]);
            IndexVerdict {
                index: i,
                value,
                lower,
                upper,
                lower_ok: value >= lower,
                upper_ok: value <= upper,
            }
        })
        .collect();
    let pass = verdicts.iter().all(|v| v.lower_ok && v.upper_ok);
    Containment { verdicts, pass }
}
