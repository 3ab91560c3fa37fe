use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graded dimensions `(h_0, h_1, ..., h_e)` of a standard graded artinian algebra.
///
/// Always `h_0 = 1` and every entry positive, so the last index is the
/// socle degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HVector(Vec<usize>);

impl HVector {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        match entries.first() {
            None => return Err(Error::InvalidHVector("empty".into())),
            Some(&h0) if h0 != 1 => {
                return Err(Error::InvalidHVector(format!("h_0 must be 1, got {h0}")))
            }
            _ => {}
        }
        if let Some(i) = entries.iter().position(|&h| h == 0) {
            return Err(Error::InvalidHVector(format!("h_{i} is zero")));
        }
        Ok(HVector(entries))
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The socle dimension `h_e`, i.e. the type when the algebra is level.
    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// `(h_0, ..., h_d)`, the h-vector of the truncation in degrees `<= d`.
    pub fn truncate(&self, d: usize) -> Result<HVector> {
        if d > self.socle_degree() {
            return Err(Error::ShapeMismatch(format!(
                "cannot truncate an h-vector of socle degree {} at {d}",
                self.socle_degree()
            )));
        }
        Ok(HVector(self.0[..=d].to_vec()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Entrywise `self <= other` on a common length.
    pub fn dominated_by(&self, other: &HVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Index<usize> for HVector {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl TryFrom<Vec<usize>> for HVector {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        HVector::new(v)
    }
}

impl From<HVector> for Vec<usize> {
    fn from(h: HVector) -> Self {
        h.0
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.0, ","))
    }
}

/// Parses `1,4,9,13` (parentheses and spaces tolerated).
impl FromStr for HVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = trimmed
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidHVector(format!("bad entry {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HVector::new(entries)
    }
}

pub(crate) fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
