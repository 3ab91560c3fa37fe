//! Prime field arithmetic.
//!
//! All forms and matrices carry coefficients in a fixed prime field `F_p`,
//! which stands in for a characteristic-zero field: with `p` far larger than
//! any socle degree, factorials arising from differentiation never vanish,
//! and ranks of randomly specialized matrices agree with the generic ranks
//! over `Q` except with probability on the order of `size / p`.

use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Mersenne prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// A residue in `[0, p)`. The modulus lives in the owning [`PrimeField`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field `Z/pZ` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField {
            modulus: DEFAULT_PRIME,
        }
    }
}

impl PrimeField {
    /// Builds `F_p`, rejecting composite moduli.
    pub fn new(p: u64) -> Result<Self> {
        if !primal_check::miller_rabin(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { modulus: p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Checks that `p > degree`, so every falling factorial up to `degree` is a unit.
    pub fn check_degree(&self, degree: u32) -> Result<()> {
        if self.modulus <= u64::from(degree) {
            return Err(Error::PrimeTooSmall {
                prime: self.modulus,
                degree,
            });
        }
        Ok(())
    }

    /// Reduces an arbitrary integer into the field.
    #[inline]
    pub fn elem(&self, v: u64) -> FieldElem {
        FieldElem(v % self.modulus)
    }

    /// Accepts `v` only if it is already a canonical residue.
    pub fn canonical(&self, v: u64) -> Option<FieldElem> {
        (v < self.modulus).then_some(FieldElem(v))
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        let r = v.rem_euclid(self.modulus as i64);
        FieldElem(r as u64)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (s, overflow) = a.0.overflowing_add(b.0);
        if overflow || s >= self.modulus {
            FieldElem(s.wrapping_sub(self.modulus))
        } else {
            FieldElem(s)
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 >= b.0 {
            FieldElem(a.0 - b.0)
        } else {
            FieldElem(self.modulus - (b.0 - a.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a.0 == 0 {
            a
        } else {
            FieldElem(self.modulus - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.modulus <= 1 << 32 {
            FieldElem(a.0 * b.0 % self.modulus)
        } else {
            FieldElem((u128::from(a.0) * u128::from(b.0) % u128::from(self.modulus)) as u64)
        }
    }

    pub fn pow(&self, base: FieldElem, mut exp: u64) -> FieldElem {
        let mut acc = FieldElem::ONE;
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via Fermat: `a^(p-2)`.
    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.modulus - 2))
    }

    /// Uniform draw from `[1, p)`.
    pub fn random_nonzero(&self, rng: &mut SeededRng) -> FieldElem {
        FieldElem(rng.gen_range(1..self.modulus))
    }

    /// Uniform draw from `[0, p)`.
    pub fn random(&self, rng: &mut SeededRng) -> FieldElem {
        FieldElem(rng.gen_range(0..self.modulus))
    }
}

/// Deterministic random stream. One owner per stream; derive independent
/// streams with [`SeededRng::derive_seed`] instead of sharing.
#[derive(Clone, Debug)]
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A child seed determined by `(master, index)` alone.
    pub fn derive_seed(master: u64, index: u64) -> u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(master);
        rng.set_stream(index);
        rng.next_u64()
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}
