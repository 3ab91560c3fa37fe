//! Exact computations with level artinian algebras given by Macaulay inverse
//! systems over a large prime field.
//!
//! A [`LevelPresentation`] holds the generators of an inverse system, forms
//! of one degree `e`. Its h-vector counts independent derivatives in each
//! degree. Generic level quotients of type `c` and socle degree `d` are drawn
//! from the degree-`d` derivatives, and [`bounds_report`] gives the lower and
//! upper bounds their h-vectors must satisfy.
//!
//! ```
//! use apolarity_lab::{bounds_report, BlockFamily, PrimeField, SeededRng};
//!
//! let field = PrimeField::default();
//! let p = BlockFamily::new(2, 2, 4)?.presentation(field)?;
//! let h = p.hvector()?;
//! assert_eq!(h.to_string(), "1,6,6,6,2");
//!
//! let q = p.generic_quotient(4, 1, &mut SeededRng::new(1))?.hvector()?;
//! assert_eq!(q.to_string(), "1,4,4,4,1");
//! assert_eq!(bounds_report(&h, 4, 1)?.lower_vector(), q.entries());
//! # Ok::<(), apolarity_lab::Error>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod error;
pub mod field;
pub mod hvector;
pub mod inverse_system;
pub mod linalg;
pub mod poly;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldElem, PrimeField, SeededRng, DEFAULT_PRIME};
pub use hvector::HVector;
pub use inverse_system::{validate_level, DerivativeSpace, LevelPresentation};
pub use linalg::{rank_of_span, random_combinations, rref, MatrixFp, ReducedBasis};
pub use poly::{monomial_count, power_of_linear_form, Form, Monomial};
pub use bounds::{bounds_report, check_within, lower_bound, upper_bound, BoundsReport, Containment, RationalValue};
pub use constructions::{compressed_hvector, draw_power_sum, power_sum_presentation, separation_pair, septic_pair, BlockFamily, LinearForm, PowerSumSpec};
