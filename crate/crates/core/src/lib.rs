//! Cubic extensions of rational function fields with prescribed ramification.
//!
//! The crate is `no_std` (it needs `alloc`). Arithmetic is exact: finite
//! fields of characteristic other than 3, and the rationals.

#![no_std]
#[cfg(test)]
extern crate std;

extern crate alloc;

pub mod acceptance;
pub mod analyzer;
pub mod bitwist;
pub mod cubic;
pub mod descent;
pub mod error;
pub mod factor;
pub mod field;
pub mod function_field;
pub mod linalg;
pub mod mpoly;
pub mod parshin;
pub mod poly;
pub mod pure_cubic;
pub mod quadratic;
pub mod ratfunc;

pub use cubic::CubicModel;
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use function_field::{Divisor, Place, RamificationReport};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
