//! Exact scalars, dense matrices and univariate polynomials.

pub mod field;
pub mod matrix;
pub mod poly;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{Matrix, Span};
