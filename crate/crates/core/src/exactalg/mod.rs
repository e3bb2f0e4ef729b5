//! Exact scalar, polynomial, rational-function, and linear-algebra
//! substrate. Everything here is generic over the scalar type; the
//! concrete aliases over `BigRational` live at the crate root.

mod gcd;
mod matrix;
mod poly;
mod ratfn;

pub use gcd::poly_gcd;
pub use matrix::{poly_det, poly_rank, ratfn_det, ratfn_rank, Matrix};
pub use poly::MPoly;
pub use ratfn::MRatFn;

use num_traits::Signed;
use std::fmt;
use thiserror::Error;

/// Scalar requirements for the substrate: an exact (or at least
/// division-closed) signed field. Satisfied by `BigRational`, `f32`, `f64`.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Signed + std::ops::Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Signed + std::ops::Neg<Output = T>
{
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Shorthand for an exact rational `n/d`.
pub fn rat(n: i64, d: i64) -> num::BigRational {
    num::BigRational::new(n.into(), d.into())
}
