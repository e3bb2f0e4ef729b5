//! Exact symbolic computation engine for finite-order deformation
//! quantizations of commutative polynomial domains and finite-dimensional
//! Hopf algebra actions on them.
//!
//! The substrate ([`exactalg`]) is generic over the scalar type; all the
//! domain layers compute over exact rationals via the aliases below.

pub mod corpus;
pub mod defquant;
pub mod exactalg;
pub mod frontend;
pub mod galois;
pub mod hopfact;
pub mod poisson;

/// The exact rational scalar used by every domain module.
pub type Rat = num::BigRational;

/// Multivariate polynomial over the rationals.
pub type Poly = exactalg::MPoly<Rat>;

/// Rational function over the rationals.
pub type RatFn = exactalg::MRatFn<Rat>;

/// Dense matrix with rational entries.
pub type ScalarMatrix = exactalg::Matrix<Rat>;

/// Dense matrix with rational-function entries.
pub type RatFnMatrix = exactalg::Matrix<RatFn>;

pub use exactalg::rat;
