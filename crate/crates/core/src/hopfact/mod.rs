//! Finite-dimensional Hopf algebras as exact structure tensors, their
//! actions on deformation algebras, and the analysis toolkit: radical,
//! grouplikes, annihilators, inner-faithfulness, group quotients, and
//! the radical-filtration associated graded Hopf algebra.

mod action;
mod analysis;
mod hopf;

pub use action::{
    annihilator_mod_h, factors_through_group, inner_faithful, invariants, module_algebra_check,
    ActionReport, GroupVerdict, HopfAction, InvariantBases,
};
pub use analysis::{
    check_hopf_ideal, gr_radical_hopf, grouplikes, is_nilpotent_ideal, quotient_hopf, radical,
    GrouplikeOutcome,
};
pub use hopf::{group_algebra, hopf_verify, sweedler, AxiomReport, HopfAlgebra};

use crate::{Rat, ScalarMatrix};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("radical is not a Hopf ideal: {0}")]
    NotHopfIdeal(String),
    #[error("action is ill-formed: {0}")]
    BadAction(String),
    #[error("{0}")]
    Deform(#[from] crate::defquant::DeformError),
}

/// Row-reduced basis of the span of the given vectors.
pub(crate) fn rref_basis(vecs: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    debug_assert!(vecs.iter().all(|v| v.len() == n));
    let (rows, _) = ScalarMatrix::from_rows(vecs.to_vec()).unwrap().rref();
    rows
}

pub(crate) fn span_dim(vecs: &[Vec<Rat>], n: usize) -> usize {
    rref_basis(vecs, n).len()
}

pub(crate) fn in_span(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let n = v.len();
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span_dim(basis, n) == span_dim(&all, n)
}

/// Basis of the orthogonal complement (w.r.t. the standard dot product)
/// of the span of `basis` in dimension n; a vector lies in the span iff
/// it is killed by every returned functional.
pub(crate) fn perp(basis: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    if basis.is_empty() {
        return (0..n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n];
                e[i] = num_traits::One::one();
                e
            })
            .collect();
    }
    ScalarMatrix::from_rows(basis.to_vec()).unwrap().nullspace()
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |s, (x, y)| s + x.clone() * y.clone())
}
