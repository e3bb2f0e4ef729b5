//! Finite-order quantum deformations of polynomial domains: truncated
//! star-product algebras with commutators, Ore-condition witnesses, and
//! the Rees/filtered bridge.

mod algebra;
mod filtered;
mod hpoly;
mod hseries;

pub use algebra::{DeformAlgebra, Presentation};
pub use filtered::{dehomogenize, rees_of_filtered, FilteredPresentation};
pub use hpoly::HPoly;
pub use hseries::HSeries;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DeformError {
    #[error("mismatched algebras: {0}")]
    Mismatch(String),
    #[error("not a regular element: leading coefficient lies in hbar*A")]
    NotRegular,
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("structure constants violate {0}")]
    BadStructure(String),
    #[error("relation violates the filtration: {0}")]
    FiltrationViolation(String),
    #[error("presentation is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("{0}")]
    Alg(#[from] crate::exactalg::AlgError),
}

/// A certified Ore witness: `s_left * a = a_left * s` re-verified at
/// construction time.
#[derive(Debug, Clone)]
pub struct OreWitness {
    pub s_left: HPoly,
    pub a_left: HPoly,
    pub certified: bool,
}

/// Left Ore witness from the truncated identity
/// `s^(N+1) a = (sum_j s^(N-j) ad(s)^j a) s`.
pub fn ore_witness(alg: &DeformAlgebra, s: &HPoly, a: &HPoly) -> Result<OreWitness, DeformError> {
    if s.coeff(0).is_zero() {
        return Err(DeformError::NotRegular);
    }
    let n = alg.order();
    let s_left = alg.star_pow(s, (n + 1) as u32)?;
    let mut a_left = HPoly::zero(alg.vars(), n);
    let mut ad_j = a.clone(); // ad(s)^j (a)
    for j in 0..=n {
        let s_pow = alg.star_pow(s, (n - j) as u32)?;
        a_left = a_left.add(&alg.star(&s_pow, &ad_j)?);
        if j < n {
            ad_j = alg.commutator(s, &ad_j)?;
        }
    }
    let lhs = alg.star(&s_left, a)?;
    let rhs = alg.star(&a_left, s)?;
    Ok(OreWitness {
        s_left,
        a_left,
        certified: lhs == rhs,
    })
}
