//! Rees-algebra bridge between filtered presentations and homogeneous
//! star-product algebras: homogenize relations by inserting hbar powers
//! that record the filtration drop, and invert the construction by
//! setting hbar to one.

use super::{DeformAlgebra, DeformError, HPoly, Presentation};
use crate::Poly;
use std::collections::BTreeMap;

/// A filtered algebra with monomial-swap relations x_j x_i = rhs
/// (j > i), where every relation stays within filtration degree
/// deg(x_i) + deg(x_j).
#[derive(Debug, Clone, PartialEq)]
pub struct FilteredPresentation {
    pub vars: Vec<String>,
    pub degrees: Vec<u32>,
    pub relations: Vec<((usize, usize), Poly)>,
}

/// Build the truncated Rees algebra of a filtered presentation: each
/// term of a relation of filtration drop d is placed at hbar^d, so the
/// result is homogeneous for the total weight wdeg + hbar-degree.
pub fn rees_of_filtered(
    fp: &FilteredPresentation,
    order: usize,
) -> Result<DeformAlgebra, DeformError> {
    if fp.degrees.len() != fp.vars.len() {
        return Err(DeformError::BadStructure(
            "one filtration degree per variable required".into(),
        ));
    }
    let n = fp.vars.len();
    let mut rules = Vec::new();
    for &((j, i), ref rhs) in &fp.relations {
        if j <= i || j >= n {
            return Err(DeformError::BadStructure(
                "relations must be indexed by j > i within range".into(),
            ));
        }
        let rhs = rhs.with_vars(&fp.vars)?;
        let top = fp.degrees[i] + fp.degrees[j];
        let mut coeffs = vec![Poly::zero(&fp.vars); order + 1];
        for (e, c) in rhs.terms() {
            let w: u32 = e.iter().zip(&fp.degrees).map(|(k, d)| k * d).sum();
            if w > top {
                return Err(DeformError::FiltrationViolation(format!(
                    "term of weight {} in a relation of top weight {}",
                    w, top
                )));
            }
            let drop = (top - w) as usize;
            if drop <= order {
                coeffs[drop].add_term(e.clone(), c.clone());
            }
        }
        rules.push(((j, i), HPoly::new(&fp.vars, order, coeffs)));
    }
    DeformAlgebra::generic(fp.vars.clone(), rules, order, Some(fp.degrees.clone()))
}

/// Recover a filtered presentation from a homogeneous rewriting algebra
/// by setting hbar to one. Fails unless the algebra carries filtration
/// degrees and every rule is homogeneous for wdeg + hbar-degree.
pub fn dehomogenize(alg: &DeformAlgebra) -> Result<FilteredPresentation, DeformError> {
    let degrees = alg
        .degrees()
        .ok_or_else(|| DeformError::NotHomogeneous("no filtration degrees attached".into()))?
        .to_vec();
    let rules: &BTreeMap<(usize, usize), HPoly> = match alg.presentation() {
        Presentation::GenericRewriting { rules } => rules,
        _ => {
            return Err(DeformError::NotHomogeneous(
                "only rewriting presentations dehomogenize".into(),
            ))
        }
    };
    let mut relations = Vec::new();
    for (&(j, i), rhs) in rules {
        let top = degrees[i] + degrees[j];
        for k in 0..=alg.order() {
            for (e, _) in rhs.coeff(k).terms() {
                let w: u32 = e.iter().zip(&degrees).map(|(x, d)| x * d).sum();
                if w + k as u32 != top {
                    return Err(DeformError::NotHomogeneous(format!(
                        "rule for ({}, {}) has a term of total weight {} != {}",
                        alg.vars()[j],
                        alg.vars()[i],
                        w + k as u32,
                        top
                    )));
                }
            }
        }
        relations.push(((j, i), rhs.at_h_one()));
    }
    Ok(FilteredPresentation {
        vars: alg.vars().to_vec(),
        degrees,
        relations,
    })
}
