//! Poisson structures on polynomial rings: brackets induced by a
//! deformation at its depth, biderivation extension to polynomials and
//! rational functions, Jacobi defects, and centers.

use crate::defquant::{DeformAlgebra, DeformError};
use crate::exactalg::AlgError;
use crate::{Poly, Rat, RatFn, ScalarMatrix};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A bracket on k[x_1..x_n] given by its values on generator pairs and
/// extended as a biderivation. Jacobi is not assumed; `jacobi_defect`
/// measures it.
#[derive(Debug, Clone, PartialEq)]
pub struct PoissonStructure {
    vars: Vec<String>,
    /// {x_i, x_j} for i < j; the rest by antisymmetry.
    brackets: BTreeMap<(usize, usize), Poly>,
}

impl PoissonStructure {
    pub fn new(
        vars: Vec<String>,
        brackets: Vec<((usize, usize), Poly)>,
    ) -> Result<Self, AlgError> {
        let n = vars.len();
        let mut map = BTreeMap::new();
        for ((i, j), p) in brackets {
            if i >= j || j >= n {
                return Err(AlgError::DimensionMismatch(
                    "brackets must be indexed by i < j within range".into(),
                ));
            }
            map.insert((i, j), p.with_vars(&vars)?);
        }
        Ok(PoissonStructure {
            vars,
            brackets: map,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// {x_i, x_j} for arbitrary indices, by antisymmetry.
    pub fn bracket_gen(&self, i: usize, j: usize) -> Poly {
        if i < j {
            self.brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| Poly::zero(&self.vars))
        } else if i > j {
            self.bracket_gen(j, i).neg()
        } else {
            Poly::zero(&self.vars)
        }
    }

    /// Biderivation extension: {f, g} = sum_{i<j} pi_ij (df/dx_i dg/dx_j
    /// - df/dx_j dg/dx_i).
    pub fn bracket_poly(&self, f: &Poly, g: &Poly) -> Result<Poly, AlgError> {
        let f = f.with_vars(&self.vars)?;
        let g = g.with_vars(&self.vars)?;
        let n = self.vars.len();
        let mut out = Poly::zero(&self.vars);
        for i in 0..n {
            let fi = f.partial(i);
            if fi.is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let pij = self.bracket_gen(i, j);
                if pij.is_zero() {
                    continue;
                }
                out = out.add(&pij.mul(&fi).mul(&g.partial(j)));
            }
        }
        Ok(out)
    }

    /// Extension to the fraction field by the quotient rule.
    pub fn bracket_rat(&self, f: &RatFn, g: &RatFn) -> Result<RatFn, AlgError> {
        let n = self.vars.len();
        let mut out = RatFn::zero(&self.vars);
        for i in 0..n {
            let fi = rat_partial(f, i, &self.vars)?;
            if fi.is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let pij = self.bracket_gen(i, j);
                if pij.is_zero() {
                    continue;
                }
                let gj = rat_partial(g, j, &self.vars)?;
                out = out.add(&RatFn::from_poly(pij).mul(&fi).mul(&gj));
            }
        }
        Ok(out)
    }

    /// {{f,g},h} + {{g,h},f} + {{h,f},g}; identically zero iff the
    /// bracket is Poisson on these arguments.
    pub fn jacobi_defect(&self, f: &Poly, g: &Poly, h: &Poly) -> Result<Poly, AlgError> {
        let a = self.bracket_poly(&self.bracket_poly(f, g)?, h)?;
        let b = self.bracket_poly(&self.bracket_poly(g, h)?, f)?;
        let c = self.bracket_poly(&self.bracket_poly(h, f)?, g)?;
        Ok(a.add(&b).add(&c))
    }

    /// Jacobi on all generator triples (sufficient by the derivation
    /// property of the extension).
    pub fn jacobi_holds(&self) -> bool {
        let n = self.vars.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let xi = Poly::var_idx(&self.vars, i);
                    let xj = Poly::var_idx(&self.vars, j);
                    let xk = Poly::var_idx(&self.vars, k);
                    if !self.jacobi_defect(&xi, &xj, &xk).unwrap().is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Basis of {f : deg f <= max_deg, {f, x_i} = 0 for all i}, found
    /// by an exact nullspace computation over the monomial coordinates.
    pub fn polynomial_center(&self, max_deg: u32) -> Vec<Poly> {
        let n = self.vars.len();
        let monos = monomials_up_to(n, max_deg);
        // per unknown monomial and generator, the bracket {mono, x_g}
        let mut row_index: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
        let mut cols: Vec<BTreeMap<usize, Rat>> = Vec::with_capacity(monos.len());
        for e in &monos {
            let m = Poly::monomial(&self.vars, e.clone(), num_traits::One::one());
            let mut col = BTreeMap::new();
            for g in 0..n {
                let xg = Poly::var_idx(&self.vars, g);
                let br = self.bracket_poly(&m, &xg).unwrap();
                for (ee, c) in br.terms() {
                    let next = row_index.len();
                    let r = *row_index.entry((g, ee.clone())).or_insert(next);
                    col.insert(r, c.clone());
                }
            }
            cols.push(col);
        }
        let rows = row_index.len().max(1);
        let mut grid = vec![vec![Rat::zero(); monos.len()]; rows];
        for (c, col) in cols.iter().enumerate() {
            for (&r, v) in col {
                grid[r][c] = v.clone();
            }
        }
        let mat = ScalarMatrix::from_rows(grid).unwrap();
        mat.nullspace()
            .into_iter()
            .map(|v| {
                let mut p = Poly::zero(&self.vars);
                for (e, c) in monos.iter().zip(v) {
                    if !c.is_zero() {
                        p.add_term(e.clone(), c);
                    }
                }
                p
            })
            .collect()
    }

    /// Exact centrality test for a rational function: {f, x_i} = 0 for
    /// every generator (sufficient since brackets with f form a
    /// derivation).
    pub fn is_central_rat(&self, f: &RatFn) -> Result<bool, AlgError> {
        for i in 0..self.vars.len() {
            let xi = RatFn::from_poly(Poly::var_idx(&self.vars, i));
            if !self.bracket_rat(f, &xi)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn rat_partial(f: &RatFn, i: usize, vars: &[String]) -> Result<RatFn, AlgError> {
    let num = f.num().with_vars(vars)?;
    let den = f.den().with_vars(vars)?;
    // d(p/q) = (dp q - p dq) / q^2
    RatFn::new(
        num.partial(i).mul(&den).sub(&num.mul(&den.partial(i))),
        den.mul(&den),
    )
}

/// All exponent vectors of total degree at most `max_deg`.
pub(crate) fn monomials_up_to(n: usize, max_deg: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let used: u32 = v.iter().sum();
            for d in 0..=max_deg - used {
                let mut nv = v.clone();
                nv.push(d);
                next.push(nv);
            }
        }
        out = next;
    }
    out
}

/// The Poisson bracket induced by a deformation at its depth m: the
/// smallest m with some generator commutator nonzero at hbar^m, with
/// {x_i, x_j} read off there. Errors if the algebra is commutative
/// through its truncation order (no depth is visible).
pub fn induced_bracket(alg: &DeformAlgebra) -> Result<(PoissonStructure, usize), DeformError> {
    let n = alg.vars().len();
    let mut coms = BTreeMap::new();
    let mut depth: Option<usize> = None;
    for i in 0..n {
        for j in i + 1..n {
            let c = alg.commutator(&alg.gen_lift(i), &alg.gen_lift(j))?;
            if let Some(v) = c.valuation() {
                depth = Some(depth.map_or(v, |d| d.min(v)));
            }
            coms.insert((i, j), c);
        }
    }
    let m = depth.ok_or_else(|| {
        DeformError::Mismatch("algebra is commutative through the truncation order".into())
    })?;
    let brackets = coms
        .into_iter()
        .map(|(k, c)| (k, c.coeff(m)))
        .collect::<Vec<_>>();
    let ps = PoissonStructure::new(alg.vars().to_vec(), brackets)
        .map_err(DeformError::Alg)?;
    Ok((ps, m))
}
