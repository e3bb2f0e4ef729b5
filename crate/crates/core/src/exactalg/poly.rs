//! Sparse multivariate polynomials with a canonical lexicographic term
//! order. Terms map exponent vectors to nonzero scalars; the variable
//! list is ordered and shared by every operation.

use super::{AlgError, Scalar};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<T> {
    vars: Vec<String>,
    /// exponent vector -> coefficient; no zero coefficients are stored.
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MPoly<T> {
    pub fn zero(vars: &[String]) -> Self {
        MPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: T) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, T::one())
    }

    pub fn var(vars: &[String], name: &str) -> Result<Self, AlgError> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_idx(vars, idx))
    }

    pub fn var_idx(vars: &[String], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(vars, e, num_traits::One::one())
    }

    pub fn monomial(vars: &[String], exps: Vec<u32>, coeff: T) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    /// The constant value, if this polynomial is a constant.
    pub fn constant_value(&self) -> Option<T> {
        if self.is_zero() {
            return Some(T::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: T) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, coeff);
            }
            Some(old) => {
                let s = old + coeff;
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
        }
    }

    /// Coefficient of a given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    fn check_aligned(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variable lists; align first"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_aligned(other);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_aligned(other);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        r.terms = r.terms.into_iter().map(|(e, c)| (e, -c)).collect();
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_aligned(other);
        let mut r = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                r.add_term(e, ca.clone() * cb.clone());
            }
        }
        r
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut r = self.clone();
        r.terms = r
            .terms
            .into_iter()
            .map(|(e, v)| (e, v * c.clone()))
            .collect();
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one(&self.vars);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Multiply by a single monomial.
    pub fn mul_mono(&self, exps: &[u32], coeff: &T) -> Self {
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let ne: Vec<u32> = e.iter().zip(exps).map(|(x, y)| x + y).collect();
            r.add_term(ne, c.clone() * coeff.clone());
        }
        r
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn partial(&self, idx: usize) -> Self {
        let mut r = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[idx] -= 1;
            let mut k = T::zero();
            for _ in 0..e[idx] {
                k = k + T::one();
            }
            r.add_term(ne, c.clone() * k);
        }
        r
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    /// Lexicographically leading (exponent vector, coefficient).
    pub fn leading(&self) -> Option<(&Vec<u32>, &T)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> T {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(T::zero)
    }

    /// Divide by the lex-leading coefficient so it becomes 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let lc = lc.clone();
                let mut r = self.clone();
                r.terms = r
                    .terms
                    .into_iter()
                    .map(|(e, c)| (e, c / lc.clone()))
                    .collect();
                r
            }
        }
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        self.check_aligned(other);
        if other.is_zero() {
            return None;
        }
        let (dlt, dlc) = other.leading().unwrap();
        let dlt = dlt.clone();
        let dlc = dlc.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((rlt, rlc)) = rem.leading() {
            let mut qe = Vec::with_capacity(rlt.len());
            for (a, b) in rlt.iter().zip(&dlt) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = rlc.clone() / dlc.clone();
            let qterm = Self::monomial(&self.vars, qe, qc);
            rem = rem.sub(&qterm.mul(other));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    /// Re-express over a superset variable list (preserving names).
    pub fn with_vars(&self, newvars: &[String]) -> Result<Self, AlgError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let idx = newvars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| AlgError::UnknownVariable(v.clone()))?;
            map.push(idx);
        }
        let mut r = Self::zero(newvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; newvars.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            r.add_term(ne, c.clone());
        }
        Ok(r)
    }

    /// Align two polynomials over the union of their variable lists
    /// (first list order wins, new names appended).
    pub fn align(a: &Self, b: &Self) -> (Self, Self) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (a.with_vars(&vars).unwrap(), b.with_vars(&vars).unwrap())
    }

    /// View as a univariate polynomial in variable `idx`; coefficients
    /// keep the full variable list with exponent zero at `idx`.
    pub fn to_univar(&self, idx: usize) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut ne = e.clone();
            ne[idx] = 0;
            out.entry(k)
                .or_insert_with(|| Self::zero(&self.vars))
                .add_term(ne, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn from_univar(vars: &[String], idx: usize, coeffs: &BTreeMap<u32, Self>) -> Self {
        let mut r = Self::zero(vars);
        for (k, p) in coeffs {
            for (e, c) in &p.terms {
                let mut ne = e.clone();
                ne[idx] += k;
                r.add_term(ne, c.clone());
            }
        }
        r
    }

    /// Weighted total degree under the given per-variable degrees.
    pub fn weighted_degree(&self, degrees: &[u32]) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().zip(degrees).map(|(k, d)| k * d).sum::<u32>())
            .max()
            .unwrap_or(0)
    }
}

impl<T: Scalar> fmt::Display for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending lex: leading term first
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::{rat, Poly};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn difference_of_squares() {
        let vs = vars(&["x", "y"]);
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let p = x.add(&y).mul(&x.sub(&y));
        let want = x.pow(2).sub(&y.pow(2));
        assert_eq!(p, want);
    }

    #[test]
    fn mul_by_zero_is_empty() {
        let vs = vars(&["x"]);
        let x = Poly::var(&vs, "x").unwrap();
        let z = Poly::zero(&vs);
        let p = x.mul(&z);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn cube_of_binomial() {
        // oracle: repeated multiplication
        let vs = vars(&["x"]);
        let x = Poly::var(&vs, "x").unwrap();
        let b = x.add(&Poly::one(&vs));
        let mut oracle = Poly::one(&vs);
        for _ in 0..3 {
            oracle = oracle.mul(&b);
        }
        assert_eq!(b.pow(3), oracle);
        let want = Poly::from_terms(
            &vs,
            vec![
                (vec![3], rat(1, 1)),
                (vec![2], rat(3, 1)),
                (vec![1], rat(3, 1)),
                (vec![0], rat(1, 1)),
            ],
        );
        assert_eq!(oracle, want);
    }

    #[test]
    fn exact_division() {
        let vs = vars(&["x", "y"]);
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let p = x.pow(2).sub(&y.pow(2));
        let d = x.add(&y);
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, x.sub(&y));
        assert!(x.div_exact(&y).is_none());
    }

    #[test]
    fn partial_derivative() {
        let vs = vars(&["x", "y"]);
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let p = x.pow(3).mul(&y); // x^3 y
        let want = x.pow(2).mul(&y).scale(&rat(3, 1));
        assert_eq!(p.partial(0), want);
    }

    #[test]
    fn align_merges_by_name() {
        let vx = vars(&["x"]);
        let vy = vars(&["y"]);
        let x = Poly::var(&vx, "x").unwrap();
        let y = Poly::var(&vy, "y").unwrap();
        let (a, b) = Poly::align(&x, &y);
        assert_eq!(a.vars(), &vars(&["x", "y"])[..]);
        assert_eq!(a.add(&b).num_terms(), 2);
    }

    #[test]
    fn display_canonical() {
        let vs = vars(&["x", "y"]);
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let p = x.pow(2).sub(&y.scale(&rat(1, 2)));
        assert_eq!(p.to_string(), "x^2 - 1/2*y");
    }
}
