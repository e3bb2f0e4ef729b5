//! Truncated hbar-series with polynomial coefficients: the carrier of
//! elements of A_N = A / hbar^(N+1) A in a fixed normal form.

use crate::{rat, Poly, Rat};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPoly {
    order: usize,
    coeffs: Vec<Poly>, // exactly order+1 entries, shared variable list
}

impl HPoly {
    pub fn new(vars: &[String], order: usize, mut coeffs: Vec<Poly>) -> Self {
        assert!(coeffs.len() <= order + 1, "too many hbar coefficients");
        for c in &coeffs {
            assert_eq!(c.vars(), vars, "coefficient over wrong variable list");
        }
        while coeffs.len() < order + 1 {
            coeffs.push(Poly::zero(vars));
        }
        HPoly { order, coeffs }
    }

    pub fn zero(vars: &[String], order: usize) -> Self {
        Self::new(vars, order, vec![])
    }

    pub fn one(vars: &[String], order: usize) -> Self {
        Self::new(vars, order, vec![Poly::one(vars)])
    }

    /// Canonical lift of an A_0 element: concentrated at hbar^0.
    pub fn from_poly(p: Poly, order: usize) -> Self {
        let vars = p.vars().to_vec();
        Self::new(&vars, order, vec![p])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vars(&self) -> &[String] {
        self.coeffs[0].vars()
    }

    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.vars()))
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        HPoly {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        HPoly {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        HPoly {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiply by hbar^k (dropping what truncates away).
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Poly::zero(self.vars()); self.order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= self.order {
                coeffs[i + k] = c.clone();
            }
        }
        HPoly {
            order: self.order,
            coeffs,
        }
    }

    /// Smallest k with a nonzero hbar^k coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Reduction modulo hbar.
    pub fn mod_h(&self) -> Poly {
        self.coeffs[0].clone()
    }

    /// Set hbar -> 1 (used by dehomogenization).
    pub fn at_h_one(&self) -> Poly {
        let mut p = Poly::zero(self.vars());
        for c in &self.coeffs {
            p = p.add(c);
        }
        p
    }

    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        Self::new(self.vars(), order, coeffs)
    }

    /// Random element for property suites: a handful of small terms at
    /// each hbar order (or only at hbar^0 when `unit_like` asks for a
    /// regular element).
    pub fn random<R: rand::Rng>(
        vars: &[String],
        order: usize,
        rng: &mut R,
        max_deg: u32,
        unit_like: bool,
    ) -> Self {
        let n = vars.len();
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut p = Poly::zero(vars);
            if !unit_like || k == 0 {
                let terms = rng.gen_range(1..3);
                for _ in 0..terms {
                    let mut e = vec![0u32; n];
                    let mut budget = max_deg;
                    for ei in e.iter_mut() {
                        let d = rng.gen_range(0..=budget.min(2));
                        *ei = d;
                        budget -= d;
                    }
                    p.add_term(e, rat(rng.gen_range(-3i64..=3), 1));
                }
            }
            coeffs.push(p);
        }
        if unit_like && coeffs[0].is_zero() {
            coeffs[0] = Poly::one(vars);
        }
        HPoly { order, coeffs }
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "h*({})", c)?,
                _ => write!(f, "h^{}*({})", k, c)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn shift_truncates() {
        let vs = vars(&["x"]);
        let x = Poly::var(&vs, "x").unwrap();
        let p = HPoly::from_poly(x.clone(), 1);
        let s = p.shift(1);
        assert_eq!(s.coeff(0), Poly::zero(&vs));
        assert_eq!(s.coeff(1), x);
        assert!(s.shift(1).is_zero());
    }

    #[test]
    fn valuation_and_mod_h() {
        let vs = vars(&["x"]);
        let x = Poly::var(&vs, "x").unwrap();
        let p = HPoly::from_poly(x.clone(), 2).shift(2);
        assert_eq!(p.valuation(), Some(2));
        assert!(p.mod_h().is_zero());
    }
}
