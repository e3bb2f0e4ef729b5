//! Truncated scalar power series in hbar: elements of k[h]/(h^(N+1)).

use super::DeformError;
use crate::{rat, Rat};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSeries {
    order: usize,
    coeffs: Vec<Rat>, // exactly order+1 entries
}

impl HSeries {
    pub fn from_rats(order: usize, mut coeffs: Vec<Rat>) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        HSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_rats(order, vec![])
    }

    pub fn one(order: usize) -> Self {
        Self::from_rats(order, vec![Rat::one()])
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        Self::from_rats(order, vec![c])
    }

    /// exp(lambda * h) truncated: sum_k lambda^k / k! h^k.
    pub fn exp_lambda(lambda: Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rat::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term * lambda.clone() / rat(k as i64, 1);
            coeffs.push(term.clone());
        }
        HSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        HSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let mut coeffs = vec![Rat::zero(); self.order + 1];
        for i in 0..=self.order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=self.order - i {
                coeffs[i + j] =
                    coeffs[i + j].clone() + self.coeffs[i].clone() * other.coeffs[j].clone();
            }
        }
        HSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Truncated multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, DeformError> {
        if self.coeffs[0].is_zero() {
            return Err(DeformError::NotInvertible);
        }
        let c0 = self.coeffs[0].clone();
        let mut inv = vec![Rat::zero(); self.order + 1];
        inv[0] = Rat::one() / c0.clone();
        for k in 1..=self.order {
            let mut s = Rat::zero();
            for j in 0..k {
                s = s + inv[j].clone() * self.coeffs[k - j].clone();
            }
            inv[k] = -s / c0.clone();
        }
        Ok(HSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    /// Truncate or extend (with zeros) to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_rats(order, self.coeffs.clone())
    }

    /// Smallest k with a nonzero h^k coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "h")?;
                    } else {
                        write!(f, "h^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_plus_h() {
        let q = HSeries::from_rats(2, vec![rat(1, 1), rat(1, 1)]);
        let inv = q.inverse().unwrap();
        // 1 - h + h^2
        assert_eq!(inv.coeffs(), &[rat(1, 1), rat(-1, 1), rat(1, 1)]);
        assert!(q.mul(&inv).is_one());
    }

    #[test]
    fn exp_series() {
        let q = HSeries::exp_lambda(rat(1, 1), 3);
        assert_eq!(q.coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]);
        // q * q^{-1} = 1, and q^{-1} = exp(-h) truncated
        assert_eq!(q.inverse().unwrap(), HSeries::exp_lambda(rat(-1, 1), 3));
    }

    #[test]
    fn valuation() {
        let s = HSeries::from_rats(3, vec![rat(0, 1), rat(0, 1), rat(5, 1)]);
        assert_eq!(s.valuation(), Some(2));
        assert_eq!(HSeries::zero(2).valuation(), None);
    }

    #[test]
    fn display_literal() {
        let s = HSeries::from_rats(2, vec![rat(1, 1), rat(1, 1), rat(1, 2)]);
        assert_eq!(s.to_string(), "1 + h + 1/2*h^2");
    }
}
