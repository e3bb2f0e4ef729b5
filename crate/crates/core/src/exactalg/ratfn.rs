//! Rational functions: reduced fractions of multivariate polynomials.
//! The denominator is normalized so its lex-leading coefficient is 1,
//! which makes equal fractions identical representations.

use super::{gcd::poly_gcd, AlgError, MPoly, Scalar};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MRatFn<T> {
    num: MPoly<T>,
    den: MPoly<T>,
}

impl<T: Scalar> MRatFn<T> {
    pub fn new(num: MPoly<T>, den: MPoly<T>) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let (num, den) = MPoly::align(&num, &den);
        if num.is_zero() {
            return Ok(MRatFn {
                den: MPoly::one(num.vars()),
                num,
            });
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        // normalize: den monic in the lex-leading coefficient
        let lc = den.leading_coeff();
        den = den.monic();
        num = num
            .scale(&(T::one() / lc));
        Ok(MRatFn { num, den })
    }

    pub fn from_poly(p: MPoly<T>) -> Self {
        let one = MPoly::one(p.vars());
        MRatFn { num: p, den: one }
    }

    pub fn zero(vars: &[String]) -> Self {
        Self::from_poly(MPoly::zero(vars))
    }

    pub fn one(vars: &[String]) -> Self {
        Self::from_poly(MPoly::one(vars))
    }

    pub fn constant(vars: &[String], c: T) -> Self {
        Self::from_poly(MPoly::constant(vars, c))
    }

    pub fn num(&self) -> &MPoly<T> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<T> {
        &self.den
    }

    pub fn vars(&self) -> &[String] {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MPoly<T>> {
        if self.den.is_constant() && self.den.leading_coeff().is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        Self::new(n, self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MRatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgError> {
        if other.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn eval(&self, point: &[T]) -> Result<T, AlgError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.num.eval(point) / d)
    }
}

impl<T: Scalar> fmt::Display for MRatFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.as_poly().is_some() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::{rat, Poly, RatFn};
    use rand::{Rng, SeedableRng};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn cancel_common_factor() {
        let vs = vars(&["x", "y"]);
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let f = RatFn::new(x.pow(2).mul(&y), x.mul(&y)).unwrap();
        assert_eq!(f.as_poly(), Some(&x));
    }

    #[test]
    fn scalar_denominator_normalized() {
        // (2x, 4) reduces to (1/2)x over 1; cross-checked by evaluation
        let vs = vars(&["x"]);
        let x = Poly::var(&vs, "x").unwrap();
        let f = RatFn::new(x.scale(&rat(2, 1)), Poly::constant(&vs, rat(4, 1))).unwrap();
        assert_eq!(f.as_poly(), Some(&x.scale(&rat(1, 2))));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let p = rat(rng.gen_range(-20i64..20), 1);
            let lhs = f.eval(&[p.clone()]).unwrap();
            let rhs = rat(2, 4) * p;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coprime_unchanged() {
        let vs = vars(&["x", "y", "z"]);
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let z = Poly::var(&vs, "z").unwrap();
        let f = RatFn::new(x.mul(&y), z.clone()).unwrap();
        assert_eq!(f.num(), &x.mul(&y));
        assert_eq!(f.den(), &z);
    }

    #[test]
    fn zero_denominator_rejected() {
        let vs = vars(&["x"]);
        let x = Poly::var(&vs, "x").unwrap();
        assert!(RatFn::new(x.clone(), Poly::zero(&vs)).is_err());
    }

    #[test]
    fn cancellation_property_random() {
        // normalize(a c, b c) == normalize(a, b) for random nonzero c
        let vs = vars(&["x", "y"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..15 {
            let mut rnd_poly = || {
                let mut p = Poly::zero(&vs);
                for _ in 0..3 {
                    p.add_term(
                        vec![rng.gen_range(0..3), rng.gen_range(0..3)],
                        rat(rng.gen_range(-3i64..4), 1),
                    );
                }
                p
            };
            let a = rnd_poly();
            let mut b = rnd_poly();
            let mut c = rnd_poly();
            if b.is_zero() {
                b = Poly::one(&vs);
            }
            if c.is_zero() {
                c = Poly::one(&vs);
            }
            let f1 = RatFn::new(a.mul(&c), b.mul(&c)).unwrap();
            let f2 = RatFn::new(a, b).unwrap();
            assert_eq!(f1, f2);
        }
    }
}
