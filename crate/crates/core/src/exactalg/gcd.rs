//! Multivariate polynomial GCD via the primitive-part Euclidean
//! algorithm on a main variable with content recursion. Adequate for
//! the handful of variables this engine works with.

use super::{MPoly, Scalar};

/// GCD of two polynomials, normalized so the lex-leading coefficient is 1.
/// The GCD of two zero polynomials is zero.
pub fn poly_gcd<T: Scalar>(a: &MPoly<T>, b: &MPoly<T>) -> MPoly<T> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.vars());
    }
    // main variable: last declared variable occurring in either operand
    let n = a.vars().len();
    let main = (0..n)
        .rev()
        .find(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .expect("non-constant polynomial must use a variable");

    if a.degree_in(main) == 0 || b.degree_in(main) == 0 {
        // one operand is free of the main variable; gcd divides its content
        let (free, other) = if a.degree_in(main) == 0 { (a, b) } else { (b, a) };
        let co = content(other, main);
        return poly_gcd(free, &co);
    }

    let ca = content(a, main);
    let cb = content(b, main);
    let cg = poly_gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");

    let mut f = pa;
    let mut g = pb;
    if f.degree_in(main) < g.degree_in(main) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_rem(&f, &g, main);
        if r.is_zero() {
            let pg = g.div_exact(&content(&g, main)).expect("content divides");
            return cg.mul(&pg).monic();
        }
        let r = r.div_exact(&content(&r, main)).expect("content divides");
        f = g;
        g = r;
        if g.degree_in(main) == 0 {
            // coprime as univariate polynomials in the main variable
            return cg.monic();
        }
    }
}

/// Content of `p` with respect to `main`: the GCD of its univariate
/// coefficients.
fn content<T: Scalar>(p: &MPoly<T>, main: usize) -> MPoly<T> {
    let coeffs = p.to_univar(main);
    let mut g = MPoly::zero(p.vars());
    for c in coeffs.values() {
        g = poly_gcd(&g, c);
        if g.is_constant() && !g.is_zero() {
            return MPoly::one(p.vars());
        }
    }
    g
}

/// Pseudo-remainder of `f` by `g` as univariate polynomials in `main`.
fn pseudo_rem<T: Scalar>(f: &MPoly<T>, g: &MPoly<T>, main: usize) -> MPoly<T> {
    let gu = g.to_univar(main);
    let dg = *gu.keys().next_back().expect("g nonzero");
    let lcg = gu.get(&dg).unwrap().clone();
    let mut r = f.clone();
    loop {
        let ru = r.to_univar(main);
        let dr = match ru.keys().next_back() {
            None => return r,
            Some(&d) => d,
        };
        if dr < dg {
            return r;
        }
        let lcr = ru.get(&dr).unwrap().clone();
        // r := lcg * r - lcr * x^(dr-dg) * g
        let mut shift = vec![0u32; f.vars().len()];
        shift[main] = dr - dg;
        r = r.mul(&lcg).sub(&g.mul_mono(&shift, &num_traits::One::one()).mul(&lcr));
    }
}
