//! Star-product algebras at finite truncation order: the Moyal closed
//! formula plus rewriting presentations (quantum polynomial, enveloping,
//! generic) with a PBW-style ascending normal form.

use super::{DeformError, HPoly, HSeries};
use crate::{rat, Poly, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub enum Presentation {
    /// Independent (position, momentum) pairs; the star product is the
    /// closed bidifferential formula summed over pair multi-indices.
    Moyal { pairs: Vec<(usize, usize)> },
    /// x_i x_j = q_ij x_j x_i for i < j, with q_ij = 1 mod hbar.
    QuantumPoly { q: BTreeMap<(usize, usize), HSeries> },
    /// [x_i, x_j] = c_ij (linear) for i < j; PBW normal ordering.
    LieEnveloping { c: BTreeMap<(usize, usize), Poly> },
    /// Explicit truncated rewriting rules x_j * x_i -> HPoly for j > i.
    GenericRewriting { rules: BTreeMap<(usize, usize), HPoly> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeformAlgebra {
    vars: Vec<String>,
    order: usize,
    pres: Presentation,
    /// Rewriting rules x_j * x_i -> normal form, precomputed for every
    /// descending pair (absent for Moyal).
    rules: BTreeMap<(usize, usize), HPoly>,
    /// Filtration degrees when this algebra came from a Rees construction.
    degrees: Option<Vec<u32>>,
}

impl DeformAlgebra {
    pub fn moyal(
        vars: Vec<String>,
        pairs: Vec<(usize, usize)>,
        order: usize,
    ) -> Result<Self, DeformError> {
        let mut seen = std::collections::BTreeSet::new();
        for &(x, y) in &pairs {
            if x >= vars.len() || y >= vars.len() {
                return Err(DeformError::BadStructure("pair index out of range".into()));
            }
            if !seen.insert(x) || !seen.insert(y) {
                return Err(DeformError::BadStructure("Moyal pairs must be disjoint".into()));
            }
        }
        Ok(DeformAlgebra {
            vars,
            order,
            pres: Presentation::Moyal { pairs },
            rules: BTreeMap::new(),
            degrees: None,
        })
    }

    pub fn quantum_poly(
        vars: Vec<String>,
        q: Vec<((usize, usize), HSeries)>,
        order: usize,
    ) -> Result<Self, DeformError> {
        let n = vars.len();
        let mut qmap = BTreeMap::new();
        for ((i, j), s) in q {
            if i >= j || j >= n {
                return Err(DeformError::BadStructure(
                    "q entries must be indexed by i < j within range".into(),
                ));
            }
            let s = s.with_order(order);
            if !s.coeff(0).is_one() {
                return Err(DeformError::BadStructure(
                    "q_ij must be 1 modulo hbar".into(),
                ));
            }
            qmap.insert((i, j), s);
        }
        let mut rules = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let q_ij = qmap
                    .get(&(i, j))
                    .cloned()
                    .unwrap_or_else(|| HSeries::one(order));
                let q_ji = q_ij.inverse()?; // q_ij q_ji = 1 mod hbar^(N+1)
                let mut e = vec![0u32; n];
                e[i] += 1;
                e[j] += 1;
                let mono = Poly::monomial(&vars, e, Rat::one());
                let coeffs = (0..=order).map(|k| mono.scale(&q_ji.coeff(k))).collect();
                rules.insert((j, i), HPoly::new(&vars, order, coeffs));
            }
        }
        Ok(DeformAlgebra {
            vars,
            order,
            pres: Presentation::QuantumPoly { q: qmap },
            rules,
            degrees: None,
        })
    }

    pub fn lie_enveloping(
        vars: Vec<String>,
        brackets: Vec<((usize, usize), Poly)>,
        order: usize,
    ) -> Result<Self, DeformError> {
        let n = vars.len();
        let mut cmap: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for ((i, j), p) in brackets {
            if i >= j || j >= n {
                return Err(DeformError::BadStructure(
                    "brackets must be indexed by i < j within range".into(),
                ));
            }
            let p = p.with_vars(&vars)?;
            if p.terms().any(|(e, _)| e.iter().sum::<u32>() != 1) {
                return Err(DeformError::BadStructure(
                    "Lie bracket values must be linear in the generators".into(),
                ));
            }
            cmap.insert((i, j), p);
        }
        // [x_i, x_j] for any pair, by antisymmetry
        let bk = |cmap: &BTreeMap<(usize, usize), Poly>, i: usize, j: usize| -> Poly {
            if i == j {
                Poly::zero(&vars)
            } else if i < j {
                cmap.get(&(i, j)).cloned().unwrap_or_else(|| Poly::zero(&vars))
            } else {
                cmap.get(&(j, i))
                    .map(|p| p.neg())
                    .unwrap_or_else(|| Poly::zero(&vars))
            }
        };
        // bilinear extension to linear polynomials
        let bk_lin = |cmap: &BTreeMap<(usize, usize), Poly>, p: &Poly, q: &Poly| -> Poly {
            let mut out = Poly::zero(&vars);
            for (ep, cp) in p.terms() {
                let i = ep.iter().position(|&e| e == 1).unwrap();
                for (eq, cq) in q.terms() {
                    let j = eq.iter().position(|&e| e == 1).unwrap();
                    out = out.add(&bk(cmap, i, j).scale(&(cp.clone() * cq.clone())));
                }
            }
            out
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let xi = Poly::var_idx(&vars, i);
                    let xj = Poly::var_idx(&vars, j);
                    let xk = Poly::var_idx(&vars, k);
                    let jac = bk_lin(&cmap, &bk(&cmap, i, j), &xk)
                        .add(&bk_lin(&cmap, &bk(&cmap, j, k), &xi))
                        .add(&bk_lin(&cmap, &bk(&cmap, k, i), &xj));
                    if !jac.is_zero() {
                        return Err(DeformError::BadStructure(format!(
                            "Jacobi identity on generators ({},{},{})",
                            vars[i], vars[j], vars[k]
                        )));
                    }
                }
            }
        }
        let mut rules = BTreeMap::new();
        if order >= 1 {
            for i in 0..n {
                for j in i + 1..n {
                    // x_j * x_i -> x_i x_j + hbar [x_j, x_i]
                    let mut e = vec![0u32; n];
                    e[i] += 1;
                    e[j] += 1;
                    let mut coeffs = vec![Poly::monomial(&vars, e, Rat::one())];
                    coeffs.push(bk(&cmap, j, i));
                    rules.insert((j, i), HPoly::new(&vars, order, coeffs));
                }
            }
        }
        Ok(DeformAlgebra {
            vars,
            order,
            pres: Presentation::LieEnveloping { c: cmap },
            rules,
            degrees: None,
        })
    }

    pub fn generic(
        vars: Vec<String>,
        rules: Vec<((usize, usize), HPoly)>,
        order: usize,
        degrees: Option<Vec<u32>>,
    ) -> Result<Self, DeformError> {
        let n = vars.len();
        let mut rmap = BTreeMap::new();
        for ((j, i), rhs) in rules {
            if j <= i || j >= n {
                return Err(DeformError::BadStructure(
                    "rewriting rules must be indexed by j > i within range".into(),
                ));
            }
            let rhs = rhs.with_order(order);
            // flatness: the hbar^0 part must be exactly x_i x_j
            let mut e = vec![0u32; n];
            e[i] += 1;
            e[j] += 1;
            if rhs.coeff(0) != Poly::monomial(&vars, e, Rat::one()) {
                return Err(DeformError::BadStructure(
                    "rule must equal x_i*x_j modulo hbar".into(),
                ));
            }
            rmap.insert((j, i), rhs);
        }
        for i in 0..n {
            for j in i + 1..n {
                if !rmap.contains_key(&(j, i)) {
                    let mut e = vec![0u32; n];
                    e[i] += 1;
                    e[j] += 1;
                    rmap.insert(
                        (j, i),
                        HPoly::new(&vars, order, vec![Poly::monomial(&vars, e, Rat::one())]),
                    );
                }
            }
        }
        Ok(DeformAlgebra {
            vars,
            order,
            pres: Presentation::GenericRewriting {
                rules: rmap.clone(),
            },
            rules: rmap,
            degrees,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    pub fn rules(&self) -> &BTreeMap<(usize, usize), HPoly> {
        &self.rules
    }

    /// Canonical lift of generator `i`.
    pub fn gen_lift(&self, i: usize) -> HPoly {
        HPoly::from_poly(Poly::var_idx(&self.vars, i), self.order)
    }

    pub fn lift(&self, p: &Poly) -> Result<HPoly, DeformError> {
        Ok(HPoly::from_poly(p.with_vars(&self.vars)?, self.order))
    }

    fn check_member(&self, a: &HPoly) -> Result<(), DeformError> {
        if a.vars() != self.vars || a.order() != self.order {
            return Err(DeformError::Mismatch(
                "element does not belong to this algebra".into(),
            ));
        }
        Ok(())
    }

    pub fn star(&self, a: &HPoly, b: &HPoly) -> Result<HPoly, DeformError> {
        self.check_member(a)?;
        self.check_member(b)?;
        match &self.pres {
            Presentation::Moyal { pairs } => Ok(self.star_moyal(pairs, a, b)),
            _ => self.star_rewrite(a, b),
        }
    }

    pub fn commutator(&self, a: &HPoly, b: &HPoly) -> Result<HPoly, DeformError> {
        Ok(self.star(a, b)?.sub(&self.star(b, a)?))
    }

    pub fn star_pow(&self, a: &HPoly, k: u32) -> Result<HPoly, DeformError> {
        let mut r = HPoly::one(&self.vars, self.order);
        for _ in 0..k {
            r = self.star(&r, a)?;
        }
        Ok(r)
    }

    fn star_moyal(&self, pairs: &[(usize, usize)], a: &HPoly, b: &HPoly) -> HPoly {
        let n = self.order;
        let mut out = HPoly::zero(&self.vars, n);
        // multi-indices m over pairs with |m| <= n
        let midx = multi_indices(pairs.len(), n as u32);
        for p in 0..=n {
            let ap = a.coeff(p);
            if ap.is_zero() {
                continue;
            }
            for q in 0..=n - p {
                let bq = b.coeff(q);
                if bq.is_zero() {
                    continue;
                }
                for m in &midx {
                    let total: u32 = m.iter().sum();
                    if p + q + total as usize > n {
                        continue;
                    }
                    let mut left = ap.clone();
                    let mut right = bq.clone();
                    let mut fact = Rat::one();
                    for (pi, &(x, y)) in pairs.iter().enumerate() {
                        for t in 0..m[pi] {
                            left = left.partial(y);
                            right = right.partial(x);
                            fact = fact * rat((t + 1) as i64, 1);
                        }
                        if left.is_zero() || right.is_zero() {
                            break;
                        }
                    }
                    if left.is_zero() || right.is_zero() {
                        continue;
                    }
                    let term = left.mul(&right).scale(&(Rat::one() / fact));
                    let mut add = HPoly::zero(&self.vars, n);
                    let k = p + q + total as usize;
                    let mut coeffs = vec![Poly::zero(&self.vars); n + 1];
                    coeffs[k] = term;
                    add = add.add(&HPoly::new(&self.vars, n, coeffs));
                    out = out.add(&add);
                }
            }
        }
        out
    }

    fn star_rewrite(&self, a: &HPoly, b: &HPoly) -> Result<HPoly, DeformError> {
        let n = self.order;
        let mut out = HPoly::zero(&self.vars, n);
        for p in 0..=n {
            let ap = a.coeff(p);
            for (ea, ca) in ap.terms() {
                let wa = word_of(ea);
                for q in 0..=n - p {
                    let bq = b.coeff(q);
                    for (eb, cb) in bq.terms() {
                        let mut w = wa.clone();
                        w.extend(word_of(eb));
                        let red = self.reduce_word(&w)?;
                        out = out.add(&red.scale(&(ca.clone() * cb.clone())).shift(p + q));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form of a noncommutative word of generator indices, as an
    /// element of the algebra. Rewriting terminates because the hbar^0
    /// part of every rule swaps a descending adjacent pair (strictly
    /// fewer inversions) and higher hbar parts are bounded by the order.
    pub fn reduce_word(&self, word: &[usize]) -> Result<HPoly, DeformError> {
        if matches!(self.pres, Presentation::Moyal { .. }) {
            // Moyal star of single generators is handled by the closed
            // formula; words only arise for rewriting presentations.
            let mut acc = HPoly::one(&self.vars, self.order);
            for &i in word {
                acc = self.star(&acc, &self.gen_lift(i))?;
            }
            return Ok(acc);
        }
        let n = self.order;
        let mut out = HPoly::zero(&self.vars, n);
        let mut agenda: BTreeMap<(Vec<usize>, usize), Rat> = BTreeMap::new();
        agenda.insert((word.to_vec(), 0), Rat::one());
        while let Some(((w, hp), coef)) = agenda.pop_first() {
            if coef.is_zero() {
                continue;
            }
            match (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
                None => {
                    let mut e = vec![0u32; self.vars.len()];
                    for &i in &w {
                        e[i] += 1;
                    }
                    let mut coeffs = vec![Poly::zero(&self.vars); n + 1];
                    coeffs[hp] = Poly::monomial(&self.vars, e, coef);
                    out = out.add(&HPoly::new(&self.vars, n, coeffs));
                }
                Some(k) => {
                    let rule = self
                        .rules
                        .get(&(w[k], w[k + 1]))
                        .expect("rule exists for every descending pair");
                    for p in 0..=n - hp {
                        let rp = rule.coeff(p);
                        for (e, c) in rp.terms() {
                            let mut nw = w[..k].to_vec();
                            nw.extend(word_of(e));
                            nw.extend(&w[k + 2..]);
                            let key = (nw, hp + p);
                            let entry = agenda.entry(key).or_insert_with(Rat::zero);
                            *entry = entry.clone() + coef.clone() * c.clone();
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Word of generator indices for a commutative monomial, ascending.
fn word_of(exps: &[u32]) -> Vec<usize> {
    let mut w = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            w.push(i);
        }
    }
    w
}

/// All vectors of the given length with entries summing to at most `max`.
fn multi_indices(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for v in &out {
            let used: u32 = v.iter().sum();
            for d in 0..=max - used {
                let mut nv = v.clone();
                nv.push(d);
                next.push(nv);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn hconst(alg: &DeformAlgebra, k: usize, p: Poly) -> HPoly {
        let mut coeffs = vec![Poly::zero(alg.vars()); alg.order() + 1];
        coeffs[k] = p;
        HPoly::new(alg.vars(), alg.order(), coeffs)
    }

    #[test]
    fn moyal_y_star_x() {
        let alg = DeformAlgebra::moyal(vars(&["x", "y"]), vec![(0, 1)], 2).unwrap();
        let vs = alg.vars().to_vec();
        let x = alg.gen_lift(0);
        let y = alg.gen_lift(1);
        let xp = Poly::var(&vs, "x").unwrap();
        let yp = Poly::var(&vs, "y").unwrap();
        let prod = alg.star(&y, &x).unwrap();
        assert_eq!(prod.coeff(0), xp.mul(&yp));
        assert_eq!(prod.coeff(1), Poly::one(&vs));
        assert!(prod.coeff(2).is_zero());
        // x * y has no correction: d/dy of x vanishes
        let prod2 = alg.star(&x, &y).unwrap();
        assert_eq!(prod2.coeff(0), xp.mul(&yp));
        assert!(prod2.coeff(1).is_zero());
    }

    #[test]
    fn moyal_y2_star_x2() {
        // brute-force oracle: y^2 * x^2 = x^2 y^2 + 4 hbar xy + 2 hbar^2
        let alg = DeformAlgebra::moyal(vars(&["x", "y"]), vec![(0, 1)], 2).unwrap();
        let vs = alg.vars().to_vec();
        let xp = Poly::var(&vs, "x").unwrap();
        let yp = Poly::var(&vs, "y").unwrap();
        let y2 = HPoly::from_poly(yp.pow(2), 2);
        let x2 = HPoly::from_poly(xp.pow(2), 2);
        let prod = alg.star(&y2, &x2).unwrap();
        assert_eq!(prod.coeff(0), xp.pow(2).mul(&yp.pow(2)));
        assert_eq!(prod.coeff(1), xp.mul(&yp).scale(&rat(4, 1)));
        assert_eq!(prod.coeff(2), Poly::constant(&vs, rat(2, 1)));
    }

    #[test]
    fn quantum_y_star_x() {
        // q = 1 + hbar at N=2: y * x = (1 - hbar + hbar^2) xy
        let q = HSeries::from_rats(2, vec![rat(1, 1), rat(1, 1)]);
        let alg = DeformAlgebra::quantum_poly(vars(&["x", "y"]), vec![((0, 1), q)], 2).unwrap();
        let vs = alg.vars().to_vec();
        let xp = Poly::var(&vs, "x").unwrap();
        let yp = Poly::var(&vs, "y").unwrap();
        let xy = xp.mul(&yp);
        let prod = alg.star(&alg.gen_lift(1), &alg.gen_lift(0)).unwrap();
        assert_eq!(prod.coeff(0), xy);
        assert_eq!(prod.coeff(1), xy.neg());
        assert_eq!(prod.coeff(2), xy);
        // and [x, y] = hbar * xy at N=1
        let alg1 = DeformAlgebra::quantum_poly(
            vars(&["x", "y"]),
            vec![((0, 1), HSeries::from_rats(1, vec![rat(1, 1), rat(1, 1)]))],
            1,
        )
        .unwrap();
        let com = alg1
            .commutator(&alg1.gen_lift(0), &alg1.gen_lift(1))
            .unwrap();
        assert!(com.coeff(0).is_zero());
        let xy1 = Poly::var(alg1.vars(), "x")
            .unwrap()
            .mul(&Poly::var(alg1.vars(), "y").unwrap());
        assert_eq!(com.coeff(1), xy1);
    }

    #[test]
    fn lie_h_star_e() {
        // [h, e] = 2e with declared order e < h: h * e = eh + 2 hbar e
        let vs = vars(&["e", "h"]);
        let minus2e = Poly::var(&vs, "e").unwrap().scale(&rat(-2, 1));
        let alg = DeformAlgebra::lie_enveloping(vs.clone(), vec![((0, 1), minus2e)], 2).unwrap();
        let e = alg.gen_lift(0);
        let h = alg.gen_lift(1);
        let prod = alg.star(&h, &e).unwrap();
        let ep = Poly::var(&vs, "e").unwrap();
        let hp = Poly::var(&vs, "h").unwrap();
        assert_eq!(prod.coeff(0), ep.mul(&hp));
        assert_eq!(prod.coeff(1), ep.scale(&rat(2, 1)));
    }

    #[test]
    fn lie_rejects_non_jacobi() {
        let vs = vars(&["x", "y", "z"]);
        let x = Poly::var(&vs, "x").unwrap();
        // [x,y] = z, [y,z] = x, [x,z] = x violates Jacobi
        let z = Poly::var(&vs, "z").unwrap();
        let r = DeformAlgebra::lie_enveloping(
            vs.clone(),
            vec![((0, 1), z), ((1, 2), x.clone()), ((0, 2), x)],
            2,
        );
        assert!(matches!(r, Err(DeformError::BadStructure(_))));
    }

    #[test]
    fn commutator_self_zero_and_flatness() {
        let q = HSeries::exp_lambda(rat(1, 1), 3);
        let alg = DeformAlgebra::quantum_poly(vars(&["x", "y"]), vec![((0, 1), q)], 3).unwrap();
        let x = alg.gen_lift(0);
        assert!(alg.commutator(&x, &x).unwrap().is_zero());
        // flatness: hbar^0 part of a star product is the commutative product
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let a = HPoly::random(alg.vars(), 3, &mut rng, 3, false);
            let b = HPoly::random(alg.vars(), 3, &mut rng, 3, false);
            let prod = alg.star(&a, &b).unwrap();
            assert_eq!(prod.coeff(0), a.coeff(0).mul(&b.coeff(0)));
        }
    }

    #[test]
    fn associativity_random() {
        let q = HSeries::exp_lambda(rat(1, 1), 2);
        let algs = vec![
            DeformAlgebra::moyal(vars(&["x", "y"]), vec![(0, 1)], 2).unwrap(),
            DeformAlgebra::quantum_poly(vars(&["x", "y"]), vec![((0, 1), q)], 2).unwrap(),
            DeformAlgebra::lie_enveloping(
                vars(&["e", "h"]),
                vec![((0, 1), Poly::var(&vars(&["e", "h"]), "e").unwrap().scale(&rat(-2, 1)))],
                2,
            )
            .unwrap(),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for alg in &algs {
            for _ in 0..8 {
                let a = HPoly::random(alg.vars(), 2, &mut rng, 2, false);
                let b = HPoly::random(alg.vars(), 2, &mut rng, 2, false);
                let c = HPoly::random(alg.vars(), 2, &mut rng, 2, false);
                let lhs = alg.star(&alg.star(&a, &b).unwrap(), &c).unwrap();
                let rhs = alg.star(&a, &alg.star(&b, &c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn confluence_words() {
        // normal form is independent of how the word is split into stars
        let q = HSeries::exp_lambda(rat(1, 1), 3);
        let alg = DeformAlgebra::quantum_poly(
            vars(&["x", "y", "z"]),
            vec![
                ((0, 1), q.clone()),
                ((0, 2), q.clone()),
                ((1, 2), q.inverse().unwrap()),
            ],
            3,
        )
        .unwrap();
        use rand::seq::SliceRandom;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let mut word: Vec<usize> = (0..6).map(|_| rand::Rng::gen_range(&mut rng, 0..3)).collect();
            let direct = alg.reduce_word(&word).unwrap();
            // reduce via a random split into two star factors
            word.shuffle(&mut rng);
            let (l, r) = word.split_at(3);
            let lred = alg.reduce_word(l).unwrap();
            let rred = alg.reduce_word(r).unwrap();
            let via_split = alg.star(&lred, &rred).unwrap();
            let direct2 = alg.reduce_word(&word).unwrap();
            assert_eq!(via_split, direct2);
            let _ = direct;
        }
    }

    #[test]
    fn mismatched_algebra_rejected() {
        let a1 = DeformAlgebra::moyal(vars(&["x", "y"]), vec![(0, 1)], 2).unwrap();
        let a2 = DeformAlgebra::moyal(vars(&["x", "y"]), vec![(0, 1)], 3).unwrap();
        let r = a1.star(&a2.gen_lift(0), &a1.gen_lift(1));
        assert!(matches!(r, Err(DeformError::Mismatch(_))));
    }

    #[test]
    fn hconst_helper_levels() {
        let alg = DeformAlgebra::moyal(vars(&["x", "y"]), vec![(0, 1)], 2).unwrap();
        let one_at_2 = hconst(&alg, 2, Poly::one(alg.vars()));
        assert_eq!(one_at_2.valuation(), Some(2));
    }
}
