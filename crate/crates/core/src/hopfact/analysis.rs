//! Structure analysis of finite-dimensional Hopf algebras: Jacobson
//! radical via the trace form, exact grouplike enumeration over the
//! rationals, Hopf-ideal quotients, and the associated graded Hopf
//! algebra of the radical filtration.

use super::{dot, hopf_verify, in_span, perp, rref_basis, HopfAlgebra, HopfError};
use crate::exactalg::{poly_det, Matrix};
use crate::{rat, Poly, Rat, ScalarMatrix};
use num::BigInt;
use num_traits::{One, Signed, Zero};

/// Jacobson radical by the characteristic-zero trace criterion:
/// x ∈ Rad(H) iff Tr(L_{x h}) = 0 for every basis element h. Returns a
/// row-reduced basis.
pub fn radical(h: &HopfAlgebra) -> Vec<Vec<Rat>> {
    let n = h.dim();
    let mut form = vec![vec![Rat::zero(); n]; n];
    for u in 0..n {
        for v in 0..n {
            let prod = h.mul_vec(&h.basis_vec(u), &h.basis_vec(v));
            let l = h.left_mult_matrix(&prod);
            let mut tr = Rat::zero();
            for (j, row) in l.iter().enumerate() {
                tr = tr + row[j].clone();
            }
            form[u][v] = tr;
        }
    }
    let basis = ScalarMatrix::from_rows(form).unwrap().nullspace();
    rref_basis(&basis, n)
}

/// True iff the span of `basis` is a nilpotent two-sided ideal.
pub fn is_nilpotent_ideal(h: &HopfAlgebra, basis: &[Vec<Rat>]) -> bool {
    let n = h.dim();
    let b = rref_basis(basis, n);
    for x in &b {
        for j in 0..n {
            if !in_span(&b, &h.mul_vec(&h.basis_vec(j), x))
                || !in_span(&b, &h.mul_vec(x, &h.basis_vec(j)))
            {
                return false;
            }
        }
    }
    let mut power = b.clone();
    for _ in 0..=n {
        if power.is_empty() {
            return true;
        }
        let mut next = Vec::new();
        for x in &power {
            for y in &b {
                next.push(h.mul_vec(x, y));
            }
        }
        power = rref_basis(&next, n);
    }
    false
}

#[derive(Debug, Clone, PartialEq)]
pub enum GrouplikeOutcome {
    /// All grouplikes with rational coordinates; complete over ℚ.
    Complete(Vec<Vec<Rat>>),
    Inconclusive(String),
}

/// All solutions of Δx = x⊗x, ε(x) = 1 over ℚ. Each coordinate x_i of
/// a grouplike is an eigenvalue of the slice matrix M_i with
/// (M_i)_{jk} = comul[k][i][j] (since Δx = x⊗x forces M_i x = x_i x),
/// so candidates are the rational eigenvalues, enumerated exactly; every
/// candidate tuple is then verified against the quadratic system.
pub fn grouplikes(h: &HopfAlgebra) -> GrouplikeOutcome {
    let n = h.dim();
    let comul = h.comul_tensor();
    let mut candidate_sets: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut rows = Vec::with_capacity(n);
        for j in 0..n {
            let mut row = Vec::with_capacity(n);
            for k in 0..n {
                row.push(comul[k][i][j].clone());
            }
            rows.push(row);
        }
        match rational_eigenvalues(&rows) {
            Some(vals) => candidate_sets.push(vals),
            None => {
                return GrouplikeOutcome::Inconclusive(format!(
                    "could not enumerate rational eigenvalues for coordinate {}",
                    i
                ))
            }
        }
    }
    let combos: usize = candidate_sets.iter().map(|s| s.len().max(1)).product();
    if combos > 100_000 {
        return GrouplikeOutcome::Inconclusive(format!(
            "candidate space too large ({} tuples)",
            combos
        ));
    }
    let mut found = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let x: Vec<Rat> = (0..n)
            .map(|i| candidate_sets[i].get(idx[i]).cloned().unwrap_or_else(Rat::zero))
            .collect();
        if h.counit_vec(&x).is_one() {
            let d = h.comul_vec(&x);
            let square = (0..n).all(|i| {
                (0..n).all(|j| d[i][j] == x[i].clone() * x[j].clone())
            });
            if square {
                found.push(x);
            }
        }
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == n {
                return GrouplikeOutcome::Complete(found);
            }
            idx[pos] += 1;
            if idx[pos] < candidate_sets[pos].len().max(1) {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Rational eigenvalues of a rational matrix, exactly: the rational
/// roots of its characteristic polynomial. None if the integer
/// factorization needed by the rational-root theorem does not complete.
fn rational_eigenvalues(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = rows.len();
    let vars = vec!["t".to_string()];
    let t = Poly::var_idx(&vars, 0);
    let mut grid = Vec::with_capacity(n);
    for (r, row) in rows.iter().enumerate() {
        let mut prow = Vec::with_capacity(n);
        for (c, v) in row.iter().enumerate() {
            let mut p = Poly::constant(&vars, v.clone());
            if r == c {
                p = p.sub(&t);
            }
            prow.push(p);
        }
        grid.push(prow);
    }
    let ch = poly_det(&Matrix::from_rows(grid).unwrap()).ok()?;
    // coefficients of the univariate characteristic polynomial
    let mut coeffs = vec![Rat::zero(); n + 1];
    for (e, c) in ch.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    rational_roots(&coeffs)
}

/// All rational roots of a polynomial with rational coefficients, by
/// the rational-root theorem after clearing denominators.
fn rational_roots(coeffs: &[Rat]) -> Option<Vec<Rat>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    let mut roots = Vec::new();
    if c.is_empty() {
        return Some(roots); // zero polynomial: treat as no finite candidates
    }
    // factor out t^v
    let v = c.iter().position(|x| !x.is_zero()).unwrap();
    if v > 0 {
        roots.push(Rat::zero());
        c.drain(0..v);
    }
    if c.len() == 1 {
        return Some(roots);
    }
    // clear denominators to integer coefficients
    let mut lcm = BigInt::one();
    for x in &c {
        lcm = num::Integer::lcm(&lcm, x.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|x| (x.clone() * rat_big(&lcm)).to_integer()).collect();
    let p_divs = divisors(ints.first().unwrap().abs())?;
    let q_divs = divisors(ints.last().unwrap().abs())?;
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(p.clone() * BigInt::from(sign), q.clone());
                if roots.contains(&cand) {
                    continue;
                }
                let mut val = Rat::zero();
                for x in c.iter().rev() {
                    val = val * cand.clone() + x.clone();
                }
                if val.is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn rat_big(n: &BigInt) -> Rat {
    Rat::new(n.clone(), BigInt::one())
}

/// All positive divisors via trial division; None when a cofactor
/// resists factorization within the bound.
fn divisors(n: BigInt) -> Option<Vec<BigInt>> {
    if n.is_zero() {
        // every integer divides 0; callers pair these with the other
        // coefficient's divisors, so just offer 1
        return Some(vec![BigInt::one()]);
    }
    let mut m = n;
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000);
    while &d * &d <= m && d <= bound {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m = &m / &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        if &m / BigInt::one() > bound.pow(2) {
            return None;
        }
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d0 in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d0 * &pw);
                pw = &pw * &p;
            }
        }
        divs = next;
    }
    Some(divs)
}

/// Quotient by a Hopf ideal: returns the quotient Hopf algebra together
/// with the projection matrix (rows are the images of the original
/// basis vectors in quotient coordinates). The complement basis is the
/// set of non-pivot coordinates of the ideal, in declared order.
pub fn quotient_hopf(
    h: &HopfAlgebra,
    ideal: &[Vec<Rat>],
) -> Result<(HopfAlgebra, Vec<Vec<Rat>>), HopfError> {
    let n = h.dim();
    let ib = rref_basis(ideal, n);
    check_hopf_ideal(h, &ib)?;
    let pivots: Vec<usize> = ib
        .iter()
        .map(|r| r.iter().position(|c| !c.is_zero()).unwrap())
        .collect();
    let comp: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let m = comp.len();
    // projection: reduce modulo the rref rows, read off complement coords
    let project = |v: &[Rat]| -> Vec<Rat> {
        let mut w = v.to_vec();
        for (r, &p) in ib.iter().zip(&pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (wc, rc) in w.iter_mut().zip(r) {
                    *wc = wc.clone() - f.clone() * rc.clone();
                }
            }
        }
        comp.iter().map(|&c| w[c].clone()).collect()
    };
    let rep = |i: usize| h.basis_vec(comp[i]);
    let labels = comp.iter().map(|&c| h.labels()[c].clone()).collect();
    let unit = project(h.unit());
    let mul = (0..m)
        .map(|i| (0..m).map(|j| project(&h.mul_vec(&rep(i), &rep(j)))).collect())
        .collect();
    let mut comul = Vec::with_capacity(m);
    for k in 0..m {
        let d = h.comul_vec(&rep(k));
        let mut out = vec![vec![Rat::zero(); m]; m];
        for (i, row) in d.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let pi = project(&h.basis_vec(i));
                let pj = project(&h.basis_vec(j));
                for (a, pa) in pi.iter().enumerate() {
                    if pa.is_zero() {
                        continue;
                    }
                    for (b, pb) in pj.iter().enumerate() {
                        if !pb.is_zero() {
                            out[a][b] = out[a][b].clone()
                                + c.clone() * pa.clone() * pb.clone();
                        }
                    }
                }
            }
        }
        comul.push(out);
    }
    let counit = (0..m).map(|k| h.counit_vec(&rep(k))).collect();
    let antipode = (0..m)
        .map(|k| project(&h.antipode_vec(&rep(k))))
        .collect();
    let projection = (0..n).map(|i| project(&h.basis_vec(i))).collect();
    let q = HopfAlgebra::new(labels, unit, mul, comul, counit, antipode)?;
    Ok((q, projection))
}

/// Verify that the span of `basis` (assumed rref) is a Hopf ideal:
/// two-sided ideal, coideal (Δ(I) ⊆ I⊗H + H⊗I), ε-null, S-stable.
pub fn check_hopf_ideal(h: &HopfAlgebra, basis: &[Vec<Rat>]) -> Result<(), HopfError> {
    let n = h.dim();
    for x in basis {
        if !h.counit_vec(x).is_zero() {
            return Err(HopfError::NotHopfIdeal(format!(
                "ε({}) != 0",
                h.format_elem(x)
            )));
        }
        if !in_span(basis, &h.antipode_vec(x)) {
            return Err(HopfError::NotHopfIdeal(format!(
                "S({}) escapes the ideal",
                h.format_elem(x)
            )));
        }
        for j in 0..n {
            if !in_span(basis, &h.mul_vec(&h.basis_vec(j), x))
                || !in_span(basis, &h.mul_vec(x, &h.basis_vec(j)))
            {
                return Err(HopfError::NotHopfIdeal(format!(
                    "{} does not generate a two-sided ideal",
                    h.format_elem(x)
                )));
            }
        }
        if !coideal_member(h, basis, x) {
            return Err(HopfError::NotHopfIdeal(format!(
                "Δ({}) escapes I⊗H + H⊗I",
                h.format_elem(x)
            )));
        }
    }
    Ok(())
}

/// Δx ∈ span(J)⊗H + H⊗span(J), decided exactly via the orthogonal
/// complement of the subspace in the n² coordinate space.
pub(super) fn coideal_member(h: &HopfAlgebra, j_basis: &[Vec<Rat>], x: &[Rat]) -> bool {
    let n = h.dim();
    let d = h.comul_vec(x);
    let flat: Vec<Rat> = d.into_iter().flatten().collect();
    let mut w = Vec::new();
    for b in j_basis {
        for k in 0..n {
            // b ⊗ e_k and e_k ⊗ b
            let mut v1 = vec![Rat::zero(); n * n];
            let mut v2 = vec![Rat::zero(); n * n];
            for (i, c) in b.iter().enumerate() {
                v1[i * n + k] = c.clone();
                v2[k * n + i] = c.clone();
            }
            w.push(v1);
            w.push(v2);
        }
    }
    let functionals = perp(&rref_basis(&w, n * n), n * n);
    functionals.iter().all(|f| dot(f, &flat).is_zero())
}

/// Associated graded Hopf algebra of the radical filtration
/// H ⊇ J ⊇ J² ⊇ …, on a flag basis adapted to the filtration. Requires
/// the radical to be a Hopf ideal.
pub fn gr_radical_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let n = h.dim();
    let rad = radical(h);
    check_hopf_ideal(h, &rad)?;
    // powers of the radical
    let mut chain = vec![
        rref_basis(&(0..n).map(|i| h.basis_vec(i)).collect::<Vec<_>>(), n),
        rad.clone(),
    ];
    while !chain.last().unwrap().is_empty() {
        let prev = chain.last().unwrap();
        let mut prods = Vec::new();
        for x in prev {
            for y in &rad {
                prods.push(h.mul_vec(x, y));
            }
        }
        chain.push(rref_basis(&prods, n));
    }
    // flag basis: extend J^{m+1} to J^m, tagging new vectors with grade m
    let top = chain.len() - 1; // chain[top] is empty
    let mut flag: Vec<(usize, Vec<Rat>)> = Vec::new();
    for m in (0..top).rev() {
        let mut current: Vec<Vec<Rat>> = flag
            .iter()
            .filter(|(g, _)| *g > m)
            .map(|(_, v)| v.clone())
            .collect();
        for v in &chain[m] {
            if !in_span(&rref_basis(&current, n), v) {
                current.push(v.clone());
                flag.push((m, v.clone()));
            }
        }
    }
    flag.sort_by_key(|(g, _)| *g);
    let grades: Vec<usize> = flag.iter().map(|(g, _)| *g).collect();
    let basis: Vec<Vec<Rat>> = flag.into_iter().map(|(_, v)| v).collect();
    // change of basis: coords of a vector in the flag basis
    let pinv = invert(&transpose(&basis))
        .ok_or_else(|| HopfError::Dimension("flag basis is not a basis".into()))?;
    let to_flag = |v: &[Rat]| -> Vec<Rat> {
        (0..n).map(|r| dot(&pinv[r], v)).collect()
    };
    let labels = basis
        .iter()
        .enumerate()
        .map(|(k, v)| {
            match v.iter().position(|c| c.is_one()) {
                Some(i)
                    if v.iter().enumerate().all(|(j, c)| j == i || c.is_zero()) =>
                {
                    h.labels()[i].clone()
                }
                _ => format!("b{}", k),
            }
        })
        .collect();
    let keep = |v: Vec<Rat>, grade: usize| -> Vec<Rat> {
        v.into_iter()
            .enumerate()
            .map(|(k, c)| if grades[k] == grade { c } else { Rat::zero() })
            .collect()
    };
    let unit = keep(to_flag(h.unit()), 0);
    let mut mul = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let p = to_flag(&h.mul_vec(&basis[i], &basis[j]));
            row.push(keep(p, grades[i] + grades[j]));
        }
        mul.push(row);
    }
    let mut comul = Vec::with_capacity(n);
    for k in 0..n {
        let d = h.comul_vec(&basis[k]);
        // transform both tensor legs to flag coordinates
        let mut out = vec![vec![Rat::zero(); n]; n];
        for (i, row) in d.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let fi = to_flag(&h.basis_vec(i));
                let fj = to_flag(&h.basis_vec(j));
                for (a, fa) in fi.iter().enumerate() {
                    if fa.is_zero() {
                        continue;
                    }
                    for (b, fb) in fj.iter().enumerate() {
                        if !fb.is_zero() {
                            out[a][b] =
                                out[a][b].clone() + c.clone() * fa.clone() * fb.clone();
                        }
                    }
                }
            }
        }
        for (a, row) in out.iter_mut().enumerate() {
            for (b, c) in row.iter_mut().enumerate() {
                if grades[a] + grades[b] != grades[k] {
                    *c = Rat::zero();
                }
            }
        }
        comul.push(out);
    }
    let counit = (0..n)
        .map(|k| {
            if grades[k] == 0 {
                h.counit_vec(&basis[k])
            } else {
                Rat::zero()
            }
        })
        .collect();
    let antipode = (0..n)
        .map(|k| keep(to_flag(&h.antipode_vec(&basis[k])), grades[k]))
        .collect();
    let gr = HopfAlgebra::new(labels, unit, mul, comul, counit, antipode)?;
    let rep = hopf_verify(&gr);
    if !rep.passed() {
        return Err(HopfError::NotHopfIdeal(format!(
            "associated graded fails verification: {:?}",
            rep.failures
        )));
    }
    Ok(gr)
}

fn transpose(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = rows.len();
    (0..n)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// Matrix inverse over ℚ via Gauss-Jordan on the augmented system.
fn invert(rows: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { rat(1, 1) } else { Rat::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(p, col);
        let pv = aug[col][col].clone();
        for c in 0..2 * n {
            aug[col][c] = aug[col][c].clone() / pv.clone();
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let f = aug[r][col].clone();
            for c in 0..2 * n {
                aug[r][c] = aug[r][c].clone() - f.clone() * aug[col][c].clone();
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::super::{group_algebra, sweedler};
    use super::*;

    fn z2() -> HopfAlgebra {
        group_algebra(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn z3() -> HopfAlgebra {
        group_algebra(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap()
    }

    #[test]
    fn sweedler_radical_is_a_ga() {
        let h = sweedler();
        let r = radical(&h);
        assert_eq!(r.len(), 2);
        assert_eq!(r[0], h.basis_vec(2));
        assert_eq!(r[1], h.basis_vec(3));
        assert!(is_nilpotent_ideal(&h, &r));
        // radical squared is zero
        let mut sq = Vec::new();
        for x in &r {
            for y in &r {
                sq.push(h.mul_vec(x, y));
            }
        }
        assert_eq!(rref_basis(&sq, 4).len(), 0);
    }

    #[test]
    fn group_algebra_radical_zero() {
        assert!(radical(&z2()).is_empty());
        assert!(radical(&z3()).is_empty());
    }

    #[test]
    fn sweedler_grouplikes() {
        let h = sweedler();
        match grouplikes(&h) {
            GrouplikeOutcome::Complete(g) => {
                assert_eq!(g.len(), 2);
                assert!(g.contains(&h.basis_vec(0)));
                assert!(g.contains(&h.basis_vec(1)));
            }
            GrouplikeOutcome::Inconclusive(why) => panic!("inconclusive: {}", why),
        }
    }

    #[test]
    fn group_algebra_grouplikes() {
        for (h, want) in [(z2(), 2), (z3(), 3)] {
            match grouplikes(&h) {
                GrouplikeOutcome::Complete(g) => {
                    assert_eq!(g.len(), want);
                    for i in 0..want {
                        assert!(g.contains(&h.basis_vec(i)));
                    }
                }
                GrouplikeOutcome::Inconclusive(why) => panic!("inconclusive: {}", why),
            }
        }
    }

    #[test]
    fn quotient_by_full_radical_ideal() {
        // span{a, ga} is a Hopf ideal of Sweedler; the quotient is kZ/2
        let h = sweedler();
        let ideal = vec![h.basis_vec(2), h.basis_vec(3)];
        let (q, _) = quotient_hopf(&h, &ideal).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(hopf_verify(&q).passed());
        match grouplikes(&q) {
            GrouplikeOutcome::Complete(g) => assert_eq!(g.len(), 2),
            _ => panic!("inconclusive"),
        }
    }

    #[test]
    fn span_a_minus_ga_is_not_a_hopf_ideal() {
        let h = sweedler();
        let mut v = vec![Rat::zero(); 4];
        v[2] = rat(1, 1);
        v[3] = rat(-1, 1);
        assert!(check_hopf_ideal(&h, &[v]).is_err());
    }

    #[test]
    fn gr_of_sweedler_is_sweedler() {
        let h = sweedler();
        let gr = gr_radical_hopf(&h).unwrap();
        // the flag basis is the canonical basis, so the tensors agree
        assert_eq!(gr, h);
    }

    #[test]
    fn gr_of_semisimple_is_identity() {
        let h = z3();
        let gr = gr_radical_hopf(&h).unwrap();
        assert_eq!(gr, h);
    }

    #[test]
    fn rational_roots_small() {
        // (t-1)(t+2)(2t-3) = 2t^3 + ... ; roots 1, -2, 3/2
        let c = vec![rat(6, 1), rat(-7, 1), rat(-1, 1), rat(2, 1)];
        let mut roots = rational_roots(&c).unwrap();
        roots.sort();
        assert_eq!(roots, vec![rat(-2, 1), rat(1, 1), rat(3, 2)]);
    }
}
