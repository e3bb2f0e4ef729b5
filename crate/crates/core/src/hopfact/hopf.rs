//! Hopf algebras as structure tensors over an exact field, with full
//! axiom verification and the two corpus constructors (Sweedler's
//! four-dimensional algebra and group algebras from Cayley tables).

use super::HopfError;
use crate::Rat;
use num_traits::{One, Zero};

/// A finite-dimensional Hopf algebra given by its structure tensors in
/// a fixed basis. `mul[i][j]` is the coordinate vector of h_i h_j;
/// `comul[k][i][j]` is the (h_i ⊗ h_j)-coordinate of Δh_k; `antipode[k]`
/// is the coordinate vector of S(h_k).
#[derive(Debug, Clone, PartialEq)]
pub struct HopfAlgebra {
    labels: Vec<String>,
    unit: Vec<Rat>,
    mul: Vec<Vec<Vec<Rat>>>,
    comul: Vec<Vec<Vec<Rat>>>,
    counit: Vec<Rat>,
    antipode: Vec<Vec<Rat>>,
}

impl HopfAlgebra {
    pub fn new(
        labels: Vec<String>,
        unit: Vec<Rat>,
        mul: Vec<Vec<Vec<Rat>>>,
        comul: Vec<Vec<Vec<Rat>>>,
        counit: Vec<Rat>,
        antipode: Vec<Vec<Rat>>,
    ) -> Result<Self, HopfError> {
        let n = labels.len();
        let square = |t: &Vec<Vec<Rat>>| t.len() == n && t.iter().all(|r| r.len() == n);
        let ok = unit.len() == n
            && counit.len() == n
            && mul.len() == n
            && mul.iter().all(square)
            && comul.len() == n
            && comul.iter().all(square)
            && square(&antipode);
        if !ok {
            return Err(HopfError::Dimension(
                "structure tensors do not match the basis size".into(),
            ));
        }
        Ok(HopfAlgebra {
            labels,
            unit,
            mul,
            comul,
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn counit_tensor(&self) -> &[Rat] {
        &self.counit
    }

    pub fn comul_tensor(&self) -> &[Vec<Vec<Rat>>] {
        &self.comul
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rat> {
        let mut e = vec![Rat::zero(); self.dim()];
        e[i] = Rat::one();
        e
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for k in 0..n {
                    if !self.mul[i][j][k].is_zero() {
                        out[k] = out[k].clone() + c.clone() * self.mul[i][j][k].clone();
                    }
                }
            }
        }
        out
    }

    /// Δx as an n×n coefficient matrix over h_i ⊗ h_j.
    pub fn comul_vec(&self, x: &[Rat]) -> Vec<Vec<Rat>> {
        let n = self.dim();
        let mut out = vec![vec![Rat::zero(); n]; n];
        for k in 0..n {
            if x[k].is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    if !self.comul[k][i][j].is_zero() {
                        out[i][j] =
                            out[i][j].clone() + x[k].clone() * self.comul[k][i][j].clone();
                    }
                }
            }
        }
        out
    }

    pub fn counit_vec(&self, x: &[Rat]) -> Rat {
        super::dot(&self.counit, x)
    }

    pub fn antipode_vec(&self, x: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for k in 0..n {
            if x[k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[j] = out[j].clone() + x[k].clone() * self.antipode[k][j].clone();
            }
        }
        out
    }

    /// Matrix of left multiplication by x: (Lx)_{k j} with v ↦ x·v.
    pub fn left_mult_matrix(&self, x: &[Rat]) -> Vec<Vec<Rat>> {
        let n = self.dim();
        (0..n).map(|j| self.mul_vec(x, &self.basis_vec(j))).collect()
        // row j is the image of h_j; callers treat this as column-major
    }

    pub fn right_mult_matrix(&self, x: &[Rat]) -> Vec<Vec<Rat>> {
        let n = self.dim();
        (0..n).map(|j| self.mul_vec(&self.basis_vec(j), x)).collect()
    }

    /// Human-readable form of a coordinate vector, e.g. "a - ga".
    pub fn format_elem(&self, x: &[Rat]) -> String {
        use num_traits::Signed;
        let mut out = String::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{}*", mag));
            }
            out.push_str(&self.labels[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Verify every Hopf algebra axiom by tensor contraction; an empty
/// failure list means all axioms hold.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn hopf_verify(h: &HopfAlgebra) -> AxiomReport {
    let n = h.dim();
    let mut rep = AxiomReport::default();
    let e = |i: usize| h.basis_vec(i);

    // associativity and unitality
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = h.mul_vec(&h.mul_vec(&e(i), &e(j)), &e(k));
                let rhs = h.mul_vec(&e(i), &h.mul_vec(&e(j), &e(k)));
                if lhs != rhs {
                    rep.failures
                        .push(format!("associativity fails on ({}, {}, {})", i, j, k));
                }
            }
        }
        if h.mul_vec(&h.unit, &e(i)) != e(i) || h.mul_vec(&e(i), &h.unit) != e(i) {
            rep.failures.push(format!("unit axiom fails on {}", i));
        }
    }

    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ on basis elements
    for k in 0..n {
        let d = h.comul_vec(&e(k));
        let mut lhs = vec![vec![vec![Rat::zero(); n]; n]; n];
        let mut rhs = vec![vec![vec![Rat::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                if d[i][j].is_zero() {
                    continue;
                }
                let di = h.comul_vec(&e(i));
                for (a, row) in di.iter().enumerate() {
                    for (b, c) in row.iter().enumerate() {
                        if !c.is_zero() {
                            lhs[a][b][j] =
                                lhs[a][b][j].clone() + d[i][j].clone() * c.clone();
                        }
                    }
                }
                let dj = h.comul_vec(&e(j));
                for (a, row) in dj.iter().enumerate() {
                    for (b, c) in row.iter().enumerate() {
                        if !c.is_zero() {
                            rhs[i][a][b] =
                                rhs[i][a][b].clone() + d[i][j].clone() * c.clone();
                        }
                    }
                }
            }
        }
        if lhs != rhs {
            rep.failures
                .push(format!("coassociativity fails on basis element {}", k));
        }
        // counit axiom: (ε⊗id)Δ = id = (id⊗ε)Δ
        let mut left = vec![Rat::zero(); n];
        let mut right = vec![Rat::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if d[i][j].is_zero() {
                    continue;
                }
                left[j] = left[j].clone() + h.counit[i].clone() * d[i][j].clone();
                right[i] = right[i].clone() + h.counit[j].clone() * d[i][j].clone();
            }
        }
        if left != e(k) || right != e(k) {
            rep.failures
                .push(format!("counit axiom fails on basis element {}", k));
        }
    }

    // Δ and ε are algebra maps
    for i in 0..n {
        for j in 0..n {
            let prod = h.mul_vec(&e(i), &e(j));
            let d_prod = h.comul_vec(&prod);
            let di = h.comul_vec(&e(i));
            let dj = h.comul_vec(&e(j));
            // Δh_i · Δh_j in H⊗H
            let mut expect = vec![vec![Rat::zero(); n]; n];
            for (a, ra) in di.iter().enumerate() {
                for (b, ca) in ra.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (c, rc) in dj.iter().enumerate() {
                        for (d2, cb) in rc.iter().enumerate() {
                            if cb.is_zero() {
                                continue;
                            }
                            let lf = h.mul_vec(&e(a), &e(c));
                            let rf = h.mul_vec(&e(b), &e(d2));
                            let coef = ca.clone() * cb.clone();
                            for (p, lp) in lf.iter().enumerate() {
                                if lp.is_zero() {
                                    continue;
                                }
                                for (q, rq) in rf.iter().enumerate() {
                                    if !rq.is_zero() {
                                        expect[p][q] = expect[p][q].clone()
                                            + coef.clone() * lp.clone() * rq.clone();
                                    }
                                }
                            }
                        }
                    }
                }
            }
            if d_prod != expect {
                rep.failures
                    .push(format!("Δ is not multiplicative on ({}, {})", i, j));
            }
            if h.counit_vec(&prod) != h.counit[i].clone() * h.counit[j].clone() {
                rep.failures
                    .push(format!("ε is not multiplicative on ({}, {})", i, j));
            }
        }
    }
    let unit_comul = h.comul_vec(&h.unit);
    let mut unit_tensor = vec![vec![Rat::zero(); n]; n];
    for (i, ci) in h.unit.iter().enumerate() {
        for (j, cj) in h.unit.iter().enumerate() {
            unit_tensor[i][j] = ci.clone() * cj.clone();
        }
    }
    if unit_comul != unit_tensor {
        rep.failures.push("Δ(1) != 1⊗1".into());
    }
    if !h.counit_vec(&h.unit).is_one() {
        rep.failures.push("ε(1) != 1".into());
    }

    // antipode axiom: m(S⊗id)Δx = ε(x)1 = m(id⊗S)Δx
    for k in 0..n {
        let d = h.comul_vec(&h.basis_vec(k));
        let mut left = vec![Rat::zero(); n];
        let mut right = vec![Rat::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if d[i][j].is_zero() {
                    continue;
                }
                let l = h.mul_vec(&h.antipode_vec(&h.basis_vec(i)), &h.basis_vec(j));
                let r = h.mul_vec(&h.basis_vec(i), &h.antipode_vec(&h.basis_vec(j)));
                for p in 0..n {
                    left[p] = left[p].clone() + d[i][j].clone() * l[p].clone();
                    right[p] = right[p].clone() + d[i][j].clone() * r[p].clone();
                }
            }
        }
        let want: Vec<Rat> = h.unit.iter().map(|u| u.clone() * h.counit[k].clone()).collect();
        if left != want || right != want {
            rep.failures
                .push(format!("antipode axiom fails on basis element {}", k));
        }
    }
    rep
}

/// Sweedler's four-dimensional Hopf algebra: basis {1, g, a, ga} with
/// g² = 1, a² = 0, ag = -ga, Δg = g⊗g, Δa = a⊗1 + g⊗a, S(a) = -ga.
pub fn sweedler() -> HopfAlgebra {
    let n = 4;
    let z = Rat::zero;
    let o = Rat::one;
    let e = |i: usize| {
        let mut v = vec![z(); n];
        v[i] = o();
        v
    };
    let neg = |v: Vec<Rat>| v.into_iter().map(|c| -c).collect::<Vec<_>>();
    let zero = vec![z(); n];
    let mul = vec![
        vec![e(0), e(1), e(2), e(3)],
        vec![e(1), e(0), e(3), e(2)],
        vec![e(2), neg(e(3)), zero.clone(), zero.clone()],
        vec![e(3), neg(e(2)), zero.clone(), zero],
    ];
    let mut comul = vec![vec![vec![z(); n]; n]; n];
    comul[0][0][0] = o();
    comul[1][1][1] = o();
    comul[2][2][0] = o(); // a⊗1
    comul[2][1][2] = o(); // g⊗a
    comul[3][3][1] = o(); // ga⊗g
    comul[3][0][3] = o(); // 1⊗ga
    let counit = vec![o(), o(), z(), z()];
    let antipode = vec![e(0), e(1), neg(e(3)), e(2)];
    HopfAlgebra::new(
        vec!["1".into(), "g".into(), "a".into(), "ga".into()],
        e(0),
        mul,
        comul,
        counit,
        antipode,
    )
    .expect("Sweedler tensors are well formed")
}

/// Group algebra of the group given by a Cayley table
/// (cayley[i][j] = index of g_i g_j); the table is checked to be a
/// group before building the Hopf structure.
pub fn group_algebra(cayley: &[Vec<usize>]) -> Result<HopfAlgebra, HopfError> {
    let n = cayley.len();
    if n == 0 || cayley.iter().any(|r| r.len() != n) {
        return Err(HopfError::NotAGroup("table is not square".into()));
    }
    if cayley.iter().flatten().any(|&v| v >= n) {
        return Err(HopfError::NotAGroup("entry out of range".into()));
    }
    let id = (0..n)
        .find(|&e| (0..n).all(|j| cayley[e][j] == j && cayley[j][e] == j))
        .ok_or_else(|| HopfError::NotAGroup("no identity element".into()))?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]] {
                    return Err(HopfError::NotAGroup(format!(
                        "associativity fails on ({}, {}, {})",
                        i, j, k
                    )));
                }
            }
        }
    }
    let mut inv = vec![None; n];
    for i in 0..n {
        inv[i] = (0..n).find(|&j| cayley[i][j] == id && cayley[j][i] == id);
        if inv[i].is_none() {
            return Err(HopfError::NotAGroup(format!("element {} has no inverse", i)));
        }
    }
    let z = Rat::zero;
    let o = Rat::one;
    let e = |i: usize| {
        let mut v = vec![z(); n];
        v[i] = o();
        v
    };
    let labels = (0..n)
        .map(|i| if i == id { "1".to_string() } else { format!("g{}", i) })
        .collect();
    let mul = (0..n)
        .map(|i| (0..n).map(|j| e(cayley[i][j])).collect())
        .collect();
    let mut comul = vec![vec![vec![z(); n]; n]; n];
    for (k, t) in comul.iter_mut().enumerate() {
        t[k][k] = o();
    }
    let counit = vec![o(); n];
    let antipode = (0..n).map(|i| e(inv[i].unwrap())).collect();
    HopfAlgebra::new(labels, e(id), mul, comul, counit, antipode)
}
