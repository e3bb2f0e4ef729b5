//! Hopf actions on deformation algebras: the module-algebra extension
//! of generator images through the coproduct, verification, invariants,
//! annihilators, inner-faithfulness, and the group-factorization
//! verdict.

use super::analysis::{coideal_member, grouplikes, quotient_hopf, GrouplikeOutcome};
use super::{dot, perp, rref_basis, HopfAlgebra, HopfError};
use crate::defquant::{DeformAlgebra, HPoly};
use crate::poisson::monomials_up_to;
use crate::{Poly, Rat, ScalarMatrix};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// An H-module algebra structure on a deformation algebra, determined
/// by the images of the generators under each Hopf basis element and
/// extended through Δ along normal-form monomials.
#[derive(Debug, Clone)]
pub struct HopfAction {
    hopf: HopfAlgebra,
    alg: DeformAlgebra,
    gen_action: Vec<Vec<HPoly>>, // [hopf basis][generator]
}

impl HopfAction {
    pub fn new(
        hopf: HopfAlgebra,
        alg: DeformAlgebra,
        gen_action: Vec<Vec<HPoly>>,
    ) -> Result<Self, HopfError> {
        let d = hopf.dim();
        let nv = alg.vars().len();
        if gen_action.len() != d || gen_action.iter().any(|r| r.len() != nv) {
            return Err(HopfError::Dimension(
                "one generator image per (basis element, generator) required".into(),
            ));
        }
        for row in &gen_action {
            for p in row {
                if p.vars() != alg.vars() || p.order() != alg.order() {
                    return Err(HopfError::BadAction(
                        "generator image lies outside the algebra".into(),
                    ));
                }
            }
        }
        // the unit of H must act as the identity on generators
        for v in 0..nv {
            let mut img = HPoly::zero(alg.vars(), alg.order());
            for (b, c) in hopf.unit().iter().enumerate() {
                if !c.is_zero() {
                    img = img.add(&gen_action[b][v].scale(c));
                }
            }
            if img != alg.gen_lift(v) {
                return Err(HopfError::BadAction(format!(
                    "unit does not act as identity on {}",
                    alg.vars()[v]
                )));
            }
        }
        Ok(HopfAction {
            hopf,
            alg,
            gen_action,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn alg(&self) -> &DeformAlgebra {
        &self.alg
    }

    pub fn gen_action(&self) -> &[Vec<HPoly>] {
        &self.gen_action
    }

    /// Action of every basis element on a word of generators, by the
    /// module-algebra rule h·(uv) = Σ (h₍₁₎·u)(h₍₂₎·v) applied from the
    /// right end of the word.
    pub fn act_word(&self, word: &[usize]) -> Result<Vec<HPoly>, HopfError> {
        let d = self.hopf.dim();
        let comul = self.hopf.comul_tensor();
        let eps = self.hopf.counit_tensor();
        // action on the empty word: h·1 = ε(h)·1
        let mut cur: Vec<HPoly> = (0..d)
            .map(|b| HPoly::one(self.alg.vars(), self.alg.order()).scale(&eps[b]))
            .collect();
        for &v in word.iter().rev() {
            let mut next = vec![HPoly::zero(self.alg.vars(), self.alg.order()); d];
            for b in 0..d {
                for i in 0..d {
                    for j in 0..d {
                        let c = &comul[b][i][j];
                        if c.is_zero() {
                            continue;
                        }
                        let term = self
                            .alg
                            .star(&self.gen_action[i][v], &cur[j])
                            .map_err(HopfError::Deform)?;
                        next[b] = next[b].add(&term.scale(c));
                    }
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    /// h·f for h in Hopf coordinates and f in the algebra's normal form.
    pub fn act(&self, h: &[Rat], f: &HPoly) -> Result<HPoly, HopfError> {
        if h.len() != self.hopf.dim() {
            return Err(HopfError::Dimension("element coordinate length".into()));
        }
        let n = self.alg.order();
        let mut out = HPoly::zero(self.alg.vars(), n);
        let mut cache: BTreeMap<Vec<usize>, Vec<HPoly>> = BTreeMap::new();
        for p in 0..=n {
            for (e, c) in f.coeff(p).terms() {
                let word = word_of(e);
                if !cache.contains_key(&word) {
                    let acts = self.act_word(&word)?;
                    cache.insert(word.clone(), acts);
                }
                let acts = &cache[&word];
                for (b, hb) in h.iter().enumerate() {
                    if !hb.is_zero() {
                        out = out.add(&acts[b].scale(&(hb.clone() * c.clone())).shift(p));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Basis-element action on an A₀ element, reduced mod hbar.
    pub fn act_mod_h(&self, h: &[Rat], f: &Poly) -> Result<Poly, HopfError> {
        let lift = HPoly::from_poly(
            f.with_vars(self.alg.vars())
                .map_err(|e| HopfError::BadAction(e.to_string()))?,
            self.alg.order(),
        );
        Ok(self.act(h, &lift)?.mod_h())
    }
}

fn word_of(exps: &[u32]) -> Vec<usize> {
    let mut w = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            w.push(i);
        }
    }
    w
}

/// Findings of the module-algebra verification; empty means pass.
#[derive(Debug, Clone, Default)]
pub struct ActionReport {
    pub failures: Vec<String>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify that the action is a well-defined H-module algebra structure:
/// (i) compatibility with every rewriting relation, (ii) the coproduct
/// rule on random products, (iii) compatibility with the Hopf
/// multiplication, plus h·1 = ε(h)1 and unit identity.
pub fn module_algebra_check<R: rand::Rng>(
    action: &HopfAction,
    trials: usize,
    max_deg: u32,
    rng: &mut R,
) -> ActionReport {
    let mut rep = ActionReport::default();
    let h = action.hopf();
    let alg = action.alg();
    let d = h.dim();
    let comul = h.comul_tensor();

    let coproduct_rule = |b: usize, f: &HPoly, g: &HPoly| -> Result<HPoly, HopfError> {
        let mut out = HPoly::zero(alg.vars(), alg.order());
        for i in 0..d {
            for j in 0..d {
                let c = &comul[b][i][j];
                if c.is_zero() {
                    continue;
                }
                let fi = action.act(&h.basis_vec(i), f)?;
                let gj = action.act(&h.basis_vec(j), g)?;
                out = out.add(&alg.star(&fi, &gj)?.scale(c));
            }
        }
        Ok(out)
    };

    // (i) every defining relation: acting on the two sides of
    // x_j ⋆ x_i = normal form must agree
    for (&(j, i), _) in alg.rules() {
        let u = alg.gen_lift(j);
        let v = alg.gen_lift(i);
        let prod = alg.star(&u, &v).unwrap();
        for b in 0..d {
            let via_coproduct = match coproduct_rule(b, &u, &v) {
                Ok(p) => p,
                Err(e) => {
                    rep.failures.push(format!("relation check error: {}", e));
                    continue;
                }
            };
            let via_normal_form = action.act(&h.basis_vec(b), &prod).unwrap();
            if via_coproduct != via_normal_form {
                rep.failures.push(format!(
                    "relation {}*{}: {} acts inconsistently ({} vs {})",
                    alg.vars()[j],
                    alg.vars()[i],
                    h.labels()[b],
                    via_coproduct,
                    via_normal_form
                ));
            }
        }
    }

    // h·1 = ε(h)·1 and unit action
    let one = HPoly::one(alg.vars(), alg.order());
    for b in 0..d {
        let got = action.act(&h.basis_vec(b), &one).unwrap();
        if got != one.scale(&h.counit_tensor()[b]) {
            rep.failures
                .push(format!("{}·1 != ε({})·1", h.labels()[b], h.labels()[b]));
        }
    }

    // (ii) and (iii) on random inputs
    for _ in 0..trials {
        let f = HPoly::random(alg.vars(), alg.order(), rng, max_deg, false);
        let g = HPoly::random(alg.vars(), alg.order(), rng, max_deg, false);
        let prod = alg.star(&f, &g).unwrap();
        for b in 0..d {
            let lhs = action.act(&h.basis_vec(b), &prod).unwrap();
            let rhs = coproduct_rule(b, &f, &g).unwrap();
            if lhs != rhs {
                rep.failures.push(format!(
                    "module-algebra rule fails for {} on f={}, g={}",
                    h.labels()[b],
                    f,
                    g
                ));
            }
        }
        for u in 0..d {
            for v in 0..d {
                let uv = h.mul_vec(&h.basis_vec(u), &h.basis_vec(v));
                let lhs = action.act(&uv, &f).unwrap();
                let inner = action.act(&h.basis_vec(v), &f).unwrap();
                let rhs = action.act(&h.basis_vec(u), &inner).unwrap();
                if lhs != rhs {
                    rep.failures.push(format!(
                        "({}·{})·f != {}·({}·f) for f={}",
                        h.labels()[u],
                        h.labels()[v],
                        h.labels()[u],
                        h.labels()[v],
                        f
                    ));
                }
            }
        }
    }
    rep
}

/// Bases of the degree-≤d invariants, both mod hbar (on A₀) and at
/// full truncation order under the canonical lift (on A).
#[derive(Debug, Clone)]
pub struct InvariantBases {
    pub mod_h: Vec<Poly>,
    pub full_order: Vec<Poly>,
}

pub fn invariants(action: &HopfAction, d: u32) -> InvariantBases {
    let alg = action.alg();
    let h = action.hopf();
    let monos = monomials_up_to(alg.vars().len(), d);
    let mut rows_mod: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
    let mut rows_full: BTreeMap<(usize, usize, Vec<u32>), usize> = BTreeMap::new();
    let mut cols_mod: Vec<BTreeMap<usize, Rat>> = Vec::new();
    let mut cols_full: Vec<BTreeMap<usize, Rat>> = Vec::new();
    for e in &monos {
        let lift = HPoly::from_poly(
            Poly::monomial(alg.vars(), e.clone(), Rat::one()),
            alg.order(),
        );
        let mut cm = BTreeMap::new();
        let mut cf = BTreeMap::new();
        for b in 0..h.dim() {
            let diff = action
                .act(&h.basis_vec(b), &lift)
                .unwrap()
                .sub(&lift.scale(&h.counit_tensor()[b]));
            for k in 0..=alg.order() {
                for (ee, c) in diff.coeff(k).terms() {
                    let next = rows_full.len();
                    let r = *rows_full.entry((b, k, ee.clone())).or_insert(next);
                    cf.insert(r, c.clone());
                    if k == 0 {
                        let next = rows_mod.len();
                        let r = *rows_mod.entry((b, ee.clone())).or_insert(next);
                        cm.insert(r, c.clone());
                    }
                }
            }
        }
        cols_mod.push(cm);
        cols_full.push(cf);
    }
    let solve = |nrows: usize, cols: &[BTreeMap<usize, Rat>]| -> Vec<Poly> {
        let mut grid = vec![vec![Rat::zero(); cols.len()]; nrows.max(1)];
        for (c, col) in cols.iter().enumerate() {
            for (&r, v) in col {
                grid[r][c] = v.clone();
            }
        }
        ScalarMatrix::from_rows(grid)
            .unwrap()
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut p = Poly::zero(action.alg().vars());
                for (e, c) in monos.iter().zip(v) {
                    if !c.is_zero() {
                        p.add_term(e.clone(), c);
                    }
                }
                p
            })
            .collect()
    };
    InvariantBases {
        mod_h: solve(rows_mod.len(), &cols_mod),
        full_order: solve(rows_full.len(), &cols_full),
    }
}

/// Basis of {x ∈ H : x·(degree ≤ d monomials) ⊆ hbar·A} (mod_h = true)
/// or of the exact annihilator at full order (mod_h = false).
fn annihilator(action: &HopfAction, d: u32, mod_h: bool) -> Vec<Vec<Rat>> {
    let alg = action.alg();
    let h = action.hopf();
    let dim = h.dim();
    let monos = monomials_up_to(alg.vars().len(), d);
    let mut rows: BTreeMap<(usize, usize, Vec<u32>), usize> = BTreeMap::new();
    let mut cols: Vec<BTreeMap<usize, Rat>> = vec![BTreeMap::new(); dim];
    for (mi, e) in monos.iter().enumerate() {
        let lift = HPoly::from_poly(
            Poly::monomial(alg.vars(), e.clone(), Rat::one()),
            alg.order(),
        );
        for b in 0..dim {
            let img = action.act(&h.basis_vec(b), &lift).unwrap();
            let levels = if mod_h { 0..=0 } else { 0..=alg.order() };
            for k in levels {
                for (ee, c) in img.coeff(k).terms() {
                    let next = rows.len();
                    let r = *rows.entry((mi, k, ee.clone())).or_insert(next);
                    cols[b].insert(r, c.clone());
                }
            }
        }
    }
    let mut grid = vec![vec![Rat::zero(); dim]; rows.len().max(1)];
    for (b, col) in cols.iter().enumerate() {
        for (&r, v) in col {
            grid[r][b] = v.clone();
        }
    }
    let ns = ScalarMatrix::from_rows(grid).unwrap().nullspace();
    rref_basis(&ns, dim)
}

pub fn annihilator_mod_h(action: &HopfAction, d: u32) -> Vec<Vec<Rat>> {
    annihilator(action, d, true)
}

/// Largest Hopf ideal inside the annihilator of degree-≤d elements
/// (exact, or mod hbar), by iterated refinement; the action is
/// inner-faithful iff the fixpoint is zero.
pub fn inner_faithful(action: &HopfAction, d: u32, mod_h: bool) -> (bool, Vec<Vec<Rat>>) {
    let h = action.hopf();
    let n = h.dim();
    let mut j = annihilator(action, d, mod_h);
    loop {
        if j.is_empty() {
            return (true, j);
        }
        // linear constraints on x = Σ t_a j_a keeping it a Hopf ideal
        // member relative to the current span
        let p = perp(&j, n);
        let mut w = Vec::new();
        for b in &j {
            for k in 0..n {
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
        let q = perp(&rref_basis(&w, n * n), n * n);
        let mut grid: Vec<Vec<Rat>> = Vec::new();
        let mut push_row = |vals: Vec<Rat>| {
            if !vals.iter().all(|c| c.is_zero()) {
                grid.push(vals);
            }
        };
        // ε(x) = 0
        push_row(j.iter().map(|a| h.counit_vec(a)).collect());
        for f in &p {
            // S(x) ∈ J
            push_row(j.iter().map(|a| dot(f, &h.antipode_vec(a))).collect());
            // h_u x ∈ J and x h_u ∈ J
            for u in 0..n {
                push_row(
                    j.iter()
                        .map(|a| dot(f, &h.mul_vec(&h.basis_vec(u), a)))
                        .collect(),
                );
                push_row(
                    j.iter()
                        .map(|a| dot(f, &h.mul_vec(a, &h.basis_vec(u))))
                        .collect(),
                );
            }
        }
        // Δx ∈ J⊗H + H⊗J
        for f in &q {
            push_row(
                j.iter()
                    .map(|a| {
                        let flat: Vec<Rat> =
                            h.comul_vec(a).into_iter().flatten().collect();
                        dot(f, &flat)
                    })
                    .collect(),
            );
        }
        if grid.is_empty() {
            // every constraint holds on all of J: fixpoint
            return (false, j);
        }
        let ts = ScalarMatrix::from_rows(grid).unwrap().nullspace();
        let refined: Vec<Vec<Rat>> = ts
            .iter()
            .map(|t| {
                let mut v = vec![Rat::zero(); n];
                for (a, ta) in j.iter().zip(t) {
                    for (vc, ac) in v.iter_mut().zip(a) {
                        *vc = vc.clone() + ta.clone() * ac.clone();
                    }
                }
                v
            })
            .collect();
        let refined = rref_basis(&refined, n);
        if refined.len() == j.len() {
            debug_assert!(refined.iter().all(|v| coideal_member(h, &j, v)));
            return (false, refined);
        }
        j = refined;
    }
}

/// Verdict of the group-factorization test.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupVerdict {
    Group {
        cayley: Vec<Vec<usize>>,
        labels: Vec<String>,
    },
    NotGroup,
    Inconclusive(String),
}

/// Quotient H by the largest Hopf ideal inside the annihilator and
/// answer whether the quotient is a group algebra (spanned by its
/// grouplikes); on success the group's Cayley table is returned.
pub fn factors_through_group(
    action: &HopfAction,
    d: u32,
    mod_h: bool,
) -> Result<GroupVerdict, HopfError> {
    let h = action.hopf();
    let (_, ideal) = inner_faithful(action, d, mod_h);
    let (q, _) = quotient_hopf(h, &ideal)?;
    let g = match grouplikes(&q) {
        GrouplikeOutcome::Complete(g) => g,
        GrouplikeOutcome::Inconclusive(why) => return Ok(GroupVerdict::Inconclusive(why)),
    };
    if g.len() != q.dim() || rref_basis(&g, q.dim()).len() != q.dim() {
        return Ok(GroupVerdict::NotGroup);
    }
    let mut cayley = vec![vec![0usize; g.len()]; g.len()];
    for (i, gi) in g.iter().enumerate() {
        for (jj, gj) in g.iter().enumerate() {
            let p = q.mul_vec(gi, gj);
            match g.iter().position(|gk| *gk == p) {
                Some(k) => cayley[i][jj] = k,
                None => {
                    return Ok(GroupVerdict::Inconclusive(
                        "grouplike product escapes the enumerated set".into(),
                    ))
                }
            }
        }
    }
    let labels = g.iter().map(|v| q.format_elem(v)).collect();
    Ok(GroupVerdict::Group { cayley, labels })
}

#[cfg(test)]
mod tests {
    use super::super::in_span;
    use super::*;
    use crate::corpus;
    use crate::rat;
    use rand::SeedableRng;

    fn qchart() -> HopfAction {
        corpus::sweedler_action(2).unwrap()
    }

    #[test]
    fn action_examples() {
        let act = qchart();
        let h = act.hopf();
        let alg = act.alg();
        let vs = alg.vars().to_vec();
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let z = alg.gen_lift(2);
        // a·z = xy
        let az = act.act(&h.basis_vec(2), &z).unwrap();
        assert_eq!(az, HPoly::from_poly(x.mul(&y), 2));
        // (ga)·z = g·(a·z) = xy
        let gaz = act.act(&h.basis_vec(3), &z).unwrap();
        assert_eq!(gaz, az);
        // a·(z⋆z) = 0 exactly: xy commutes with z in this algebra
        let z2 = alg.star(&z, &z).unwrap();
        assert!(act.act(&h.basis_vec(2), &z2).unwrap().is_zero());
        // h·1 = ε(h)·1
        let one = HPoly::one(&vs, 2);
        for b in 0..4 {
            let got = act.act(&h.basis_vec(b), &one).unwrap();
            assert_eq!(got, one.scale(&h.counit_tensor()[b]));
        }
    }

    #[test]
    fn module_algebra_check_passes() {
        let act = qchart();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let rep = module_algebra_check(&act, 4, 3, &mut rng);
        assert!(rep.passed(), "failures: {:?}", rep.failures);
    }

    #[test]
    fn mutated_action_fails_relation_check() {
        let act = corpus::sweedler_action_mutated(2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let rep = module_algebra_check(&act, 2, 3, &mut rng);
        assert!(!rep.passed());
    }

    #[test]
    fn invariants_examples() {
        let act = qchart();
        let inv = invariants(&act, 2);
        // mod hbar, degree ≤ 2: span{1, x, y, x², xy, y², z²}
        assert_eq!(inv.mod_h.len(), 7);
        let vs = act.alg().vars().to_vec();
        let z2 = Poly::var(&vs, "z").unwrap().pow(2);
        assert!(inv.mod_h.iter().any(|p| p == &z2));
        // full order, degree ≤ 1: span{1, x, y}
        let inv1 = invariants(&act, 1);
        assert_eq!(inv1.full_order.len(), 3);
        assert!(inv1
            .full_order
            .iter()
            .all(|p| p.partial(2).is_zero()));
    }

    #[test]
    fn annihilator_is_a_minus_ga() {
        // a - ga kills every monomial mod hbar (and in fact exactly)
        let act = qchart();
        let ann = annihilator_mod_h(&act, 4);
        assert_eq!(ann.len(), 1);
        assert_eq!(ann[0], vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(-1, 1)]);
        let exact = annihilator(&act, 4, false);
        assert_eq!(exact, ann);
    }

    #[test]
    fn annihilator_with_a_zero() {
        let act = corpus::sweedler_action_a_zero(2).unwrap();
        let ann = annihilator_mod_h(&act, 3);
        assert_eq!(ann.len(), 2);
        let h = act.hopf();
        assert!(in_span(&ann, &h.basis_vec(2)));
        assert!(in_span(&ann, &h.basis_vec(3)));
    }

    #[test]
    fn qchart_action_is_inner_faithful() {
        let act = qchart();
        for mod_h in [false, true] {
            let (faithful, ideal) = inner_faithful(&act, 4, mod_h);
            assert!(faithful, "ideal: {:?}", ideal);
        }
    }

    #[test]
    fn a_zero_action_is_not_inner_faithful() {
        let act = corpus::sweedler_action_a_zero(2).unwrap();
        let (faithful, ideal) = inner_faithful(&act, 3, false);
        assert!(!faithful);
        assert_eq!(ideal.len(), 2);
    }

    #[test]
    fn trivial_action_ideal_is_augmentation() {
        let act = corpus::trivial_group_action(2, 2).unwrap();
        let (faithful, ideal) = inner_faithful(&act, 2, false);
        assert!(!faithful);
        // ker ε of kZ/2 is spanned by 1 - g
        assert_eq!(ideal.len(), 1);
        assert_eq!(ideal[0], vec![rat(1, 1), rat(-1, 1)]);
    }

    #[test]
    fn factors_verdicts() {
        // the Sweedler action: not a group, both mod hbar and at full order
        let act = qchart();
        for mod_h in [false, true] {
            assert_eq!(
                factors_through_group(&act, 4, mod_h).unwrap(),
                GroupVerdict::NotGroup
            );
        }
        // a ↦ 0 sign action: factors through Z/2
        let act = corpus::sweedler_action_a_zero(2).unwrap();
        match factors_through_group(&act, 3, false).unwrap() {
            GroupVerdict::Group { cayley, .. } => {
                assert_eq!(cayley.len(), 2);
            }
            other => panic!("expected group verdict, got {:?}", other),
        }
        // trivial action: the trivial group
        let act = corpus::trivial_group_action(2, 2).unwrap();
        match factors_through_group(&act, 2, false).unwrap() {
            GroupVerdict::Group { cayley, .. } => assert_eq!(cayley, vec![vec![0]]),
            other => panic!("expected trivial group, got {:?}", other),
        }
    }

    #[test]
    fn group_actions_factor_through_their_group() {
        for act in [
            corpus::z2_sign_action(2).unwrap(),
            corpus::z3_cycle_action(2).unwrap(),
        ] {
            let n = act.hopf().dim();
            match factors_through_group(&act, 2, false).unwrap() {
                GroupVerdict::Group { cayley, .. } => assert_eq!(cayley.len(), n),
                other => panic!("expected group verdict, got {:?}", other),
            }
            let (faithful, _) = inner_faithful(&act, 2, false);
            assert!(faithful);
        }
    }

    #[test]
    fn reduction_commutes_with_action() {
        let act = qchart();
        let h = act.hopf();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let f = HPoly::random(act.alg().vars(), 2, &mut rng, 3, false);
            for b in 0..h.dim() {
                let full = act.act(&h.basis_vec(b), &f).unwrap();
                let reduced = act.act_mod_h(&h.basis_vec(b), &f.mod_h()).unwrap();
                assert_eq!(full.mod_h(), reduced);
            }
        }
    }
}
