//! Coaction component matrices, the Galois-map image as a subspace over
//! the function field, Plücker minors and ratios, the defined-over-k
//! test, and the Poisson-commutation identities tying invariants to the
//! chart.

use crate::defquant::HPoly;
use crate::exactalg::{poly_det, poly_rank, AlgError, Matrix};
use crate::hopfact::{HopfAction, HopfError};
use crate::poisson::{monomials_up_to, PoissonStructure};
use crate::{Poly, Rat, RatFn};
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GaloisError {
    #[error("rank did not stabilize at the degree bound: {0}")]
    RankUnstable(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    Hopf(#[from] HopfError),
    #[error("{0}")]
    Alg(#[from] AlgError),
}

/// Rows of coaction components: entry (v, i) is h_i · v computed mod
/// hbar, a polynomial viewed inside Q(A₀).
#[derive(Debug, Clone, PartialEq)]
pub struct CoactionMatrix {
    hopf_labels: Vec<String>,
    row_labels: Vec<Poly>,
    rows: Vec<Vec<Poly>>,
}

impl CoactionMatrix {
    pub fn from_rows(hopf_labels: Vec<String>, row_labels: Vec<Poly>, rows: Vec<Vec<Poly>>) -> Self {
        assert_eq!(row_labels.len(), rows.len());
        assert!(rows.iter().all(|r| r.len() == hopf_labels.len()));
        CoactionMatrix {
            hopf_labels,
            row_labels,
            rows,
        }
    }

    pub fn cols(&self) -> usize {
        self.hopf_labels.len()
    }

    pub fn row_labels(&self) -> &[Poly] {
        &self.row_labels
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    /// Rank over the function field Q(A₀) (equal to the polynomial
    /// rank, by clearing denominators).
    pub fn rank(&self) -> usize {
        if self.rows.is_empty() {
            return 0;
        }
        poly_rank(&Matrix::from_rows(self.rows.clone()).unwrap())
    }

    fn minor(&self, cols: &[usize]) -> Result<Poly, GaloisError> {
        let grid = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        let det = poly_det(&Matrix::from_rows(grid).unwrap()).map_err(AlgError::from)?;
        // a vanishing determinant comes back over an empty variable
        // list; put it over the matrix's variables
        Ok(det.with_vars(self.rows[0][0].vars())?)
    }
}

/// One coaction row per element: (h_1·f, …, h_d·f) reduced mod hbar.
pub fn coaction_rows(
    action: &HopfAction,
    elements: &[Poly],
) -> Result<CoactionMatrix, GaloisError> {
    let h = action.hopf();
    let mut rows = Vec::with_capacity(elements.len());
    for f in elements {
        let mut row = Vec::with_capacity(h.dim());
        for b in 0..h.dim() {
            row.push(action.act_mod_h(&h.basis_vec(b), f)?);
        }
        rows.push(row);
    }
    Ok(CoactionMatrix::from_rows(
        h.labels().to_vec(),
        elements.to_vec(),
        rows,
    ))
}

/// Scan normal-form monomials of degree ≤ d, greedily keeping rows that
/// increase the function-field rank; the final rank must already be
/// reached at degree d-1 (stability), else an error asks for a larger
/// bound.
pub fn galois_basis(
    action: &HopfAction,
    d: u32,
) -> Result<(Vec<Poly>, CoactionMatrix, usize), GaloisError> {
    let vars = action.alg().vars().to_vec();
    let h = action.hopf();
    let mut picked: Vec<Poly> = Vec::new();
    let mut rows: Vec<Vec<Poly>> = Vec::new();
    let mut rank = 0usize;
    let mut rank_at_prev = 0usize;
    let mut monos = monomials_up_to(vars.len(), d);
    monos.sort_by_key(|e| e.iter().sum::<u32>());
    for e in &monos {
        let deg: u32 = e.iter().sum();
        let f = Poly::monomial(&vars, e.clone(), Rat::one());
        let row = coaction_rows(action, std::slice::from_ref(&f))?;
        let mut candidate = rows.clone();
        candidate.push(row.rows()[0].clone());
        let r = poly_rank(&Matrix::from_rows(candidate.clone()).unwrap());
        if r > rank {
            rank = r;
            rows = candidate;
            picked.push(f);
            if deg < d {
                rank_at_prev = rank;
            }
        }
    }
    if rank != rank_at_prev {
        return Err(GaloisError::RankUnstable(format!(
            "rank {} at degree {} exceeds rank {} at degree {}",
            rank,
            d,
            rank_at_prev,
            d.saturating_sub(1)
        )));
    }
    let b = CoactionMatrix::from_rows(h.labels().to_vec(), picked.clone(), rows);
    Ok((picked, b, rank))
}

/// Plücker chart of a full-row-rank coaction matrix: the pivot subset I
/// and the ratios p_IJ = Δ_J/Δ_I for every r-subset J of columns.
#[derive(Debug, Clone, PartialEq)]
pub struct PluckerChart {
    pub r: usize,
    pub i_set: Vec<usize>,
    pub delta_i: Poly,
    pub ratios: Vec<(Vec<usize>, RatFn)>,
}

/// I is chosen among the nonzero minors as the one with the
/// lexicographically largest leading monomial (ties broken by the
/// lexicographically smallest subset), which normalizes the chart
/// deterministically; ratios are reported for all J.
pub fn plucker_ratios(b: &CoactionMatrix) -> Result<PluckerChart, GaloisError> {
    let r = b.rows().len();
    if r == 0 || b.rank() != r {
        return Err(GaloisError::RankDeficient);
    }
    let subsets = k_subsets(b.cols(), r);
    let mut minors = Vec::with_capacity(subsets.len());
    for s in &subsets {
        minors.push(b.minor(s)?);
    }
    let mut best: Option<usize> = None;
    for (k, m) in minors.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let better = match best {
            None => true,
            Some(cur) => {
                let (le, _) = m.leading().unwrap();
                let (ce, _) = minors[cur].leading().unwrap();
                le > ce
            }
        };
        if better {
            best = Some(k);
        }
    }
    let best = best.ok_or(GaloisError::RankDeficient)?;
    let delta_i = minors[best].clone();
    let mut ratios = Vec::with_capacity(subsets.len());
    for (s, m) in subsets.iter().zip(&minors) {
        let ratio = RatFn::new(m.clone(), delta_i.clone()).map_err(AlgError::from)?;
        ratios.push((s.clone(), ratio));
    }
    Ok(PluckerChart {
        r,
        i_set: subsets[best].clone(),
        delta_i,
        ratios,
    })
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// (†): the image is defined over k iff every Plücker ratio is a
/// constant; returns the non-constant witnesses otherwise.
pub fn defined_over_k(chart: &PluckerChart) -> (bool, Vec<(Vec<usize>, RatFn)>) {
    let witnesses: Vec<_> = chart
        .ratios
        .iter()
        .filter(|(_, p)| !p.is_constant())
        .cloned()
        .collect();
    (witnesses.is_empty(), witnesses)
}

#[derive(Debug, Clone, Default)]
pub struct GaloisReport {
    pub failures: Vec<String>,
}

impl GaloisReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Certify that a0 is invariant at full truncation order under the
/// canonical lift.
fn certify_invariant(action: &HopfAction, a0: &Poly) -> Result<(), GaloisError> {
    let h = action.hopf();
    let alg = action.alg();
    let lift = HPoly::from_poly(a0.with_vars(alg.vars())?, alg.order());
    for b in 0..h.dim() {
        let got = action.act(&h.basis_vec(b), &lift)?;
        if got != lift.scale(&h.counit_tensor()[b]) {
            return Err(GaloisError::Precondition(format!(
                "{} is not a full-order invariant: {} acts nontrivially",
                a0,
                h.labels()[b]
            )));
        }
    }
    Ok(())
}

/// ρ_i({a0, f}) = {a0, ρ_i(f)} for every Hopf basis index i and every
/// probe f (the Poisson-commutation lemma for liftable invariants).
pub fn poiscom_check(
    action: &HopfAction,
    ps: &PoissonStructure,
    a0: &Poly,
    probes: &[Poly],
) -> Result<GaloisReport, GaloisError> {
    certify_invariant(action, a0)?;
    let h = action.hopf();
    let mut rep = GaloisReport::default();
    for f in probes {
        let bracket = ps.bracket_poly(a0, f)?;
        for i in 0..h.dim() {
            let lhs = action.act_mod_h(&h.basis_vec(i), &bracket)?;
            let rho_f = action.act_mod_h(&h.basis_vec(i), f)?;
            let rhs = ps.bracket_poly(a0, &rho_f)?;
            if lhs != rhs {
                rep.failures.push(format!(
                    "i = {}, f = {}: ρ_i({{a0,f}}) = {} but {{a0,ρ_i(f)}} = {}",
                    h.labels()[i],
                    f,
                    lhs,
                    rhs
                ));
            }
        }
    }
    Ok(rep)
}

/// Eq. (3): {a0, p_IJ} vanishes for every chart ratio, verified both by
/// the direct rational bracket and through the minor identity
/// (Δ_I{a0,Δ_J} - Δ_J{a0,Δ_I})/Δ_I²; the two routes must also agree.
pub fn eq3_check(
    action: &HopfAction,
    ps: &PoissonStructure,
    a0: &Poly,
    d: u32,
) -> Result<GaloisReport, GaloisError> {
    certify_invariant(action, a0)?;
    let (_, b, _) = galois_basis(action, d)?;
    let chart = plucker_ratios(&b)?;
    let mut rep = GaloisReport::default();
    let a0r = RatFn::from_poly(a0.with_vars(chart.delta_i.vars())?);
    for (j, p) in &chart.ratios {
        let direct = ps.bracket_rat(&a0r, p)?;
        let delta_j = b.minor(j)?;
        let num = chart
            .delta_i
            .mul(&ps.bracket_poly(a0, &delta_j)?)
            .sub(&delta_j.mul(&ps.bracket_poly(a0, &chart.delta_i)?));
        let via_minors = RatFn::new(num, chart.delta_i.mul(&chart.delta_i))
            .map_err(AlgError::from)?;
        if direct != via_minors {
            rep.failures.push(format!(
                "J = {:?}: bracket routes disagree ({} vs {})",
                j, direct, via_minors
            ));
        }
        if !direct.is_zero() {
            rep.failures
                .push(format!("J = {:?}: {{a0, p_IJ}} = {} != 0", j, direct));
        }
    }
    Ok(rep)
}

/// Every non-constant chart ratio must be Poisson-central in Q(A₀):
/// the dichotomy between group factorizations and nontrivial central
/// elements.
pub fn plucker_center_check(
    chart: &PluckerChart,
    ps: &PoissonStructure,
) -> Result<GaloisReport, GaloisError> {
    let mut rep = GaloisReport::default();
    for (j, p) in &chart.ratios {
        if p.is_constant() {
            continue;
        }
        if !ps.is_central_rat(p)? {
            rep.failures
                .push(format!("J = {:?}: ratio {} is not Poisson-central", j, p));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::poisson::induced_bracket;
    use crate::rat;

    fn qchart_action() -> HopfAction {
        corpus::sweedler_action(2).unwrap()
    }

    fn xyz(vs: &[String]) -> (Poly, Poly, Poly) {
        (
            Poly::var(vs, "x").unwrap(),
            Poly::var(vs, "y").unwrap(),
            Poly::var(vs, "z").unwrap(),
        )
    }

    #[test]
    fn coaction_row_examples() {
        let act = qchart_action();
        let vs = act.alg().vars().to_vec();
        let (x, y, z) = xyz(&vs);
        let one = Poly::one(&vs);
        let m = coaction_rows(&act, &[one.clone(), z.clone(), z.pow(3)]).unwrap();
        let xy = x.mul(&y);
        assert_eq!(m.rows()[0], vec![one.clone(), one, Poly::zero(&vs), Poly::zero(&vs)]);
        assert_eq!(m.rows()[1], vec![z.clone(), z.neg(), xy.clone(), xy.clone()]);
        // row of z³ is z² times the row of z
        let z2 = z.pow(2);
        let expect: Vec<Poly> = m.rows()[1].iter().map(|p| p.mul(&z2)).collect();
        assert_eq!(m.rows()[2], expect);
    }

    #[test]
    fn a_and_ga_columns_agree_up_to_degree_8() {
        let act = qchart_action();
        let vs = act.alg().vars().to_vec();
        for e in monomials_up_to(3, 8) {
            let f = Poly::monomial(&vs, e, Rat::one());
            let m = coaction_rows(&act, std::slice::from_ref(&f)).unwrap();
            assert_eq!(m.rows()[0][2], m.rows()[0][3], "monomial {}", f);
        }
    }

    #[test]
    fn galois_basis_ranks() {
        let (basis, _, r) = galois_basis(&qchart_action(), 4).unwrap();
        assert_eq!(r, 2);
        let vs = qchart_action().alg().vars().to_vec();
        let (_, _, z) = xyz(&vs);
        assert_eq!(basis, vec![Poly::one(&vs), z]);
        let (_, _, r) = galois_basis(&corpus::z2_sign_action(2).unwrap(), 3).unwrap();
        assert_eq!(r, 2);
        let (_, _, r) = galois_basis(&corpus::z3_cycle_action(2).unwrap(), 3).unwrap();
        assert_eq!(r, 3);
        let (_, _, r) = galois_basis(&corpus::trivial_group_action(2, 2).unwrap(), 3).unwrap();
        assert_eq!(r, 1);
    }

    #[test]
    fn qchart_chart() {
        let (_, b, _) = galois_basis(&qchart_action(), 4).unwrap();
        let chart = plucker_ratios(&b).unwrap();
        let vs = qchart_action().alg().vars().to_vec();
        let (x, y, z) = xyz(&vs);
        assert_eq!(chart.i_set, vec![0, 2]);
        assert_eq!(chart.delta_i, x.mul(&y));
        // the {1, g} column pair is J = {0, 1} in 0-based indices
        let p01 = chart
            .ratios
            .iter()
            .find(|(j, _)| j == &vec![0, 1])
            .map(|(_, p)| p.clone())
            .unwrap();
        let want = RatFn::new(z.scale(&rat(-2, 1)), x.mul(&y)).unwrap();
        assert_eq!(p01, want);
        // equal a- and ga-columns make the {2, 3} minor vanish
        let p23 = chart
            .ratios
            .iter()
            .find(|(j, _)| j == &vec![2, 3])
            .map(|(_, p)| p.clone())
            .unwrap();
        assert!(p23.is_zero());
        let (over_k, witnesses) = defined_over_k(&chart);
        assert!(!over_k);
        assert!(witnesses.iter().any(|(_, p)| p == &want));
    }

    #[test]
    fn group_charts_defined_over_k() {
        for act in [
            corpus::z2_sign_action(2).unwrap(),
            corpus::z3_cycle_action(2).unwrap(),
            corpus::trivial_group_action(3, 2).unwrap(),
        ] {
            let (_, b, _) = galois_basis(&act, 3).unwrap();
            let chart = plucker_ratios(&b).unwrap();
            let (over_k, _) = defined_over_k(&chart);
            assert!(over_k);
        }
    }

    #[test]
    fn chart_is_basis_independent() {
        let act = qchart_action();
        let (_, b, _) = galois_basis(&act, 4).unwrap();
        let chart = plucker_ratios(&b).unwrap();
        // recombine rows over Q(A₀): r0' = r0, r1' = r1 + z²·r0
        let vs = act.alg().vars().to_vec();
        let (_, _, z) = xyz(&vs);
        let z2 = z.pow(2);
        let rows = b.rows();
        let new_rows = vec![
            rows[0].clone(),
            rows[1]
                .iter()
                .zip(&rows[0])
                .map(|(a, c)| a.add(&c.mul(&z2)))
                .collect(),
        ];
        let b2 = CoactionMatrix::from_rows(
            act.hopf().labels().to_vec(),
            b.row_labels().to_vec(),
            new_rows,
        );
        let chart2 = plucker_ratios(&b2).unwrap();
        assert_eq!(chart.i_set, chart2.i_set);
        assert_eq!(chart.ratios, chart2.ratios);
    }

    #[test]
    fn poiscom_examples() {
        let act = qchart_action();
        let (ps, _) = induced_bracket(act.alg()).unwrap();
        let vs = act.alg().vars().to_vec();
        let (x, y, z) = xyz(&vs);
        // single-instance oracle: ρ_a({x,z}) = a·(xz) = x²y = {x, ρ_a(z)}
        let h = act.hopf();
        let lhs = act
            .act_mod_h(&h.basis_vec(2), &ps.bracket_poly(&x, &z).unwrap())
            .unwrap();
        assert_eq!(lhs, x.pow(2).mul(&y));
        let rep = poiscom_check(&act, &ps, &x, &[x.clone(), y.clone(), z.clone()]).unwrap();
        assert!(rep.passed(), "failures: {:?}", rep.failures);
        // z is not an invariant: precondition must trip
        assert!(matches!(
            poiscom_check(&act, &ps, &z, &[x]),
            Err(GaloisError::Precondition(_))
        ));
    }

    #[test]
    fn eq3_and_center_check() {
        let act = qchart_action();
        let (ps, _) = induced_bracket(act.alg()).unwrap();
        let vs = act.alg().vars().to_vec();
        let (x, y, _) = xyz(&vs);
        for a0 in [x, y] {
            let rep = eq3_check(&act, &ps, &a0, 4).unwrap();
            assert!(rep.passed(), "failures: {:?}", rep.failures);
        }
        let (_, b, _) = galois_basis(&act, 4).unwrap();
        let chart = plucker_ratios(&b).unwrap();
        let rep = plucker_center_check(&chart, &ps).unwrap();
        assert!(rep.passed(), "failures: {:?}", rep.failures);
    }

    #[test]
    fn rank_instability_detected() {
        // at degree 0 only the row of 1 is available; the sign action
        // needs z, so d = 0 must refuse (rank 1 stable) while d = 1
        // sees rank 2 for the first time at the top degree and errors
        let act = corpus::z2_sign_action(2).unwrap();
        let r = galois_basis(&act, 1);
        assert!(matches!(r, Err(GaloisError::RankUnstable(_))));
    }
}
