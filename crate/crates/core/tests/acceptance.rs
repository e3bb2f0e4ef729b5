//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible under `--nocapture`) before asserting.

use deformata::defquant::{
    dehomogenize, ore_witness, rees_of_filtered, DeformAlgebra, HPoly, HSeries,
};
use deformata::frontend::parse_expr_text;
use deformata::galois::{
    defined_over_k, eq3_check, galois_basis, plucker_center_check, plucker_ratios, poiscom_check,
};
use deformata::hopfact::{
    factors_through_group, hopf_verify, inner_faithful, module_algebra_check, sweedler,
    GroupVerdict,
};
use deformata::poisson::induced_bracket;
use deformata::{corpus, rat, Poly, Rat, RatFn};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;

fn verdict(n: u32, ok: bool, what: &str) {
    println!(
        "acceptance {:02}: {} - {}",
        n,
        if ok { "PASS" } else { "FAIL" },
        what
    );
    assert!(ok, "acceptance criterion {} failed: {}", n, what);
}

fn presentations(file: &str) -> String {
    format!(
        "{}/../../presentations/{}",
        env!("CARGO_MANIFEST_DIR"),
        file
    )
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_deformata"))
        .args(args)
        .env_remove("DEFORMATA_SEED")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).to_string(),
    )
}

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[test]
fn criterion_01_moyal_reproduction() {
    let (code, out) = bin(&["bracket", "--alg", &presentations("moyal.alg")]);
    let alg = corpus::moyal_plane(2).unwrap();
    let (ps, depth) = induced_bracket(&alg).unwrap();
    let vs = ps.vars().to_vec();
    let yx = ps
        .bracket_poly(&Poly::var(&vs, "y").unwrap(), &Poly::var(&vs, "x").unwrap())
        .unwrap();
    let ok = code == 0
        && out.contains("[depth] 1")
        && depth == 1
        && yx == Poly::one(&vs);
    verdict(1, ok, "Moyal plane has depth 1 and {y, x} = 1");
}

#[test]
fn criterion_02_quantum_polynomial_reproduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let names = ["x1", "x2", "x3", "x4"];
    let mut ok = true;
    for _ in 0..10 {
        let n = rng.gen_range(2..=4usize);
        let vs = vars(&names[..n]);
        let mut lambdas = Vec::new();
        let mut q = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lam = rat(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3));
                q.push(((i, j), HSeries::exp_lambda(lam.clone(), 3)));
                lambdas.push(((i, j), lam));
            }
        }
        let alg = DeformAlgebra::quantum_poly(vs.clone(), q, 3).unwrap();
        let (ps, _) = induced_bracket(&alg).unwrap();
        for ((i, j), lam) in &lambdas {
            let want = Poly::var_idx(&vs, *i)
                .mul(&Poly::var_idx(&vs, *j))
                .scale(lam);
            if ps.bracket_gen(*i, *j) != want {
                ok = false;
            }
        }
    }
    verdict(
        2,
        ok,
        "10 random exponential multipliers give {x_i, x_j} = lambda_ij x_i x_j",
    );
}

#[test]
fn criterion_03_enveloping_reproduction() {
    let vs = vars(&["e", "f", "t"]);
    let e = Poly::var(&vs, "e").unwrap();
    let f = Poly::var(&vs, "f").unwrap();
    let t = Poly::var(&vs, "t").unwrap();
    // [e, f] = t, [e, t] = -2e, [f, t] = 2f
    let brackets = vec![
        ((0, 1), t.clone()),
        ((0, 2), e.scale(&rat(-2, 1))),
        ((1, 2), f.scale(&rat(2, 1))),
    ];
    let alg = DeformAlgebra::lie_enveloping(vs.clone(), brackets.clone(), 2).unwrap();
    let (ps, depth) = induced_bracket(&alg).unwrap();
    let ok = depth == 1
        && brackets
            .iter()
            .all(|((i, j), c)| ps.bracket_gen(*i, *j) == *c);
    verdict(3, ok, "sl2 enveloping deformation induces the Lie bracket");
}

#[test]
fn criterion_04_counterexample_poisson_side() {
    let alg = corpus::qchart_algebra(2).unwrap();
    let (ps, _) = induced_bracket(&alg).unwrap();
    let vs = ps.vars().to_vec();
    let x = Poly::var(&vs, "x").unwrap();
    let y = Poly::var(&vs, "y").unwrap();
    let z = Poly::var(&vs, "z").unwrap();
    let brackets_ok = ps.bracket_gen(0, 1) == x.mul(&y)
        && ps.bracket_gen(0, 2) == x.mul(&z)
        && ps.bracket_gen(2, 1) == y.mul(&z);
    let (code, out) = bin(&[
        "center",
        "--poisson",
        &presentations("qchart.poi"),
        "--max-deg",
        "8",
    ]);
    let center_ok = code == 0 && out.contains("trivial up to degree 8");
    let basis = ps.polynomial_center(8);
    let library_center_ok = basis.iter().all(|b| b.is_constant());
    let (code2, out2) = bin(&[
        "central",
        "--poisson",
        &presentations("qchart.poi"),
        "--elem",
        "x*y/z",
    ]);
    let central_ok = code2 == 0 && out2.contains("Poisson-central");
    verdict(
        4,
        brackets_ok && center_ok && library_center_ok && central_ok,
        "{x,y}=xy, {x,z}=xz, {z,y}=yz; center trivial to degree 8; x*y/z central",
    );
}

#[test]
fn criterion_05_counterexample_hopf_side() {
    let action = corpus::sweedler_action(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let module_ok = module_algebra_check(&action, 8, 6, &mut rng).passed();
    let not_group = [true, false].into_iter().all(|mode| {
        factors_through_group(&action, 4, mode).unwrap() == GroupVerdict::NotGroup
    });
    let faithful = [true, false]
        .into_iter()
        .all(|mode| inner_faithful(&action, 4, mode).0);
    let (code, _) = bin(&[
        "check-action",
        "--alg",
        &presentations("qchart.alg"),
        "--action",
        &presentations("qchart.act"),
        "--order",
        "3",
        "--max-deg",
        "6",
    ]);
    verdict(
        5,
        module_ok && not_group && faithful && code == 0,
        "Sweedler action checks at N=3, deg 6; not a group action; inner-faithful",
    );
}

#[test]
fn criterion_06_ore_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ok = true;
    for trial in 0..50 {
        let order = rng.gen_range(1..=4usize);
        let alg = if trial % 2 == 0 {
            corpus::moyal_plane(order).unwrap()
        } else {
            let lam = rat(rng.gen_range(-3i64..=3), 1);
            DeformAlgebra::quantum_poly(
                vars(&["x", "y"]),
                vec![((0, 1), HSeries::exp_lambda(lam, order))],
                order,
            )
            .unwrap()
        };
        let s = HPoly::random(alg.vars(), order, &mut rng, 2, true);
        let a = HPoly::random(alg.vars(), order, &mut rng, 2, false);
        match ore_witness(&alg, &s, &a) {
            Ok(w) => {
                if !w.certified {
                    ok = false;
                }
            }
            Err(_) => {
                // s happened to be irregular; skip (unit_like prevents this)
                ok = false;
            }
        }
    }
    verdict(6, ok, "50 random (s, a) pairs satisfy the left Ore identity exactly");
}

#[test]
fn criterion_07_jacobi_property() {
    let mut ok = true;
    let algebras: Vec<DeformAlgebra> = vec![
        corpus::moyal_plane(2).unwrap(),
        corpus::qchart_algebra(2).unwrap(),
        corpus::qchart_algebra(3).unwrap(),
        DeformAlgebra::lie_enveloping(
            vars(&["e", "f", "t"]),
            vec![
                ((0, 1), Poly::var_idx(&vars(&["e", "f", "t"]), 2)),
                ((0, 2), Poly::var_idx(&vars(&["e", "f", "t"]), 0).scale(&rat(-2, 1))),
                ((1, 2), Poly::var_idx(&vars(&["e", "f", "t"]), 1).scale(&rat(2, 1))),
            ],
            2,
        )
        .unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for alg in &algebras {
        assert!(alg.order() >= 2);
        let (ps, _) = induced_bracket(alg).unwrap();
        if !ps.jacobi_holds() {
            ok = false;
        }
        let vs = ps.vars().to_vec();
        for _ in 0..10 {
            let f = HPoly::random(&vs, 0, &mut rng, 3, false).mod_h();
            let g = HPoly::random(&vs, 0, &mut rng, 3, false).mod_h();
            let h = HPoly::random(&vs, 0, &mut rng, 3, false).mod_h();
            if !ps.jacobi_defect(&f, &g, &h).unwrap().is_zero() {
                ok = false;
            }
        }
    }
    verdict(7, ok, "Jacobi holds for all corpus algebras at N >= 2, incl. random triples");
}

#[test]
fn criterion_08_galois_plucker_dichotomy() {
    let mut ok = true;
    for action in [
        corpus::z2_sign_action(2).unwrap(),
        corpus::z3_cycle_action(2).unwrap(),
    ] {
        let (_, b, _) = galois_basis(&action, 4).unwrap();
        let chart = plucker_ratios(&b).unwrap();
        if !defined_over_k(&chart).0 {
            ok = false;
        }
    }
    let action = corpus::sweedler_action(2).unwrap();
    let (_, b, rank) = galois_basis(&action, 4).unwrap();
    let chart = plucker_ratios(&b).unwrap();
    let (over_k, _) = defined_over_k(&chart);
    let vs = action.alg().vars().to_vec();
    let want = RatFn::new(
        Poly::var(&vs, "z").unwrap().scale(&rat(-2, 1)),
        Poly::var(&vs, "x").unwrap().mul(&Poly::var(&vs, "y").unwrap()),
    )
    .unwrap();
    let has_ratio = chart.ratios.iter().any(|(_, p)| *p == want);
    let (ps, _) = induced_bracket(action.alg()).unwrap();
    let central = plucker_center_check(&chart, &ps).unwrap().passed();
    ok = ok && rank == 2 && !over_k && has_ratio && central;
    verdict(
        8,
        ok,
        "group charts defined over k; Sweedler chart r=2 with central ratio -2z/(xy)",
    );
}

#[test]
fn criterion_09_poiscom_and_eq3() {
    let action = corpus::sweedler_action(2).unwrap();
    let (ps, _) = induced_bracket(action.alg()).unwrap();
    let vs = action.alg().vars().to_vec();
    let probes: Vec<Poly> = (0..vs.len()).map(|i| Poly::var_idx(&vs, i)).collect();
    let x = Poly::var(&vs, "x").unwrap();
    let y = Poly::var(&vs, "y").unwrap();
    let pc = poiscom_check(&action, &ps, &x, &probes).unwrap().passed();
    let e3 = [x, y]
        .iter()
        .all(|a0| eq3_check(&action, &ps, a0, 4).unwrap().passed());
    verdict(9, pc && e3, "poiscom holds for a0 = x; eq3 passes for a0 in {x, y}");
}

#[test]
fn criterion_10_depth_remark() {
    let vs = vars(&["x", "y"]);
    let q = HSeries::from_rats(3, vec![rat(1, 1), Rat::zero(), rat(1, 1), Rat::zero()]);
    let alg = DeformAlgebra::quantum_poly(vs.clone(), vec![((0, 1), q)], 3).unwrap();
    let (ps, depth) = induced_bracket(&alg).unwrap();
    let xy = Poly::var_idx(&vs, 0).mul(&Poly::var_idx(&vs, 1));
    verdict(
        10,
        depth == 2 && ps.bracket_gen(0, 1) == xy,
        "q = 1 + hbar^2 yields depth 2 with bracket xy",
    );
}

#[test]
fn criterion_11_rees_round_trip() {
    let fp = corpus::weyl_filtered();
    let rees = rees_of_filtered(&fp, 2).unwrap();
    let moyal = corpus::moyal_plane(2).unwrap();
    let y = rees.gen_lift(1);
    let x = rees.gen_lift(0);
    let comm = rees.commutator(&y, &x).unwrap();
    let hbar = HPoly::one(rees.vars(), 2).shift(1);
    let moyal_comm = moyal
        .commutator(&moyal.gen_lift(1), &moyal.gen_lift(0))
        .unwrap();
    let mut back = dehomogenize(&rees).unwrap();
    back.relations.sort_by_key(|(k, _)| *k);
    let mut orig = fp.clone();
    orig.relations.sort_by_key(|(k, _)| *k);
    verdict(
        11,
        comm == hbar && comm == moyal_comm && back == orig,
        "Rees(Weyl) has [y, x] = hbar matching Moyal; dehomogenize restores Weyl",
    );
}

#[test]
fn criterion_12_property_suites_across_seeds() {
    let mut ok = true;
    let mut witnesses: Vec<String> = Vec::new();
    for seed in [1u64, 7, 42, 1234, 99991, 2026] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        // associativity and flatness on three presentation kinds
        let algebras = vec![
            corpus::moyal_plane(2).unwrap(),
            corpus::qchart_algebra(2).unwrap(),
            DeformAlgebra::lie_enveloping(
                vars(&["e", "f", "t"]),
                vec![
                    ((0, 1), Poly::var_idx(&vars(&["e", "f", "t"]), 2)),
                    (
                        (0, 2),
                        Poly::var_idx(&vars(&["e", "f", "t"]), 0).scale(&rat(-2, 1)),
                    ),
                    (
                        (1, 2),
                        Poly::var_idx(&vars(&["e", "f", "t"]), 1).scale(&rat(2, 1)),
                    ),
                ],
                2,
            )
            .unwrap(),
        ];
        for alg in &algebras {
            for _ in 0..3 {
                let a = HPoly::random(alg.vars(), alg.order(), &mut rng, 2, false);
                let b = HPoly::random(alg.vars(), alg.order(), &mut rng, 2, false);
                let c = HPoly::random(alg.vars(), alg.order(), &mut rng, 2, false);
                let left = alg.star(&alg.star(&a, &b).unwrap(), &c).unwrap();
                let right = alg.star(&a, &alg.star(&b, &c).unwrap()).unwrap();
                if left != right {
                    ok = false;
                    witnesses.push(format!(
                        "seed {}: associativity fails for a={}, b={}, c={}",
                        seed, a, b, c
                    ));
                }
                let prod = alg.star(&a, &b).unwrap();
                if prod.coeff(0) != a.coeff(0).mul(&b.coeff(0)) {
                    ok = false;
                    witnesses.push(format!(
                        "seed {}: flatness fails for a={}, b={}",
                        seed, a, b
                    ));
                }
            }
            // Leibniz for the induced bracket
            let (ps, _) = induced_bracket(alg).unwrap();
            for _ in 0..3 {
                let f = HPoly::random(ps.vars(), 0, &mut rng, 2, false).mod_h();
                let g = HPoly::random(ps.vars(), 0, &mut rng, 2, false).mod_h();
                let h = HPoly::random(ps.vars(), 0, &mut rng, 2, false).mod_h();
                let lhs = ps.bracket_poly(&f, &g.mul(&h)).unwrap();
                let rhs = ps
                    .bracket_poly(&f, &g)
                    .unwrap()
                    .mul(&h)
                    .add(&g.mul(&ps.bracket_poly(&f, &h).unwrap()));
                if lhs != rhs {
                    ok = false;
                    witnesses.push(format!(
                        "seed {}: Leibniz fails for f={}, g={}, h={}",
                        seed, f, g, h
                    ));
                }
            }
        }

        // Hopf axioms and module-algebra compatibility
        if !hopf_verify(&sweedler()).passed() {
            ok = false;
            witnesses.push(format!("seed {}: Sweedler axioms fail", seed));
        }
        let action = corpus::sweedler_action(2).unwrap();
        let rep = module_algebra_check(&action, 4, 3, &mut rng);
        if !rep.passed() {
            ok = false;
            for f in &rep.failures {
                witnesses.push(format!("seed {}: {}", seed, f));
            }
        }

        // confluence: reductions of the same word along different
        // first-inversion choices agree (reduce_word is deterministic,
        // so compare against star-fold of generator lifts)
        let alg = corpus::qchart_algebra(2).unwrap();
        let word: Vec<usize> = (0..5).map(|_| rng.gen_range(0..3)).collect();
        let direct = alg.reduce_word(&word).unwrap();
        let mut folded = HPoly::one(alg.vars(), alg.order());
        for &g in &word {
            folded = alg.star(&folded, &alg.gen_lift(g)).unwrap();
        }
        if direct != folded {
            ok = false;
            witnesses.push(format!("seed {}: confluence fails on word {:?}", seed, word));
        }
    }
    for w in &witnesses {
        println!("  witness: {}", w);
    }
    verdict(12, ok, "property suites pass under seed 1 and 5 alternative seeds");
}

#[test]
fn expression_round_trip_spot_check() {
    // parse(print(x)) stability for the elements the criteria print
    let vs = vars(&["x", "y", "z"]);
    for text in ["x*y - 2*z", "x^2*y + 1/2*z", "-x + y^3"] {
        let p = parse_expr_text(text).unwrap().eval_poly(&vs).unwrap();
        let reparsed = parse_expr_text(&p.to_string())
            .unwrap()
            .eval_poly(&vs)
            .unwrap();
        assert_eq!(p, reparsed);
    }
}
