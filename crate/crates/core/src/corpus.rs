//! Ready-made example algebras used across the test suites and by the
//! `verify-paper` command: the three-variable exponential-multiplier
//! quantum torus chart, the Moyal plane, and the Weyl algebra as a
//! filtered presentation.

use crate::defquant::{DeformAlgebra, DeformError, FilteredPresentation, HPoly, HSeries};
use crate::hopfact::{group_algebra, sweedler, HopfAction, HopfError};
use crate::{rat, Poly};

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// k[x, y, z] with xy = q yx, xz = q zx, zy = q yz for q = exp(hbar):
/// the running three-variable counterexample chart. Its induced bracket
/// is {x,y} = xy, {x,z} = xz, {z,y} = yz.
pub fn qchart_algebra(order: usize) -> Result<DeformAlgebra, DeformError> {
    let q = HSeries::exp_lambda(rat(1, 1), order);
    let qinv = HSeries::exp_lambda(rat(-1, 1), order);
    DeformAlgebra::quantum_poly(
        vars(&["x", "y", "z"]),
        vec![((0, 1), q.clone()), ((0, 2), q), ((1, 2), qinv)],
        order,
    )
}

/// The Moyal plane on one (x, y) pair.
pub fn moyal_plane(order: usize) -> Result<DeformAlgebra, DeformError> {
    DeformAlgebra::moyal(vars(&["x", "y"]), vec![(0, 1)], order)
}

/// The Weyl algebra y x - x y = 1 with deg x = 0, deg y = 1; its Rees
/// algebra reproduces the Moyal commutation relation.
pub fn weyl_filtered() -> FilteredPresentation {
    let vs = vars(&["x", "y"]);
    let xy = Poly::var(&vs, "x")
        .unwrap()
        .mul(&Poly::var(&vs, "y").unwrap());
    FilteredPresentation {
        vars: vs.clone(),
        degrees: vec![0, 1],
        relations: vec![((1, 0), xy.add(&Poly::one(&vs)))],
    }
}

/// Commutative polynomial algebra on the given variables, truncated at
/// the requested order (a quantum polynomial algebra with no relations).
pub fn commutative(names: &[&str], order: usize) -> Result<DeformAlgebra, DeformError> {
    DeformAlgebra::quantum_poly(vars(names), vec![], order)
}

/// Cayley table of the cyclic group of order n.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn lift(alg: &DeformAlgebra, p: Poly) -> HPoly {
    HPoly::from_poly(p.with_vars(alg.vars()).unwrap(), alg.order())
}

fn zero(alg: &DeformAlgebra) -> HPoly {
    HPoly::zero(alg.vars(), alg.order())
}

/// The Sweedler action on the three-variable algebra: g·x = x, g·y = y,
/// g·z = -z, a·x = a·y = 0, a·z = xy (and ga acting as the composite).
pub fn sweedler_action(order: usize) -> Result<HopfAction, HopfError> {
    let alg = qchart_algebra(order)?;
    sweedler_action_on(alg)
}

fn sweedler_action_on(alg: DeformAlgebra) -> Result<HopfAction, HopfError> {
    let vs = alg.vars().to_vec();
    let x = Poly::var(&vs, "x").unwrap();
    let y = Poly::var(&vs, "y").unwrap();
    let z = Poly::var(&vs, "z").unwrap();
    let xy = x.mul(&y);
    let gen_action = vec![
        vec![lift(&alg, x.clone()), lift(&alg, y.clone()), lift(&alg, z.clone())],
        vec![lift(&alg, x.clone()), lift(&alg, y.clone()), lift(&alg, z.neg())],
        vec![zero(&alg), zero(&alg), lift(&alg, xy.clone())],
        vec![zero(&alg), zero(&alg), lift(&alg, xy)],
    ];
    HopfAction::new(sweedler(), alg, gen_action)
}

/// The Sweedler action with a·z deliberately corrupted to x²; fails the
/// module-algebra relation checks.
pub fn sweedler_action_mutated(order: usize) -> Result<HopfAction, HopfError> {
    let alg = qchart_algebra(order)?;
    let vs = alg.vars().to_vec();
    let x = Poly::var(&vs, "x").unwrap();
    let y = Poly::var(&vs, "y").unwrap();
    let z = Poly::var(&vs, "z").unwrap();
    let x2 = x.pow(2);
    let gen_action = vec![
        vec![lift(&alg, x.clone()), lift(&alg, y.clone()), lift(&alg, z.clone())],
        vec![lift(&alg, x), lift(&alg, y), lift(&alg, z.neg())],
        vec![zero(&alg), zero(&alg), lift(&alg, x2.clone())],
        vec![zero(&alg), zero(&alg), lift(&alg, x2)],
    ];
    HopfAction::new(sweedler(), alg, gen_action)
}

/// The Sweedler action with a ↦ 0 and g acting as the sign automorphism
/// on z; factors through kZ/2.
pub fn sweedler_action_a_zero(order: usize) -> Result<HopfAction, HopfError> {
    let alg = qchart_algebra(order)?;
    let vs = alg.vars().to_vec();
    let x = Poly::var(&vs, "x").unwrap();
    let y = Poly::var(&vs, "y").unwrap();
    let z = Poly::var(&vs, "z").unwrap();
    let gen_action = vec![
        vec![lift(&alg, x.clone()), lift(&alg, y.clone()), lift(&alg, z.clone())],
        vec![lift(&alg, x), lift(&alg, y), lift(&alg, z.neg())],
        vec![zero(&alg), zero(&alg), zero(&alg)],
        vec![zero(&alg), zero(&alg), zero(&alg)],
    ];
    HopfAction::new(sweedler(), alg, gen_action)
}

/// kZ/2 acting on commutative k[x, y, z] with g the sign automorphism
/// of z.
pub fn z2_sign_action(order: usize) -> Result<HopfAction, HopfError> {
    let alg = commutative(&["x", "y", "z"], order)?;
    let vs = alg.vars().to_vec();
    let x = Poly::var(&vs, "x").unwrap();
    let y = Poly::var(&vs, "y").unwrap();
    let z = Poly::var(&vs, "z").unwrap();
    let gen_action = vec![
        vec![lift(&alg, x.clone()), lift(&alg, y.clone()), lift(&alg, z.clone())],
        vec![lift(&alg, x), lift(&alg, y), lift(&alg, z.neg())],
    ];
    HopfAction::new(group_algebra(&cyclic_table(2))?, alg, gen_action)
}

/// kZ/3 acting on commutative k[x, y, z] by cyclic permutation of the
/// variables.
pub fn z3_cycle_action(order: usize) -> Result<HopfAction, HopfError> {
    let alg = commutative(&["x", "y", "z"], order)?;
    let vs = alg.vars().to_vec();
    let x = Poly::var(&vs, "x").unwrap();
    let y = Poly::var(&vs, "y").unwrap();
    let z = Poly::var(&vs, "z").unwrap();
    let gen_action = vec![
        vec![lift(&alg, x.clone()), lift(&alg, y.clone()), lift(&alg, z.clone())],
        vec![lift(&alg, y.clone()), lift(&alg, z.clone()), lift(&alg, x.clone())],
        vec![lift(&alg, z), lift(&alg, x), lift(&alg, y)],
    ];
    HopfAction::new(group_algebra(&cyclic_table(3))?, alg, gen_action)
}

/// The trivial action h·f = ε(h)f of the cyclic group algebra kZ/n on
/// commutative k[x, y].
pub fn trivial_group_action(n: usize, order: usize) -> Result<HopfAction, HopfError> {
    let alg = commutative(&["x", "y"], order)?;
    let hopf = group_algebra(&cyclic_table(n))?;
    let gen_action = (0..hopf.dim())
        .map(|_| (0..2).map(|v| alg.gen_lift(v)).collect())
        .collect();
    HopfAction::new(hopf, alg, gen_action)
}
