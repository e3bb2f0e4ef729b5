//! Command-line interface: loads presentation files, dispatches to the
//! core engines, and emits either human-readable text or a JSON report.
//!
//! Exit codes: 0 = pass, 1 = property violated, 2 = input error,
//! 3 = inconclusive.

use super::model::{build_env, Env};
use super::parse::{parse_document, parse_expr_text, Expr};
use super::report::{Report, Status};
use crate::defquant::{
    dehomogenize, ore_witness, rees_of_filtered, DeformAlgebra, FilteredPresentation, HPoly,
};
use crate::galois::{
    defined_over_k, eq3_check, galois_basis, plucker_center_check, plucker_ratios, poiscom_check,
    GaloisError,
};
use crate::hopfact::{
    factors_through_group, hopf_verify, inner_faithful, invariants, is_nilpotent_ideal,
    module_algebra_check, radical, GroupVerdict, HopfAction, HopfAlgebra,
};
use crate::poisson::{induced_bracket, PoissonStructure};
use crate::{corpus, rat, Poly, Rat, RatFn};
use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "deformata",
    version,
    about = "Exact engine for finite-order deformation quantizations and Hopf algebra actions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Emit the machine-readable JSON report instead of text
    #[arg(long)]
    json: bool,
    /// RNG seed for randomized suites (DEFORMATA_SEED also honored; the
    /// flag wins)
    #[arg(long)]
    seed: Option<u64>,
    /// Override the truncation order of every algebra block
    #[arg(long, value_name = "N")]
    order: Option<usize>,
    /// Degree bound for searches and scans
    #[arg(long, value_name = "D")]
    max_deg: Option<u32>,
}

#[derive(Args, Clone, Default)]
struct AlgInput {
    /// Presentation file containing an algebra block ('-' for stdin)
    #[arg(long)]
    alg: String,
}

#[derive(Args, Clone, Default)]
struct PoissonInput {
    /// Presentation file containing a poisson block ('-' for stdin)
    #[arg(long)]
    poisson: Option<String>,
    /// Alternatively, an algebra file; its induced bracket is used
    #[arg(long)]
    alg: Option<String>,
}

#[derive(Args, Clone, Default)]
struct ActionInput {
    /// Presentation file containing the algebra block
    #[arg(long)]
    alg: String,
    /// Hopf presentation file, or the name of a preset (e.g. "sweedler")
    #[arg(long)]
    hopf: Option<String>,
    /// Presentation file containing the action block
    #[arg(long)]
    action: String,
}

#[derive(Subcommand, Clone)]
enum Cmd {
    /// Induced Poisson bracket and depth of an algebra
    Bracket {
        #[command(flatten)]
        input: AlgInput,
        #[command(flatten)]
        common: Common,
    },
    /// Verify the Jacobi identity on generators and random triples
    Jacobi {
        #[command(flatten)]
        input: PoissonInput,
        #[command(flatten)]
        common: Common,
    },
    /// Bounded-degree polynomial Poisson center
    Center {
        #[command(flatten)]
        input: PoissonInput,
        #[command(flatten)]
        common: Common,
    },
    /// Test a rational element for Poisson centrality
    Central {
        #[command(flatten)]
        input: PoissonInput,
        /// Rational-function element, e.g. "x*y/z"
        #[arg(long)]
        elem: String,
        #[command(flatten)]
        common: Common,
    },
    /// Star product of two elements
    Star {
        #[command(flatten)]
        input: AlgInput,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        common: Common,
    },
    /// Left Ore witness for a pair (s, a)
    Ore {
        #[command(flatten)]
        input: AlgInput,
        #[arg(long)]
        s: String,
        #[arg(long)]
        a: String,
        #[command(flatten)]
        common: Common,
    },
    /// Rees algebra of a filtered presentation, with round trip
    Rees {
        /// Presentation file containing a filtered block
        #[arg(long)]
        alg: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify the Hopf algebra axioms
    CheckHopf {
        /// Hopf presentation file or preset name
        #[arg(long)]
        hopf: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify the module-algebra axioms of an action
    CheckAction {
        #[command(flatten)]
        input: ActionInput,
        #[command(flatten)]
        common: Common,
    },
    /// Bases of invariants, mod hbar and at full order
    Invariants {
        #[command(flatten)]
        input: ActionInput,
        #[command(flatten)]
        common: Common,
    },
    /// Jacobson radical of a Hopf algebra
    Radical {
        /// Hopf presentation file or preset name
        #[arg(long)]
        hopf: String,
        #[command(flatten)]
        common: Common,
    },
    /// Does the action factor through a group algebra?
    Factors {
        #[command(flatten)]
        input: ActionInput,
        #[command(flatten)]
        common: Common,
    },
    /// Is the action inner-faithful?
    InnerFaithful {
        #[command(flatten)]
        input: ActionInput,
        #[command(flatten)]
        common: Common,
    },
    /// Coaction matrix, Plücker chart, and the defined-over-k test
    Plucker {
        #[command(flatten)]
        input: ActionInput,
        #[command(flatten)]
        common: Common,
    },
    /// Poisson-commutation lemma for a liftable invariant
    Poiscom {
        #[command(flatten)]
        input: ActionInput,
        /// The invariant a0, a polynomial
        #[arg(long)]
        invariant: String,
        #[command(flatten)]
        common: Common,
    },
    /// Vanishing of {a0, p_IJ} by both computation routes
    Eq3 {
        #[command(flatten)]
        input: ActionInput,
        /// The invariant a0, a polynomial
        #[arg(long)]
        invariant: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the full built-in verification pipeline
    VerifyPaper {
        #[command(flatten)]
        common: Common,
    },
}

struct CliError {
    code: i32,
    msg: String,
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            msg: msg.into(),
        }
    }

    fn inconclusive(msg: impl Into<String>) -> Self {
        CliError {
            code: 3,
            msg: msg.into(),
        }
    }
}

impl From<GaloisError> for CliError {
    fn from(e: GaloisError) -> Self {
        match e {
            GaloisError::RankUnstable(_) | GaloisError::RankDeficient => {
                CliError::inconclusive(e.to_string())
            }
            other => CliError::input(other.to_string()),
        }
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let (common, result) = dispatch(&cli.cmd);
    match result {
        Ok(report) => {
            if common.json {
                println!("{}", report.to_json());
            } else {
                println!("command: {}", report.command);
                println!("status: {}", status_word(report.status));
                for f in &report.findings {
                    println!("  [{}] {}", f.kind, f.detail);
                }
            }
            report.status.exit_code()
        }
        Err(e) => {
            eprintln!("error: {}", e.msg);
            e.code
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inconclusive => "inconclusive",
        Status::Error => "error",
    }
}

fn dispatch(cmd: &Cmd) -> (Common, Result<Report, CliError>) {
    match cmd {
        Cmd::Bracket { input, common } => (common.clone(), cmd_bracket(input, common)),
        Cmd::Jacobi { input, common } => (common.clone(), cmd_jacobi(input, common)),
        Cmd::Center { input, common } => (common.clone(), cmd_center(input, common)),
        Cmd::Central {
            input,
            elem,
            common,
        } => (common.clone(), cmd_central(input, elem, common)),
        Cmd::Star {
            input,
            a,
            b,
            common,
        } => (common.clone(), cmd_star(input, a, b, common)),
        Cmd::Ore {
            input,
            s,
            a,
            common,
        } => (common.clone(), cmd_ore(input, s, a, common)),
        Cmd::Rees { alg, common } => (common.clone(), cmd_rees(alg, common)),
        Cmd::CheckHopf { hopf, common } => (common.clone(), cmd_check_hopf(hopf, common)),
        Cmd::CheckAction { input, common } => (common.clone(), cmd_check_action(input, common)),
        Cmd::Invariants { input, common } => (common.clone(), cmd_invariants(input, common)),
        Cmd::Radical { hopf, common } => (common.clone(), cmd_radical(hopf, common)),
        Cmd::Factors { input, common } => (common.clone(), cmd_factors(input, common)),
        Cmd::InnerFaithful { input, common } => {
            (common.clone(), cmd_inner_faithful(input, common))
        }
        Cmd::Plucker { input, common } => (common.clone(), cmd_plucker(input, common)),
        Cmd::Poiscom {
            input,
            invariant,
            common,
        } => (common.clone(), cmd_poiscom(input, invariant, common)),
        Cmd::Eq3 {
            input,
            invariant,
            common,
        } => (common.clone(), cmd_eq3(input, invariant, common)),
        Cmd::VerifyPaper { common } => (common.clone(), cmd_verify_paper(common)),
    }
}

// ---------------------------------------------------------------------
// Input loading
// ---------------------------------------------------------------------

fn read_source(path: &str) -> Result<(String, String), CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("stdin: {}", e)))?;
        Ok(("<stdin>".to_string(), text))
    } else {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("{}: {}", path, e)))?;
        Ok((path.to_string(), text))
    }
}

/// Load presentation sources into one environment. A `--hopf` value
/// that is not an existing file but names a preset is synthesized as a
/// one-block document.
fn load(paths: &[&str], hopf: Option<&str>, order: Option<usize>) -> Result<(Env, Vec<(String, String)>), CliError> {
    let mut sources = Vec::new();
    for p in paths {
        sources.push(read_source(p)?);
    }
    if let Some(h) = hopf {
        if h != "-" && !std::path::Path::new(h).exists() && h.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            sources.push((
                format!("<preset:{}>", h),
                format!("hopf {} {{ preset = \"{}\" }}\n", h, h),
            ));
        } else {
            sources.push(read_source(h)?);
        }
    }
    let mut docs = Vec::new();
    for (path, text) in &sources {
        let doc = parse_document(text)
            .map_err(|e| CliError::input(format!("{}: {}", path, e)))?;
        docs.push(doc);
    }
    let env = build_env(&docs, order).map_err(|e| CliError::input(e.to_string()))?;
    Ok((env, sources))
}

fn sole<'a, T>(
    map: &'a std::collections::BTreeMap<String, T>,
    what: &str,
) -> Result<(&'a String, &'a T), CliError> {
    let mut it = map.iter();
    match (it.next(), it.next()) {
        (Some(kv), None) => Ok(kv),
        (None, _) => Err(CliError::input(format!("no {} block found", what))),
        _ => Err(CliError::input(format!(
            "more than one {} block found; provide exactly one",
            what
        ))),
    }
}

fn load_alg(input: &AlgInput, common: &Common) -> Result<(DeformAlgebra, Vec<(String, String)>), CliError> {
    let (env, raw) = load(&[input.alg.as_str()], None, common.order)?;
    let (_, alg) = sole(&env.algebras, "algebra")?;
    Ok((alg.clone(), raw))
}

/// A Poisson structure from either a poisson block or an algebra's
/// induced bracket; also returns the depth when induced.
fn load_poisson(
    input: &PoissonInput,
    common: &Common,
) -> Result<(PoissonStructure, Option<usize>, Vec<(String, String)>), CliError> {
    match (&input.poisson, &input.alg) {
        (Some(p), None) => {
            let (env, raw) = load(&[p.as_str()], None, common.order)?;
            let (_, ps) = sole(&env.poissons, "poisson")?;
            Ok((ps.clone(), None, raw))
        }
        (None, Some(a)) => {
            let (env, raw) = load(&[a.as_str()], None, common.order)?;
            let (_, alg) = sole(&env.algebras, "algebra")?;
            let (ps, depth) =
                induced_bracket(alg).map_err(|e| CliError::input(e.to_string()))?;
            Ok((ps, Some(depth), raw))
        }
        _ => Err(CliError::input(
            "provide exactly one of --poisson or --alg",
        )),
    }
}

fn load_action(
    input: &ActionInput,
    common: &Common,
) -> Result<(HopfAction, Vec<(String, String)>), CliError> {
    let (env, raw) = load(
        &[input.alg.as_str(), input.action.as_str()],
        input.hopf.as_deref(),
        common.order,
    )?;
    let (_, ad) = sole(&env.actions, "action")?;
    Ok((ad.action.clone(), raw))
}

fn load_hopf(hopf: &str, common: &Common) -> Result<(HopfAlgebra, Vec<(String, String)>), CliError> {
    let (env, raw) = load(&[], Some(hopf), common.order)?;
    let (_, hd) = sole(&env.hopfs, "hopf")?;
    Ok((hd.hopf.clone(), raw))
}

fn resolve_seed(common: &Common) -> u64 {
    common
        .seed
        .or_else(|| {
            std::env::var("DEFORMATA_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(1)
}

fn common_flags(common: &Common, extra: &[(&'static str, String)]) -> Vec<(&'static str, String)> {
    let mut flags = vec![("seed", resolve_seed(common).to_string())];
    if let Some(n) = common.order {
        flags.push(("order", n.to_string()));
    }
    if let Some(d) = common.max_deg {
        flags.push(("max-deg", d.to_string()));
    }
    flags.extend_from_slice(extra);
    flags
}

fn parse_elem(text: &str) -> Result<Expr, CliError> {
    parse_expr_text(text).map_err(|e| CliError::input(format!("in expression: {}", e)))
}

// ---------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------

fn cmd_bracket(input: &AlgInput, common: &Common) -> Result<Report, CliError> {
    let (alg, raw) = load_alg(input, common)?;
    let (ps, depth) = induced_bracket(&alg).map_err(|e| CliError::input(e.to_string()))?;
    let mut rep = Report::new("bracket", resolve_seed(common));
    rep.bounds.order = Some(alg.order());
    rep.set_digest(&common_flags(common, &[]), &raw);
    rep.finding("depth", depth.to_string());
    let vars = ps.vars();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            rep.finding(
                "bracket",
                format!("{{{}, {}}} = {}", vars[i], vars[j], ps.bracket_gen(i, j)),
            );
        }
    }
    Ok(rep)
}

fn jacobi_report(ps: &PoissonStructure, rep: &mut Report, seed: u64) {
    if !ps.jacobi_holds() {
        let vars = ps.vars();
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                for k in j + 1..vars.len() {
                    let f = Poly::var_idx(vars, i);
                    let g = Poly::var_idx(vars, j);
                    let h = Poly::var_idx(vars, k);
                    let d = ps.jacobi_defect(&f, &g, &h).unwrap();
                    if !d.is_zero() {
                        rep.fail(
                            "jacobi-defect",
                            format!(
                                "({}, {}, {}): defect {}",
                                vars[i], vars[j], vars[k], d
                            ),
                        );
                    }
                }
            }
        }
        return;
    }
    rep.finding("generators", "Jacobi identity holds on all generator triples");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = ps.vars().to_vec();
    for t in 0..10 {
        let f = HPoly::random(&vars, 0, &mut rng, 3, false).mod_h();
        let g = HPoly::random(&vars, 0, &mut rng, 3, false).mod_h();
        let h = HPoly::random(&vars, 0, &mut rng, 3, false).mod_h();
        let d = ps.jacobi_defect(&f, &g, &h).unwrap();
        if !d.is_zero() {
            rep.fail(
                "jacobi-defect",
                format!("trial {}: f = {}, g = {}, h = {}: defect {}", t, f, g, h, d),
            );
        }
    }
    if rep.status == Status::Pass {
        rep.finding("random", "Jacobi identity holds on 10 random triples");
    }
}

fn cmd_jacobi(input: &PoissonInput, common: &Common) -> Result<Report, CliError> {
    let (ps, depth, raw) = load_poisson(input, common)?;
    let mut rep = Report::new("jacobi", resolve_seed(common));
    rep.set_digest(&common_flags(common, &[]), &raw);
    if let Some(m) = depth {
        rep.finding("depth", m.to_string());
    }
    jacobi_report(&ps, &mut rep, resolve_seed(common));
    Ok(rep)
}

fn cmd_center(input: &PoissonInput, common: &Common) -> Result<Report, CliError> {
    let (ps, _, raw) = load_poisson(input, common)?;
    let d = common.max_deg.unwrap_or(4);
    let mut rep = Report::new("center", resolve_seed(common));
    rep.bounds.max_deg = Some(d);
    rep.set_digest(&common_flags(common, &[]), &raw);
    let basis = ps.polynomial_center(d);
    for b in &basis {
        rep.finding("center-element", b.to_string());
    }
    if basis.iter().all(|b| b.is_constant()) {
        rep.finding(
            "center-trivial",
            format!("polynomial center is trivial up to degree {}", d),
        );
    }
    Ok(rep)
}

fn cmd_central(input: &PoissonInput, elem: &str, common: &Common) -> Result<Report, CliError> {
    let (ps, _, raw) = load_poisson(input, common)?;
    let expr = parse_elem(elem)?;
    let f = expr
        .eval_ratfn(ps.vars())
        .map_err(|e| CliError::input(e.to_string()))?;
    let mut rep = Report::new("central", resolve_seed(common));
    rep.set_digest(&common_flags(common, &[("elem", elem.to_string())]), &raw);
    let central = ps
        .is_central_rat(&f)
        .map_err(|e| CliError::input(e.to_string()))?;
    if central {
        rep.finding("central", format!("{} is Poisson-central", f));
    } else {
        let vars = ps.vars().to_vec();
        for (i, v) in vars.iter().enumerate() {
            let g = RatFn::from_poly(Poly::var_idx(&vars, i));
            let b = ps.bracket_rat(&f, &g).unwrap();
            if !b.is_zero() {
                rep.fail("not-central", format!("{{{}, {}}} = {}", f, v, b));
                break;
            }
        }
    }
    Ok(rep)
}

fn cmd_star(input: &AlgInput, a: &str, b: &str, common: &Common) -> Result<Report, CliError> {
    let (alg, raw) = load_alg(input, common)?;
    let pa = parse_elem(a)?
        .eval_hpoly(alg.vars(), alg.order())
        .map_err(|e| CliError::input(e.to_string()))?;
    let pb = parse_elem(b)?
        .eval_hpoly(alg.vars(), alg.order())
        .map_err(|e| CliError::input(e.to_string()))?;
    let mut rep = Report::new("star", resolve_seed(common));
    rep.bounds.order = Some(alg.order());
    rep.set_digest(
        &common_flags(common, &[("a", a.to_string()), ("b", b.to_string())]),
        &raw,
    );
    let prod = alg.star(&pa, &pb).map_err(|e| CliError::input(e.to_string()))?;
    rep.finding("product", prod.to_string());
    let comm = alg
        .commutator(&pa, &pb)
        .map_err(|e| CliError::input(e.to_string()))?;
    rep.finding("commutator", comm.to_string());
    Ok(rep)
}

fn cmd_ore(input: &AlgInput, s: &str, a: &str, common: &Common) -> Result<Report, CliError> {
    let (alg, raw) = load_alg(input, common)?;
    let ps = parse_elem(s)?
        .eval_hpoly(alg.vars(), alg.order())
        .map_err(|e| CliError::input(e.to_string()))?;
    let pa = parse_elem(a)?
        .eval_hpoly(alg.vars(), alg.order())
        .map_err(|e| CliError::input(e.to_string()))?;
    let mut rep = Report::new("ore", resolve_seed(common));
    rep.bounds.order = Some(alg.order());
    rep.set_digest(
        &common_flags(common, &[("s", s.to_string()), ("a", a.to_string())]),
        &raw,
    );
    let w = ore_witness(&alg, &ps, &pa).map_err(|e| CliError::input(e.to_string()))?;
    rep.finding("s-left", w.s_left.to_string());
    rep.finding("a-left", w.a_left.to_string());
    if w.certified {
        rep.finding("certified", "s_left * a = a_left * s holds exactly");
    } else {
        rep.fail("uncertified", "the Ore identity failed to verify");
    }
    Ok(rep)
}

fn cmd_rees(alg_path: &str, common: &Common) -> Result<Report, CliError> {
    let (env, raw) = load(&[alg_path], None, common.order)?;
    let (_, fp) = sole(&env.filtered, "filtered")?;
    let order = common.order.unwrap_or(2);
    let mut rep = Report::new("rees", resolve_seed(common));
    rep.bounds.order = Some(order);
    rep.set_digest(&common_flags(common, &[]), &raw);
    let rees = rees_of_filtered(fp, order).map_err(|e| CliError::input(e.to_string()))?;
    for ((j, i), rhs) in rees.rules() {
        rep.finding(
            "rule",
            format!("{} * {} -> {}", rees.vars()[*j], rees.vars()[*i], rhs),
        );
    }
    let back = dehomogenize(&rees).map_err(|e| CliError::input(e.to_string()))?;
    if normalized(&back) == normalized(fp) {
        rep.finding("round-trip", "dehomogenizing the Rees algebra restores the input");
    } else {
        rep.fail(
            "round-trip",
            format!("dehomogenization produced a different presentation: {:?}", back),
        );
    }
    Ok(rep)
}

fn normalized(fp: &FilteredPresentation) -> FilteredPresentation {
    let mut fp = fp.clone();
    fp.relations.sort_by_key(|(k, _)| *k);
    fp
}

fn cmd_check_hopf(hopf: &str, common: &Common) -> Result<Report, CliError> {
    let (h, raw) = load_hopf(hopf, common)?;
    let mut rep = Report::new("check-hopf", resolve_seed(common));
    rep.set_digest(&common_flags(common, &[]), &raw);
    let axioms = hopf_verify(&h);
    if axioms.passed() {
        rep.finding("axioms", format!("all Hopf axioms hold (dim {})", h.dim()));
    } else {
        for f in &axioms.failures {
            rep.fail("axiom", f.clone());
        }
    }
    Ok(rep)
}

fn cmd_check_action(input: &ActionInput, common: &Common) -> Result<Report, CliError> {
    let (action, raw) = load_action(input, common)?;
    let seed = resolve_seed(common);
    let d = common.max_deg.unwrap_or(4);
    let mut rep = Report::new("check-action", seed);
    rep.bounds.order = Some(action.alg().order());
    rep.bounds.max_deg = Some(d);
    rep.set_digest(&common_flags(common, &[]), &raw);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let result = module_algebra_check(&action, 8, d, &mut rng);
    if result.passed() {
        rep.finding("module-algebra", "all module-algebra checks hold");
    } else {
        for f in &result.failures {
            rep.fail("module-algebra", f.clone());
        }
    }
    Ok(rep)
}

fn cmd_invariants(input: &ActionInput, common: &Common) -> Result<Report, CliError> {
    let (action, raw) = load_action(input, common)?;
    let d = common.max_deg.unwrap_or(4);
    let mut rep = Report::new("invariants", resolve_seed(common));
    rep.bounds.order = Some(action.alg().order());
    rep.bounds.max_deg = Some(d);
    rep.set_digest(&common_flags(common, &[]), &raw);
    let inv = invariants(&action, d);
    for p in &inv.mod_h {
        rep.finding("invariant-mod-h", p.to_string());
    }
    for p in &inv.full_order {
        rep.finding("invariant-full-order", p.to_string());
    }
    Ok(rep)
}

fn cmd_radical(hopf: &str, common: &Common) -> Result<Report, CliError> {
    let (h, raw) = load_hopf(hopf, common)?;
    let mut rep = Report::new("radical", resolve_seed(common));
    rep.set_digest(&common_flags(common, &[]), &raw);
    let rad = radical(&h);
    rep.finding("dimension", rad.len().to_string());
    for v in &rad {
        rep.finding("radical-element", h.format_elem(v));
    }
    if is_nilpotent_ideal(&h, &rad) {
        rep.finding("nilpotent", "the radical is a nilpotent ideal");
    } else {
        rep.fail("nilpotent", "computed radical is not nilpotent");
    }
    Ok(rep)
}

fn cmd_factors(input: &ActionInput, common: &Common) -> Result<Report, CliError> {
    let (action, raw) = load_action(input, common)?;
    let d = common.max_deg.unwrap_or(4);
    let mut rep = Report::new("factors", resolve_seed(common));
    rep.bounds.order = Some(action.alg().order());
    rep.bounds.max_deg = Some(d);
    rep.set_digest(&common_flags(common, &[]), &raw);
    for (mode, label) in [(true, "mod-h"), (false, "full-order")] {
        let verdict = factors_through_group(&action, d, mode)
            .map_err(|e| CliError::input(e.to_string()))?;
        match verdict {
            GroupVerdict::Group { cayley, .. } => rep.finding(
                label,
                format!("factors through a group algebra of order {}", cayley.len()),
            ),
            GroupVerdict::NotGroup => {
                rep.finding(label, "does not factor through a group algebra")
            }
            GroupVerdict::Inconclusive(why) => {
                return Err(CliError::inconclusive(why));
            }
        }
    }
    Ok(rep)
}

fn cmd_inner_faithful(input: &ActionInput, common: &Common) -> Result<Report, CliError> {
    let (action, raw) = load_action(input, common)?;
    let d = common.max_deg.unwrap_or(4);
    let mut rep = Report::new("inner-faithful", resolve_seed(common));
    rep.bounds.order = Some(action.alg().order());
    rep.bounds.max_deg = Some(d);
    rep.set_digest(&common_flags(common, &[]), &raw);
    let h = action.hopf();
    for (mode, label) in [(true, "mod-h"), (false, "full-order")] {
        let (faithful, ideal) = inner_faithful(&action, d, mode);
        if faithful {
            rep.finding(label, "inner-faithful: no nonzero Hopf ideal annihilates");
        } else {
            rep.fail(
                label,
                format!(
                    "not inner-faithful; annihilating Hopf ideal spanned by: {}",
                    ideal
                        .iter()
                        .map(|v| h.format_elem(v))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            );
        }
    }
    Ok(rep)
}

fn cmd_plucker(input: &ActionInput, common: &Common) -> Result<Report, CliError> {
    let (action, raw) = load_action(input, common)?;
    let d = common.max_deg.unwrap_or(4);
    let mut rep = Report::new("plucker", resolve_seed(common));
    rep.bounds.order = Some(action.alg().order());
    rep.bounds.max_deg = Some(d);
    rep.set_digest(&common_flags(common, &[]), &raw);
    let (basis, b, rank) = galois_basis(&action, d)?;
    rep.finding("rank", rank.to_string());
    for p in &basis {
        rep.finding("basis-element", p.to_string());
    }
    let chart = plucker_ratios(&b)?;
    let labels = action.hopf().labels();
    rep.finding(
        "chart",
        format!(
            "I = {{{}}}, delta_I = {}",
            chart
                .i_set
                .iter()
                .map(|&c| labels[c].clone())
                .collect::<Vec<_>>()
                .join(", "),
            chart.delta_i
        ),
    );
    for (j, p) in &chart.ratios {
        rep.finding(
            "ratio",
            format!(
                "p_{{{}}} = {}",
                j.iter()
                    .map(|&c| labels[c].clone())
                    .collect::<Vec<_>>()
                    .join(", "),
                p
            ),
        );
    }
    let (over_k, witnesses) = defined_over_k(&chart);
    if over_k {
        rep.finding("defined-over-k", "all chart ratios are constant");
    } else {
        for (j, p) in &witnesses {
            rep.finding(
                "defined-over-k",
                format!("non-constant ratio at J = {:?}: {}", j, p),
            );
        }
        let (ps, _) =
            induced_bracket(action.alg()).map_err(|e| CliError::input(e.to_string()))?;
        let central = plucker_center_check(&chart, &ps)?;
        if central.passed() {
            rep.finding(
                "center",
                "every non-constant ratio is Poisson-central in Q(A0)",
            );
        } else {
            for f in &central.failures {
                rep.fail("center", f.clone());
            }
        }
    }
    Ok(rep)
}

fn cmd_poiscom(input: &ActionInput, invariant: &str, common: &Common) -> Result<Report, CliError> {
    let (action, raw) = load_action(input, common)?;
    let a0 = parse_elem(invariant)?
        .eval_poly(action.alg().vars())
        .map_err(|e| CliError::input(e.to_string()))?;
    let (ps, _) = induced_bracket(action.alg()).map_err(|e| CliError::input(e.to_string()))?;
    let probes: Vec<Poly> = (0..action.alg().vars().len())
        .map(|i| Poly::var_idx(action.alg().vars(), i))
        .collect();
    let mut rep = Report::new("poiscom", resolve_seed(common));
    rep.bounds.order = Some(action.alg().order());
    rep.set_digest(
        &common_flags(common, &[("invariant", invariant.to_string())]),
        &raw,
    );
    let result = poiscom_check(&action, &ps, &a0, &probes)?;
    if result.passed() {
        rep.finding(
            "poiscom",
            format!("rho_i({{{}, f}}) = {{{}, rho_i(f)}} for all i and generator probes", a0, a0),
        );
    } else {
        for f in &result.failures {
            rep.fail("poiscom", f.clone());
        }
    }
    Ok(rep)
}

fn cmd_eq3(input: &ActionInput, invariant: &str, common: &Common) -> Result<Report, CliError> {
    let (action, raw) = load_action(input, common)?;
    let a0 = parse_elem(invariant)?
        .eval_poly(action.alg().vars())
        .map_err(|e| CliError::input(e.to_string()))?;
    let (ps, _) = induced_bracket(action.alg()).map_err(|e| CliError::input(e.to_string()))?;
    let d = common.max_deg.unwrap_or(4);
    let mut rep = Report::new("eq3", resolve_seed(common));
    rep.bounds.order = Some(action.alg().order());
    rep.bounds.max_deg = Some(d);
    rep.set_digest(
        &common_flags(common, &[("invariant", invariant.to_string())]),
        &raw,
    );
    let result = eq3_check(&action, &ps, &a0, d)?;
    if result.passed() {
        rep.finding(
            "eq3",
            format!("{{{}, p_IJ}} = 0 for every chart ratio, by both routes", a0),
        );
    } else {
        for f in &result.failures {
            rep.fail("eq3", f.clone());
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------
// verify-paper: the built-in end-to-end pipeline
// ---------------------------------------------------------------------

fn cmd_verify_paper(common: &Common) -> Result<Report, CliError> {
    let seed = resolve_seed(common);
    let mut rep = Report::new("verify-paper", seed);
    rep.set_digest(&common_flags(common, &[]), &[]);
    let check = |rep: &mut Report, name: &str, ok: bool, detail: String| {
        if ok {
            rep.finding(name, detail);
        } else {
            rep.fail(name, detail);
        }
    };

    // Moyal plane: depth 1, {y, x} = 1
    {
        let alg = corpus::moyal_plane(2).map_err(|e| CliError::input(e.to_string()))?;
        let (ps, depth) = induced_bracket(&alg).map_err(|e| CliError::input(e.to_string()))?;
        let vars = ps.vars().to_vec();
        let yx = ps
            .bracket_poly(&Poly::var_idx(&vars, 1), &Poly::var_idx(&vars, 0))
            .unwrap();
        let ok = depth == 1 && yx == Poly::one(&vars);
        check(&mut rep, "moyal", ok, format!("depth {}, {{y, x}} = {}", depth, yx));
    }

    // Three-variable chart: brackets, bounded center, central element
    let qchart = corpus::qchart_algebra(2).map_err(|e| CliError::input(e.to_string()))?;
    let (ps3, _) = induced_bracket(&qchart).map_err(|e| CliError::input(e.to_string()))?;
    {
        let vars = ps3.vars().to_vec();
        let x = Poly::var_idx(&vars, 0);
        let y = Poly::var_idx(&vars, 1);
        let z = Poly::var_idx(&vars, 2);
        let ok = ps3.bracket_gen(0, 1) == x.mul(&y)
            && ps3.bracket_gen(0, 2) == x.mul(&z)
            && ps3.bracket_gen(2, 1) == y.mul(&z);
        check(
            &mut rep,
            "brackets",
            ok,
            "{x,y} = xy, {x,z} = xz, {z,y} = yz".to_string(),
        );
        let d = common.max_deg.unwrap_or(5);
        let basis = ps3.polynomial_center(d);
        let trivial = basis.iter().all(|b| b.is_constant());
        check(
            &mut rep,
            "center",
            trivial,
            format!("polynomial center trivial up to degree {}", d),
        );
        let xyz = RatFn::new(x.mul(&y), z.clone()).unwrap();
        let central = ps3.is_central_rat(&xyz).unwrap();
        check(&mut rep, "central", central, "x*y/z is Poisson-central".to_string());
        let jac = ps3.jacobi_holds();
        check(&mut rep, "jacobi", jac, "Jacobi identity holds".to_string());
    }

    // The Sweedler action: module algebra, factorization, faithfulness
    let action = corpus::sweedler_action(2).map_err(|e| CliError::input(e.to_string()))?;
    {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let result = module_algebra_check(&action, 5, 4, &mut rng);
        check(
            &mut rep,
            "check-action",
            result.passed(),
            "the Sweedler action is a module-algebra action".to_string(),
        );
        for (mode, label) in [(true, "factors-mod-h"), (false, "factors-full-order")] {
            let verdict = factors_through_group(&action, 4, mode)
                .map_err(|e| CliError::input(e.to_string()))?;
            check(
                &mut rep,
                label,
                verdict == GroupVerdict::NotGroup,
                "does not factor through a group algebra".to_string(),
            );
        }
        let (faithful, _) = inner_faithful(&action, 4, false);
        check(&mut rep, "inner-faithful", faithful, "the action is inner-faithful".to_string());
    }

    // Galois dichotomy: group actions are defined over k, Sweedler not
    for (name, act) in [
        ("z2", corpus::z2_sign_action(2).map_err(|e| CliError::input(e.to_string()))?),
        ("z3", corpus::z3_cycle_action(2).map_err(|e| CliError::input(e.to_string()))?),
    ] {
        let (_, b, _) = galois_basis(&act, 4)?;
        let chart = plucker_ratios(&b)?;
        let (over_k, _) = defined_over_k(&chart);
        check(
            &mut rep,
            "defined-over-k",
            over_k,
            format!("{} chart is defined over k", name),
        );
    }
    {
        let (_, b, rank) = galois_basis(&action, 4)?;
        let chart = plucker_ratios(&b)?;
        let (over_k, witnesses) = defined_over_k(&chart);
        let vars = qchart.vars();
        let neg2z = RatFn::new(
            Poly::var_idx(vars, 2).scale(&rat(-2, 1)),
            Poly::var_idx(vars, 0).mul(&Poly::var_idx(vars, 1)),
        )
        .unwrap();
        let has_ratio = chart.ratios.iter().any(|(_, p)| *p == neg2z);
        check(
            &mut rep,
            "sweedler-chart",
            rank == 2 && !over_k && has_ratio && !witnesses.is_empty(),
            format!("r = {}, non-constant ratio -2z/(xy) present", rank),
        );
        let central = plucker_center_check(&chart, &ps3)?;
        check(
            &mut rep,
            "plucker-center",
            central.passed(),
            "non-constant chart ratios are Poisson-central".to_string(),
        );
    }

    // Poisson commutation and Eq. (3)
    {
        let vars = qchart.vars();
        let probes: Vec<Poly> = (0..vars.len()).map(|i| Poly::var_idx(vars, i)).collect();
        let x = Poly::var_idx(vars, 0);
        let pc = poiscom_check(&action, &ps3, &x, &probes)?;
        check(&mut rep, "poiscom", pc.passed(), "rho_i({x, f}) = {x, rho_i(f)}".to_string());
        for a0 in [Poly::var_idx(vars, 0), Poly::var_idx(vars, 1)] {
            let e3 = eq3_check(&action, &ps3, &a0, 4)?;
            check(
                &mut rep,
                "eq3",
                e3.passed(),
                format!("{{{}, p_IJ}} = 0 by both routes", a0),
            );
        }
    }

    // Depth-2 deformation q = 1 + hbar^2
    {
        let vs: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let q = crate::defquant::HSeries::from_rats(
            3,
            vec![rat(1, 1), Rat::zero(), rat(1, 1), Rat::zero()],
        );
        let alg = DeformAlgebra::quantum_poly(vs.clone(), vec![((0, 1), q)], 3)
            .map_err(|e| CliError::input(e.to_string()))?;
        let (ps, depth) = induced_bracket(&alg).map_err(|e| CliError::input(e.to_string()))?;
        let xy = Poly::var_idx(&vs, 0).mul(&Poly::var_idx(&vs, 1));
        check(
            &mut rep,
            "depth-2",
            depth == 2 && ps.bracket_gen(0, 1) == xy,
            format!("depth {}, {{x, y}} = {}", depth, ps.bracket_gen(0, 1)),
        );
    }

    // Rees round trip on the Weyl algebra
    {
        let fp = corpus::weyl_filtered();
        let rees = rees_of_filtered(&fp, 2).map_err(|e| CliError::input(e.to_string()))?;
        let y = rees.gen_lift(1);
        let x = rees.gen_lift(0);
        let comm = rees.commutator(&y, &x).map_err(|e| CliError::input(e.to_string()))?;
        let hbar = HPoly::one(rees.vars(), 2).shift(1);
        let back = dehomogenize(&rees).map_err(|e| CliError::input(e.to_string()))?;
        check(
            &mut rep,
            "rees",
            comm == hbar && normalized(&back) == normalized(&fp),
            "[y, x] = hbar and dehomogenization restores the Weyl presentation".to_string(),
        );
    }

    Ok(rep)
}
