//! Semantic layer of the frontend: turning parsed documents into the
//! core objects (algebras, Poisson structures, Hopf algebras, actions)
//! and printing those objects back as documents in canonical form, so
//! that parse-then-print is the identity on canonical presentations.

use super::parse::{Block, BlockKind, Document, Expr, Value};
use crate::defquant::{DeformAlgebra, FilteredPresentation, HPoly, Presentation};
use crate::hopfact::{group_algebra, sweedler, HopfAction, HopfAlgebra};
use crate::poisson::PoissonStructure;
use crate::Poly;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("in {kind} block '{name}': {msg}")]
pub struct BuildError {
    pub kind: String,
    pub name: String,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum HopfSource {
    Preset(String),
    Group(Vec<Vec<usize>>),
}

#[derive(Debug, Clone)]
pub struct HopfDef {
    pub hopf: HopfAlgebra,
    pub source: HopfSource,
}

#[derive(Debug, Clone)]
pub struct ActionDef {
    pub action: HopfAction,
    pub alg_ref: String,
    pub hopf_ref: String,
}

/// Everything defined by a set of input documents, by name.
#[derive(Debug, Clone, Default)]
pub struct Env {
    pub algebras: BTreeMap<String, DeformAlgebra>,
    pub filtered: BTreeMap<String, FilteredPresentation>,
    pub poissons: BTreeMap<String, PoissonStructure>,
    pub hopfs: BTreeMap<String, HopfDef>,
    pub actions: BTreeMap<String, ActionDef>,
}

struct Ctx<'a> {
    kind: BlockKind,
    name: &'a str,
}

impl Ctx<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, BuildError> {
        Err(BuildError {
            kind: self.kind.to_string(),
            name: self.name.to_string(),
            msg: msg.into(),
        })
    }
}

fn expr_of<'v>(ctx: &Ctx, key: &[String], v: &'v Value) -> Result<&'v Expr, BuildError> {
    match v {
        Value::Expr(e) => Ok(e),
        _ => ctx.err(format!("'{}' must be an expression", key.join("."))),
    }
}

fn ident_list(ctx: &Ctx, key: &str, v: &Value) -> Result<Vec<String>, BuildError> {
    let Value::List(items) = v else {
        return ctx.err(format!("'{}' must be a list", key));
    };
    let mut out = Vec::new();
    for it in items {
        match it {
            Value::Expr(Expr::Var(s)) => out.push(s.clone()),
            _ => return ctx.err(format!("'{}' must be a list of identifiers", key)),
        }
    }
    Ok(out)
}

fn nat_list(ctx: &Ctx, key: &str, v: &Value) -> Result<Vec<u64>, BuildError> {
    let Value::List(items) = v else {
        return ctx.err(format!("'{}' must be a list", key));
    };
    let mut out = Vec::new();
    for it in items {
        match it {
            Value::Expr(Expr::Num(c)) if c.is_integer() => {
                match c.to_integer().to_u64() {
                    Some(n) => out.push(n),
                    None => return ctx.err(format!("'{}' entry out of range", key)),
                }
            }
            _ => return ctx.err(format!("'{}' must be a list of natural numbers", key)),
        }
    }
    Ok(out)
}

fn nat_of(ctx: &Ctx, key: &str, v: &Value) -> Result<usize, BuildError> {
    match v {
        Value::Expr(Expr::Num(c)) if c.is_integer() => c
            .to_integer()
            .to_usize()
            .ok_or(())
            .or_else(|_| ctx.err(format!("'{}' out of range", key))),
        _ => ctx.err(format!("'{}' must be a natural number", key)),
    }
}

fn str_of(ctx: &Ctx, key: &str, v: &Value) -> Result<String, BuildError> {
    match v {
        Value::Str(s) => Ok(s.clone()),
        _ => ctx.err(format!("'{}' must be a string", key)),
    }
}

fn var_index(ctx: &Ctx, vars: &[String], name: &str) -> Result<usize, BuildError> {
    vars.iter()
        .position(|v| v == name)
        .ok_or(())
        .or_else(|_| ctx.err(format!("unknown variable '{}'", name)))
}

fn check_vars(ctx: &Ctx, vars: &[String]) -> Result<(), BuildError> {
    if vars.is_empty() {
        return ctx.err("'vars' must be nonempty");
    }
    for (i, v) in vars.iter().enumerate() {
        if v == "h" || v == "exp" {
            return ctx.err(format!("'{}' is a reserved name", v));
        }
        if vars[..i].contains(v) {
            return ctx.err(format!("duplicate variable '{}'", v));
        }
    }
    Ok(())
}

fn get_vars(ctx: &Ctx, block: &Block) -> Result<Vec<String>, BuildError> {
    for (key, v) in &block.entries {
        if key.len() == 1 && key[0] == "vars" {
            let vars = ident_list(ctx, "vars", v)?;
            check_vars(ctx, &vars)?;
            return Ok(vars);
        }
    }
    ctx.err("missing required entry 'vars'")
}

/// Build every block of the given documents into an [`Env`]. An
/// `order_override` (from the command line) replaces any `order`
/// entries in algebra blocks.
pub fn build_env(
    docs: &[Document],
    order_override: Option<usize>,
) -> Result<Env, BuildError> {
    let mut env = Env::default();
    let mut pending_actions: Vec<&Block> = Vec::new();
    for doc in docs {
        for block in &doc.blocks {
            let ctx = Ctx {
                kind: block.kind,
                name: &block.name,
            };
            let clash = env.algebras.contains_key(&block.name) && block.kind == BlockKind::Algebra
                || env.filtered.contains_key(&block.name) && block.kind == BlockKind::Filtered
                || env.poissons.contains_key(&block.name) && block.kind == BlockKind::Poisson
                || env.hopfs.contains_key(&block.name) && block.kind == BlockKind::Hopf
                || env.actions.contains_key(&block.name) && block.kind == BlockKind::Action;
            if clash {
                return ctx.err("duplicate block name");
            }
            match block.kind {
                BlockKind::Algebra => {
                    let alg = build_algebra(&ctx, block, order_override)?;
                    env.algebras.insert(block.name.clone(), alg);
                }
                BlockKind::Filtered => {
                    let fp = build_filtered(&ctx, block)?;
                    env.filtered.insert(block.name.clone(), fp);
                }
                BlockKind::Poisson => {
                    let ps = build_poisson(&ctx, block)?;
                    env.poissons.insert(block.name.clone(), ps);
                }
                BlockKind::Hopf => {
                    let hd = build_hopf(&ctx, block)?;
                    env.hopfs.insert(block.name.clone(), hd);
                }
                BlockKind::Action => pending_actions.push(block),
            }
        }
    }
    for block in pending_actions {
        let ctx = Ctx {
            kind: block.kind,
            name: &block.name,
        };
        let ad = build_action(&ctx, block, &env)?;
        env.actions.insert(block.name.clone(), ad);
    }
    Ok(env)
}

fn build_algebra(
    ctx: &Ctx,
    block: &Block,
    order_override: Option<usize>,
) -> Result<DeformAlgebra, BuildError> {
    let vars = get_vars(ctx, block)?;
    let mut kind = "quantum".to_string();
    let mut order = 2usize;
    for (key, v) in &block.entries {
        match key[0].as_str() {
            "type" => kind = str_of(ctx, "type", v)?,
            "order" => order = nat_of(ctx, "order", v)?,
            _ => {}
        }
    }
    if let Some(n) = order_override {
        order = n;
    }
    let mut q: Vec<((usize, usize), crate::defquant::HSeries)> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut brackets: Vec<((usize, usize), Poly)> = Vec::new();
    let mut rules: Vec<((usize, usize), HPoly)> = Vec::new();
    let mut degrees: Option<Vec<u32>> = None;
    for (key, v) in &block.entries {
        match key[0].as_str() {
            "vars" | "type" | "order" => {}
            "q" if key.len() == 3 => {
                let a = var_index(ctx, &vars, &key[1])?;
                let b = var_index(ctx, &vars, &key[2])?;
                if a == b {
                    return ctx.err("q entry needs two distinct variables");
                }
                let s = expr_of(ctx, key, v)?
                    .eval_hseries(order)
                    .map_err(|e| build_err(ctx, e.0))?;
                if a < b {
                    q.push(((a, b), s));
                } else {
                    let inv = s
                        .inverse()
                        .map_err(|e| build_err(ctx, e.to_string()))?;
                    q.push(((b, a), inv));
                }
            }
            "pairs" => {
                let Value::List(items) = v else {
                    return ctx.err("'pairs' must be a list of pairs");
                };
                for it in items {
                    let two = ident_list(ctx, "pairs", it)?;
                    if two.len() != 2 {
                        return ctx.err("each pair must name two variables");
                    }
                    pairs.push((
                        var_index(ctx, &vars, &two[0])?,
                        var_index(ctx, &vars, &two[1])?,
                    ));
                }
            }
            "bracket" if key.len() == 3 => {
                let a = var_index(ctx, &vars, &key[1])?;
                let b = var_index(ctx, &vars, &key[2])?;
                if a == b {
                    return ctx.err("bracket entry needs two distinct variables");
                }
                let p = expr_of(ctx, key, v)?
                    .eval_poly(&vars)
                    .map_err(|e| build_err(ctx, e.0))?;
                if a < b {
                    brackets.push(((a, b), p));
                } else {
                    brackets.push(((b, a), p.neg()));
                }
            }
            "rule" if key.len() == 3 => {
                let a = var_index(ctx, &vars, &key[1])?;
                let b = var_index(ctx, &vars, &key[2])?;
                if a <= b {
                    return ctx.err(
                        "rules rewrite a later variable past an earlier one: \
                         use rule.LATER.EARLIER",
                    );
                }
                let p = expr_of(ctx, key, v)?
                    .eval_hpoly(&vars, order)
                    .map_err(|e| build_err(ctx, e.0))?;
                rules.push(((a, b), p));
            }
            "degrees" => {
                let ds = nat_list(ctx, "degrees", v)?;
                degrees = Some(ds.into_iter().map(|d| d as u32).collect());
            }
            other => {
                return ctx.err(format!("unknown entry '{}'", other));
            }
        }
    }
    let built = match kind.as_str() {
        "quantum" => DeformAlgebra::quantum_poly(vars, q, order),
        "moyal" => DeformAlgebra::moyal(vars, pairs, order),
        "lie" => DeformAlgebra::lie_enveloping(vars, brackets, order),
        "generic" => DeformAlgebra::generic(vars, rules, order, degrees),
        other => return ctx.err(format!("unknown algebra type '{}'", other)),
    };
    built.map_err(|e| build_err(ctx, e.to_string()))
}

fn build_filtered(ctx: &Ctx, block: &Block) -> Result<FilteredPresentation, BuildError> {
    let vars = get_vars(ctx, block)?;
    let mut degrees: Option<Vec<u32>> = None;
    let mut relations: Vec<((usize, usize), Poly)> = Vec::new();
    for (key, v) in &block.entries {
        match key[0].as_str() {
            "vars" => {}
            "degrees" => {
                let ds = nat_list(ctx, "degrees", v)?;
                degrees = Some(ds.into_iter().map(|d| d as u32).collect());
            }
            "rel" if key.len() == 3 => {
                let a = var_index(ctx, &vars, &key[1])?;
                let b = var_index(ctx, &vars, &key[2])?;
                if a <= b {
                    return ctx.err("relations must be written rel.LATER.EARLIER");
                }
                let p = expr_of(ctx, key, v)?
                    .eval_poly(&vars)
                    .map_err(|e| build_err(ctx, e.0))?;
                relations.push(((a, b), p));
            }
            other => return ctx.err(format!("unknown entry '{}'", other)),
        }
    }
    let Some(degrees) = degrees else {
        return ctx.err("missing required entry 'degrees'");
    };
    if degrees.len() != vars.len() {
        return ctx.err("'degrees' must list one degree per variable");
    }
    Ok(FilteredPresentation {
        vars,
        degrees,
        relations,
    })
}

fn build_poisson(ctx: &Ctx, block: &Block) -> Result<PoissonStructure, BuildError> {
    let vars = get_vars(ctx, block)?;
    let mut brackets: Vec<((usize, usize), Poly)> = Vec::new();
    for (key, v) in &block.entries {
        match key[0].as_str() {
            "vars" => {}
            "bracket" if key.len() == 3 => {
                let a = var_index(ctx, &vars, &key[1])?;
                let b = var_index(ctx, &vars, &key[2])?;
                if a == b {
                    return ctx.err("bracket entry needs two distinct variables");
                }
                let p = expr_of(ctx, key, v)?
                    .eval_poly(&vars)
                    .map_err(|e| build_err(ctx, e.0))?;
                if a < b {
                    brackets.push(((a, b), p));
                } else {
                    brackets.push(((b, a), p.neg()));
                }
            }
            other => return ctx.err(format!("unknown entry '{}'", other)),
        }
    }
    PoissonStructure::new(vars, brackets).map_err(|e| build_err(ctx, e.to_string()))
}

fn build_hopf(ctx: &Ctx, block: &Block) -> Result<HopfDef, BuildError> {
    let mut preset: Option<String> = None;
    let mut group: Option<Vec<Vec<usize>>> = None;
    for (key, v) in &block.entries {
        match key[0].as_str() {
            "preset" => preset = Some(str_of(ctx, "preset", v)?),
            "group" => {
                let Value::List(items) = v else {
                    return ctx.err("'group' must be a Cayley table (list of rows)");
                };
                let mut table = Vec::new();
                for it in items {
                    let row = nat_list(ctx, "group", it)?;
                    table.push(row.into_iter().map(|n| n as usize).collect());
                }
                group = Some(table);
            }
            other => return ctx.err(format!("unknown entry '{}'", other)),
        }
    }
    match (preset, group) {
        (Some(p), None) => match p.as_str() {
            "sweedler" => Ok(HopfDef {
                hopf: sweedler(),
                source: HopfSource::Preset(p),
            }),
            other => ctx.err(format!("unknown preset '{}'", other)),
        },
        (None, Some(t)) => {
            let hopf = group_algebra(&t).map_err(|e| build_err(ctx, e.to_string()))?;
            Ok(HopfDef {
                hopf,
                source: HopfSource::Group(t),
            })
        }
        _ => ctx.err("exactly one of 'preset' or 'group' is required"),
    }
}

fn build_action(ctx: &Ctx, block: &Block, env: &Env) -> Result<ActionDef, BuildError> {
    let mut alg_ref: Option<String> = None;
    let mut hopf_ref: Option<String> = None;
    for (key, v) in &block.entries {
        match key[0].as_str() {
            "algebra" => match v {
                Value::Expr(Expr::Var(s)) => alg_ref = Some(s.clone()),
                _ => return ctx.err("'algebra' must name an algebra block"),
            },
            "hopf" => match v {
                Value::Expr(Expr::Var(s)) => hopf_ref = Some(s.clone()),
                _ => return ctx.err("'hopf' must name a hopf block or preset"),
            },
            _ => {}
        }
    }
    let Some(alg_ref) = alg_ref else {
        return ctx.err("missing required entry 'algebra'");
    };
    let Some(hopf_ref) = hopf_ref else {
        return ctx.err("missing required entry 'hopf'");
    };
    let Some(alg) = env.algebras.get(&alg_ref) else {
        return ctx.err(format!("algebra '{}' is not defined", alg_ref));
    };
    let hopf = match env.hopfs.get(&hopf_ref) {
        Some(hd) => hd.hopf.clone(),
        None if hopf_ref == "sweedler" => sweedler(),
        None => return ctx.err(format!("hopf algebra '{}' is not defined", hopf_ref)),
    };
    let vars = alg.vars().to_vec();
    let order = alg.order();
    let mut images: BTreeMap<(usize, usize), HPoly> = BTreeMap::new();
    for (key, v) in &block.entries {
        match key[0].as_str() {
            "algebra" | "hopf" => {}
            "act" if key.len() == 3 => {
                let Some(b) = hopf.labels().iter().position(|l| *l == key[1]) else {
                    return ctx.err(format!("unknown Hopf basis label '{}'", key[1]));
                };
                let g = var_index(ctx, &vars, &key[2])?;
                let p = expr_of(ctx, key, v)?
                    .eval_hpoly(&vars, order)
                    .map_err(|e| build_err(ctx, e.0))?;
                images.insert((b, g), p);
            }
            other => return ctx.err(format!("unknown entry '{}'", other)),
        }
    }
    let mut gen_action = Vec::with_capacity(hopf.dim());
    for b in 0..hopf.dim() {
        let is_unit = hopf.basis_vec(b) == hopf.unit();
        let mut row = Vec::with_capacity(vars.len());
        for g in 0..vars.len() {
            match images.remove(&(b, g)) {
                Some(p) => row.push(p),
                None if is_unit => row.push(alg.gen_lift(g)),
                None => {
                    return ctx.err(format!(
                        "missing entry act.{}.{}",
                        hopf.labels()[b],
                        vars[g]
                    ));
                }
            }
        }
        gen_action.push(row);
    }
    let action = HopfAction::new(hopf, alg.clone(), gen_action)
        .map_err(|e| build_err(ctx, e.to_string()))?;
    Ok(ActionDef {
        action,
        alg_ref,
        hopf_ref,
    })
}

fn build_err(ctx: &Ctx, msg: String) -> BuildError {
    BuildError {
        kind: ctx.kind.to_string(),
        name: ctx.name.to_string(),
        msg,
    }
}

// ---------------------------------------------------------------------
// Canonical printers
// ---------------------------------------------------------------------

fn fmt_vars(vars: &[String]) -> String {
    format!("[{}]", vars.join(", "))
}

pub fn print_algebra(name: &str, alg: &DeformAlgebra) -> String {
    let vars = alg.vars();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} {{", name);
    let _ = writeln!(out, "  vars = {}", fmt_vars(vars));
    let _ = writeln!(out, "  order = {}", alg.order());
    match alg.presentation() {
        Presentation::Moyal { pairs } => {
            let _ = writeln!(out, "  type = \"moyal\"");
            let body = pairs
                .iter()
                .map(|&(i, j)| format!("[{}, {}]", vars[i], vars[j]))
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(out, "  pairs = [{}]", body);
        }
        Presentation::QuantumPoly { q } => {
            let _ = writeln!(out, "  type = \"quantum\"");
            for ((i, j), s) in q {
                let _ = writeln!(out, "  q.{}.{} = {}", vars[*i], vars[*j], s);
            }
        }
        Presentation::LieEnveloping { c } => {
            let _ = writeln!(out, "  type = \"lie\"");
            for ((i, j), p) in c {
                let _ = writeln!(out, "  bracket.{}.{} = {}", vars[*i], vars[*j], p);
            }
        }
        Presentation::GenericRewriting { rules } => {
            let _ = writeln!(out, "  type = \"generic\"");
            if let Some(ds) = alg.degrees() {
                let body = ds
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(out, "  degrees = [{}]", body);
            }
            for ((j, i), rhs) in rules {
                let _ = writeln!(out, "  rule.{}.{} = {}", vars[*j], vars[*i], rhs);
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn print_filtered(name: &str, fp: &FilteredPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "filtered {} {{", name);
    let _ = writeln!(out, "  vars = {}", fmt_vars(&fp.vars));
    let body = fp
        .degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(out, "  degrees = [{}]", body);
    for ((j, i), rhs) in &fp.relations {
        let _ = writeln!(out, "  rel.{}.{} = {}", fp.vars[*j], fp.vars[*i], rhs);
    }
    out.push_str("}\n");
    out
}

pub fn print_poisson(name: &str, ps: &PoissonStructure) -> String {
    let vars = ps.vars();
    let mut out = String::new();
    let _ = writeln!(out, "poisson {} {{", name);
    let _ = writeln!(out, "  vars = {}", fmt_vars(vars));
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            let p = ps.bracket_gen(i, j);
            if !p.is_zero() {
                let _ = writeln!(out, "  bracket.{}.{} = {}", vars[i], vars[j], p);
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn print_hopf(name: &str, hd: &HopfDef) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "hopf {} {{", name);
    match &hd.source {
        HopfSource::Preset(p) => {
            let _ = writeln!(out, "  preset = \"{}\"", p);
        }
        HopfSource::Group(t) => {
            let rows = t
                .iter()
                .map(|r| {
                    format!(
                        "[{}]",
                        r.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
                    )
                })
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(out, "  group = [{}]", rows);
        }
    }
    out.push_str("}\n");
    out
}

pub fn print_action(name: &str, ad: &ActionDef) -> String {
    let action = &ad.action;
    let hopf = action.hopf();
    let alg = action.alg();
    let mut out = String::new();
    let _ = writeln!(out, "action {} {{", name);
    let _ = writeln!(out, "  algebra = {}", ad.alg_ref);
    let _ = writeln!(out, "  hopf = {}", ad.hopf_ref);
    for b in 0..hopf.dim() {
        if hopf.basis_vec(b) == hopf.unit() {
            continue;
        }
        for (g, v) in alg.vars().iter().enumerate() {
            let _ = writeln!(
                out,
                "  act.{}.{} = {}",
                hopf.labels()[b],
                v,
                action.gen_action()[b][g]
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Print every object of an environment as one document.
pub fn print_env(env: &Env) -> String {
    let mut out = String::new();
    for (name, alg) in &env.algebras {
        out.push_str(&print_algebra(name, alg));
        out.push('\n');
    }
    for (name, fp) in &env.filtered {
        out.push_str(&print_filtered(name, fp));
        out.push('\n');
    }
    for (name, ps) in &env.poissons {
        out.push_str(&print_poisson(name, ps));
        out.push('\n');
    }
    for (name, hd) in &env.hopfs {
        out.push_str(&print_hopf(name, hd));
        out.push('\n');
    }
    for (name, ad) in &env.actions {
        out.push_str(&print_action(name, ad));
        out.push('\n');
    }
    out
}
