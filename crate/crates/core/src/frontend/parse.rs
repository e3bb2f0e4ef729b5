//! Lexer and parser for the presentation language: named blocks of
//! key-value entries whose values are expressions in a small polynomial
//! grammar (with `h` reserved for the deformation parameter), lists, or
//! strings.

use crate::defquant::HSeries;
use crate::{rat, Poly, Rat, RatFn};
use crate::defquant::HPoly;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        msg: msg.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Nat(u64),
    Str(String),
    Sym(char),
}

#[derive(Debug, Clone, PartialEq)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c2) = chars.peek() {
                    if c2 == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            '"' => {
                let (l0, c0) = (line, col);
                chars.next();
                col += 1;
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None | Some('\n') => return err(l0, c0, "unterminated string"),
                        Some('"') => {
                            col += 1;
                            break;
                        }
                        Some(ch) => {
                            s.push(ch);
                            col += 1;
                        }
                    }
                }
                out.push(Spanned {
                    tok: Tok::Str(s),
                    line: l0,
                    col: c0,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let (l0, c0) = (line, col);
                let mut s = String::new();
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_alphanumeric() || c2 == '_' {
                        s.push(c2);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Ident(s),
                    line: l0,
                    col: c0,
                });
            }
            c if c.is_ascii_digit() => {
                let (l0, c0) = (line, col);
                let mut n: u64 = 0;
                while let Some(&c2) = chars.peek() {
                    if let Some(d) = c2.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|m| m.checked_add(d as u64))
                            .ok_or_else(|| ParseError {
                                line: l0,
                                col: c0,
                                msg: "integer literal too large".into(),
                            })?;
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Nat(n),
                    line: l0,
                    col: c0,
                });
            }
            '{' | '}' | '[' | ']' | '(' | ')' | '=' | '+' | '-' | '*' | '/' | '^' | ','
            | '.' => {
                out.push(Spanned {
                    tok: Tok::Sym(c),
                    line,
                    col,
                });
                chars.next();
                col += 1;
            }
            other => return err(line, col, format!("unexpected character '{}'", other)),
        }
    }
    Ok(out)
}

/// Expression AST; division and `exp` are validated per evaluation
/// context rather than in the grammar.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rat),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Exp(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Expr(Expr),
    List(Vec<Value>),
    Str(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Algebra,
    Poisson,
    Hopf,
    Action,
    Filtered,
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BlockKind::Algebra => "algebra",
            BlockKind::Poisson => "poisson",
            BlockKind::Hopf => "hopf",
            BlockKind::Action => "action",
            BlockKind::Filtered => "filtered",
        };
        write!(f, "{}", s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub kind: BlockKind,
    pub name: String,
    pub entries: Vec<(Vec<String>, Value)>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    pub blocks: Vec<Block>,
}

/// Parse a standalone expression (for `--elem`, `--a`, `--s`, ...).
pub fn parse_expr_text(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if !p.at_end() {
        let (l, c) = p.here();
        return err(l, c, "unexpected trailing input");
    }
    Ok(e)
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let mut blocks = Vec::new();
    while !p.at_end() {
        blocks.push(p.block()?);
    }
    Ok(Document { blocks })
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek()
            .map(|s| (s.line, s.col))
            .unwrap_or_else(|| {
                self.toks
                    .last()
                    .map(|s| (s.line, s.col + 1))
                    .unwrap_or((1, 1))
            })
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        let (l, co) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Sym(s), .. }) if s == c => Ok(()),
            _ => err(l, co, format!("expected '{}'", c)),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let (l, c) = self.here();
        match self.next() {
            Some(Spanned {
                tok: Tok::Ident(s), ..
            }) => Ok(s),
            _ => err(l, c, "expected identifier"),
        }
    }

    fn block(&mut self) -> Result<Block, ParseError> {
        let (l, c) = self.here();
        let kind = match self.ident()?.as_str() {
            "algebra" => BlockKind::Algebra,
            "poisson" => BlockKind::Poisson,
            "hopf" => BlockKind::Hopf,
            "action" => BlockKind::Action,
            "filtered" => BlockKind::Filtered,
            other => {
                return err(l, c, format!("unknown block kind '{}'", other));
            }
        };
        let name = self.ident()?;
        self.expect_sym('{')?;
        let mut entries = Vec::new();
        loop {
            match self.peek() {
                Some(Spanned { tok: Tok::Sym('}'), .. }) => {
                    self.next();
                    break;
                }
                None => {
                    let (el, ec) = self.here();
                    return err(el, ec, "unterminated block");
                }
                _ => {
                    let mut key = vec![self.ident()?];
                    while matches!(self.peek(), Some(Spanned { tok: Tok::Sym('.'), .. })) {
                        self.next();
                        key.push(self.ident()?);
                    }
                    self.expect_sym('=')?;
                    let v = self.value()?;
                    entries.push((key, v));
                }
            }
        }
        Ok(Block {
            kind,
            name,
            entries,
            line: l,
        })
    }

    fn value(&mut self) -> Result<Value, ParseError> {
        match self.peek() {
            Some(Spanned { tok: Tok::Sym('['), .. }) => {
                self.next();
                let mut items = Vec::new();
                loop {
                    if matches!(self.peek(), Some(Spanned { tok: Tok::Sym(']'), .. })) {
                        self.next();
                        break;
                    }
                    items.push(self.value()?);
                    match self.peek() {
                        Some(Spanned { tok: Tok::Sym(','), .. }) => {
                            self.next();
                        }
                        Some(Spanned { tok: Tok::Sym(']'), .. }) => {}
                        _ => {
                            let (l, c) = self.here();
                            return err(l, c, "expected ',' or ']'");
                        }
                    }
                }
                Ok(Value::List(items))
            }
            Some(Spanned { tok: Tok::Str(_), .. }) => {
                if let Some(Spanned { tok: Tok::Str(s), .. }) = self.next() {
                    Ok(Value::Str(s))
                } else {
                    unreachable!()
                }
            }
            _ => Ok(Value::Expr(self.expr()?)),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if matches!(self.peek(), Some(Spanned { tok: Tok::Sym('-'), .. })) {
            self.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Spanned { tok: Tok::Sym('+'), .. }) => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Spanned { tok: Tok::Sym('-'), .. }) => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Spanned { tok: Tok::Sym('*'), .. }) => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Spanned { tok: Tok::Sym('/'), .. }) => {
                    self.next();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Spanned { tok: Tok::Sym('^'), .. })) {
            self.next();
            let (l, c) = self.here();
            match self.next() {
                Some(Spanned { tok: Tok::Nat(n), .. }) if n <= u32::MAX as u64 => {
                    Ok(Expr::Pow(Box::new(base), n as u32))
                }
                _ => err(l, c, "expected a natural-number exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let (l, c) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Nat(n), .. }) => Ok(Expr::Num(rat(n as i64, 1))),
            Some(Spanned {
                tok: Tok::Ident(s), ..
            }) => {
                if s == "exp" {
                    self.expect_sym('(')?;
                    let inner = self.expr()?;
                    self.expect_sym(')')?;
                    Ok(Expr::Exp(Box::new(inner)))
                } else {
                    Ok(Expr::Var(s))
                }
            }
            Some(Spanned { tok: Tok::Sym('('), .. }) => {
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            _ => err(l, c, "expected a number, identifier, or '('"),
        }
    }
}

/// Evaluation error carrying no position (callers attach the block).
#[derive(Debug, Error, Clone, PartialEq)]
#[error("{0}")]
pub struct EvalError(pub String);

fn ev<T>(msg: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError(msg.into()))
}

impl Expr {
    /// Truncated scalar series in h (no polynomial variables).
    pub fn eval_hseries(&self, order: usize) -> Result<HSeries, EvalError> {
        match self {
            Expr::Num(c) => Ok(HSeries::constant(order, c.clone())),
            Expr::Var(v) if v == "h" => {
                let mut coeffs = vec![Rat::zero(); order + 1];
                if order >= 1 {
                    coeffs[1] = Rat::one();
                }
                Ok(HSeries::from_rats(order, coeffs))
            }
            Expr::Var(v) => ev(format!("variable '{}' is not allowed in a series", v)),
            Expr::Neg(a) => {
                let s = a.eval_hseries(order)?;
                Ok(HSeries::from_rats(
                    order,
                    s.coeffs().iter().map(|c| -c.clone()).collect(),
                ))
            }
            Expr::Add(a, b) => Ok(a.eval_hseries(order)?.add(&b.eval_hseries(order)?)),
            Expr::Sub(a, b) => {
                let nb = Expr::Neg(b.clone());
                Ok(a.eval_hseries(order)?.add(&nb.eval_hseries(order)?))
            }
            Expr::Mul(a, b) => Ok(a.eval_hseries(order)?.mul(&b.eval_hseries(order)?)),
            Expr::Div(a, b) => {
                let d = b.eval_hseries(order)?;
                let inv = d
                    .inverse()
                    .map_err(|_| EvalError("division by a non-invertible series".into()))?;
                Ok(a.eval_hseries(order)?.mul(&inv))
            }
            Expr::Pow(a, k) => {
                let base = a.eval_hseries(order)?;
                let mut r = HSeries::one(order);
                for _ in 0..*k {
                    r = r.mul(&base);
                }
                Ok(r)
            }
            Expr::Exp(a) => {
                let s = a.eval_hseries(order)?;
                if !s.coeff(0).is_zero() {
                    return ev("exp argument must vanish at h = 0");
                }
                // exp by composition: sum s^k / k!
                let mut r = HSeries::one(order);
                let mut pow = HSeries::one(order);
                let mut fact = Rat::one();
                for k in 1..=order {
                    pow = pow.mul(&s);
                    fact = fact * rat(k as i64, 1);
                    let scaled = HSeries::from_rats(
                        order,
                        pow.coeffs()
                            .iter()
                            .map(|c| c.clone() / fact.clone())
                            .collect(),
                    );
                    r = r.add(&scaled);
                }
                Ok(r)
            }
        }
    }

    /// Polynomial over the given variables; `h` and division by
    /// non-constants are rejected.
    pub fn eval_poly(&self, vars: &[String]) -> Result<Poly, EvalError> {
        match self {
            Expr::Num(c) => Ok(Poly::constant(vars, c.clone())),
            Expr::Var(v) if v == "h" => ev("'h' is not allowed here"),
            Expr::Var(v) => Poly::var(vars, v)
                .map_err(|_| EvalError(format!("unknown variable '{}'", v))),
            Expr::Neg(a) => Ok(a.eval_poly(vars)?.neg()),
            Expr::Add(a, b) => Ok(a.eval_poly(vars)?.add(&b.eval_poly(vars)?)),
            Expr::Sub(a, b) => Ok(a.eval_poly(vars)?.sub(&b.eval_poly(vars)?)),
            Expr::Mul(a, b) => Ok(a.eval_poly(vars)?.mul(&b.eval_poly(vars)?)),
            Expr::Div(a, b) => {
                let d = b.eval_poly(vars)?;
                match d.constant_value() {
                    Some(c) if !c.is_zero() => {
                        Ok(a.eval_poly(vars)?.scale(&(Rat::one() / c)))
                    }
                    Some(_) => ev("division by zero"),
                    None => ev("division is only allowed in rational-function fields"),
                }
            }
            Expr::Pow(a, k) => Ok(a.eval_poly(vars)?.pow(*k)),
            Expr::Exp(_) => ev("exp(...) is only allowed in series values"),
        }
    }

    /// Element of the truncated deformation algebra: a polynomial in
    /// the variables and `h`.
    pub fn eval_hpoly(&self, vars: &[String], order: usize) -> Result<HPoly, EvalError> {
        match self {
            Expr::Num(c) => Ok(HPoly::one(vars, order).scale(c)),
            Expr::Var(v) if v == "h" => Ok(HPoly::one(vars, order).shift(1)),
            Expr::Var(v) => {
                let p = Poly::var(vars, v)
                    .map_err(|_| EvalError(format!("unknown variable '{}'", v)))?;
                Ok(HPoly::from_poly(p, order))
            }
            Expr::Neg(a) => Ok(a.eval_hpoly(vars, order)?.neg()),
            Expr::Add(a, b) => {
                Ok(a.eval_hpoly(vars, order)?.add(&b.eval_hpoly(vars, order)?))
            }
            Expr::Sub(a, b) => {
                Ok(a.eval_hpoly(vars, order)?.sub(&b.eval_hpoly(vars, order)?))
            }
            Expr::Mul(a, b) => {
                let x = a.eval_hpoly(vars, order)?;
                let y = b.eval_hpoly(vars, order)?;
                Ok(hpoly_mul(&x, &y))
            }
            Expr::Div(a, b) => {
                let d = b.eval_hpoly(vars, order)?;
                match constant_of(&d) {
                    Some(c) if !c.is_zero() => {
                        Ok(a.eval_hpoly(vars, order)?.scale(&(Rat::one() / c)))
                    }
                    _ => ev("division is only allowed by nonzero rational constants here"),
                }
            }
            Expr::Pow(a, k) => {
                let base = a.eval_hpoly(vars, order)?;
                let mut r = HPoly::one(vars, order);
                for _ in 0..*k {
                    r = hpoly_mul(&r, &base);
                }
                Ok(r)
            }
            Expr::Exp(_) => {
                let s = self.eval_hseries(order)?;
                let mut out = HPoly::zero(vars, order);
                for (k, c) in s.coeffs().iter().enumerate() {
                    out = out.add(&HPoly::one(vars, order).scale(c).shift(k));
                }
                Ok(out)
            }
        }
    }

    /// Rational function over the variables; `h` is rejected.
    pub fn eval_ratfn(&self, vars: &[String]) -> Result<RatFn, EvalError> {
        match self {
            Expr::Num(c) => Ok(RatFn::constant(vars, c.clone())),
            Expr::Var(v) if v == "h" => ev("'h' is not allowed here"),
            Expr::Var(v) => {
                let p = Poly::var(vars, v)
                    .map_err(|_| EvalError(format!("unknown variable '{}'", v)))?;
                Ok(RatFn::from_poly(p))
            }
            Expr::Neg(a) => Ok(a.eval_ratfn(vars)?.neg()),
            Expr::Add(a, b) => Ok(a.eval_ratfn(vars)?.add(&b.eval_ratfn(vars)?)),
            Expr::Sub(a, b) => Ok(a.eval_ratfn(vars)?.sub(&b.eval_ratfn(vars)?)),
            Expr::Mul(a, b) => Ok(a.eval_ratfn(vars)?.mul(&b.eval_ratfn(vars)?)),
            Expr::Div(a, b) => a
                .eval_ratfn(vars)?
                .div(&b.eval_ratfn(vars)?)
                .map_err(|e| EvalError(e.to_string())),
            Expr::Pow(a, k) => {
                let base = a.eval_ratfn(vars)?;
                let mut r = RatFn::one(vars);
                for _ in 0..*k {
                    r = r.mul(&base);
                }
                Ok(r)
            }
            Expr::Exp(_) => ev("exp(...) is only allowed in series values"),
        }
    }

    /// Rational constant, if the expression is one.
    pub fn eval_rat(&self) -> Result<Rat, EvalError> {
        let s = self.eval_hseries(0)?;
        Ok(s.coeff(0))
    }
}

/// Commutative product of truncated h-polynomials (used only while
/// evaluating input expressions; algebra products go through star).
fn hpoly_mul(a: &HPoly, b: &HPoly) -> HPoly {
    let order = a.order();
    let vars = a.vars().to_vec();
    let mut out = HPoly::zero(&vars, order);
    for i in 0..=order {
        let ai = a.coeff(i);
        if ai.is_zero() {
            continue;
        }
        for j in 0..=order - i {
            let bj = b.coeff(j);
            if bj.is_zero() {
                continue;
            }
            out = out.add(&HPoly::from_poly(ai.mul(&bj), order).shift(i + j));
        }
    }
    out
}

fn constant_of(p: &HPoly) -> Option<Rat> {
    if p.coeffs().iter().skip(1).all(|c| c.is_zero()) {
        p.coeff(0).constant_value()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn series_literal() {
        let doc = parse_document("hopf q { s = 1 + h + 1/2*h^2 }").unwrap();
        let (_, v) = &doc.blocks[0].entries[0];
        let Value::Expr(e) = v else { panic!() };
        let s = e.eval_hseries(2).unwrap();
        assert_eq!(s, HSeries::from_rats(2, vec![rat(1, 1), rat(1, 1), rat(1, 2)]));
        // exp(1*h) agrees with the closed form
        let doc = parse_document("hopf q { s = exp(1*h) }").unwrap();
        let (_, Value::Expr(e)) = &doc.blocks[0].entries[0] else {
            panic!()
        };
        assert_eq!(e.eval_hseries(3).unwrap(), HSeries::exp_lambda(rat(1, 1), 3));
    }

    #[test]
    fn poly_and_precedence() {
        let doc = parse_document("poisson p { b = x*y^2 - 3/2*z + 1 }").unwrap();
        let (_, Value::Expr(e)) = &doc.blocks[0].entries[0] else {
            panic!()
        };
        let vs = vars(&["x", "y", "z"]);
        let p = e.eval_poly(&vs).unwrap();
        let x = Poly::var(&vs, "x").unwrap();
        let y = Poly::var(&vs, "y").unwrap();
        let z = Poly::var(&vs, "z").unwrap();
        let want = x
            .mul(&y.pow(2))
            .sub(&z.scale(&rat(3, 2)))
            .add(&Poly::one(&vs));
        assert_eq!(p, want);
    }

    #[test]
    fn division_rejected_in_poly_context() {
        let doc = parse_document("poisson p { b = x/y }").unwrap();
        let (_, Value::Expr(e)) = &doc.blocks[0].entries[0] else {
            panic!()
        };
        let vs = vars(&["x", "y"]);
        assert!(e.eval_poly(&vs).is_err());
        // but fine as a rational function
        let f = e.eval_ratfn(&vs).unwrap();
        assert!(!f.is_constant());
    }

    #[test]
    fn h_reserved() {
        let doc = parse_document("poisson p { b = h*x }").unwrap();
        let (_, Value::Expr(e)) = &doc.blocks[0].entries[0] else {
            panic!()
        };
        assert!(e.eval_poly(&vars(&["x"])).is_err());
        // in an algebra element it is the deformation parameter
        let hp = e.eval_hpoly(&vars(&["x"]), 2).unwrap();
        assert_eq!(hp.valuation(), Some(1));
    }

    #[test]
    fn errors_carry_location() {
        let e = parse_document("algebra a {\n  q.x.y = @\n}").unwrap_err();
        assert_eq!(e.line, 2);
        // missing '=' also errors with position
        assert!(parse_document("algebra a { vars [x] }").is_err());
    }

    #[test]
    fn dotted_keys_and_lists() {
        let doc =
            parse_document("algebra a { vars = [x, y] q.x.y = exp(2*h) pairs = [[x, y]] }")
                .unwrap();
        let b = &doc.blocks[0];
        assert_eq!(b.entries[1].0, vec!["q", "x", "y"]);
        match &b.entries[2].1 {
            Value::List(items) => assert_eq!(items.len(), 1),
            _ => panic!(),
        }
    }
}
