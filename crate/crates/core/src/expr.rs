//! The expression language: atoms `X[..]`, `h[..]`, `M[..]`, `s[..]`,
//! `P<digits>`; binary operators `#` (smash), `*` (convolution, external,
//! or scalar scaling), `o` (internal or composition), `.` (quasi-shuffle),
//! `+` and `-`; and the named maps as function calls. Offsets in
//! diagnostics are 1-based byte positions.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use crate::combinatorics::{Composition, Partition, Permutation};
use crate::error::{Error, Result};
use crate::formal::{FormalSum, PairSum};
use crate::nsym::{self, XSum};
use crate::perm_algebra;
use crate::qsym::{self, GradedSeries, MSum};
use crate::sym::{self, HSum};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Symbol(char),
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    offset: usize, // 1-based
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let offset = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Spanned {
                token: Token::Ident(text[start..i].to_string()),
                offset,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let value: BigInt = text[start..i].parse().expect("digits");
            out.push(Spanned {
                token: Token::Int(value),
                offset,
            });
        } else if "[](),+-*#.".contains(c) {
            out.push(Spanned {
                token: Token::Symbol(c),
                offset,
            });
            i += 1;
        } else {
            return Err(Error::Parse {
                offset,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

/// Binary operators at term level; all bind equally and associate left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Smash,
    Star,
    Internal,
    QuasiShuffle,
}

#[derive(Debug, Clone)]
pub enum Expr {
    Scalar(BigInt, usize),
    AtomX(Composition, usize),
    AtomH(Partition, usize),
    AtomM(Composition, usize),
    AtomS(Partition, usize),
    AtomP(Permutation, usize),
    Neg(Box<Expr>, usize),
    Add(Box<Expr>, Box<Expr>, usize),
    Sub(Box<Expr>, Box<Expr>, usize),
    Binary(OpKind, Box<Expr>, Box<Expr>, usize),
    Call(String, Vec<Expr>, usize),
}

impl Expr {
    fn offset(&self) -> usize {
        match self {
            Expr::Scalar(_, o)
            | Expr::AtomX(_, o)
            | Expr::AtomH(_, o)
            | Expr::AtomM(_, o)
            | Expr::AtomS(_, o)
            | Expr::AtomP(_, o)
            | Expr::Neg(_, o)
            | Expr::Add(_, _, o)
            | Expr::Sub(_, _, o)
            | Expr::Binary(_, _, _, o)
            | Expr::Call(_, _, o) => *o,
        }
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end_offset: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_symbol(&mut self, c: char) -> Result<usize> {
        match self.next() {
            Some(Spanned {
                token: Token::Symbol(s),
                offset,
            }) if s == c => Ok(offset),
            Some(Spanned { token, offset }) => Err(Error::Parse {
                offset,
                message: format!("expected `{c}`, found {}", describe(&token)),
            }),
            None => Err(Error::Parse {
                offset: self.end_offset,
                message: format!("expected `{c}`, found end of input"),
            }),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr> {
        let mut left = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Spanned {
                    token: Token::Symbol('+'),
                    offset,
                }) => {
                    let offset = *offset;
                    self.pos += 1;
                    let right = self.parse_term()?;
                    left = Expr::Add(Box::new(left), Box::new(right), offset);
                }
                Some(Spanned {
                    token: Token::Symbol('-'),
                    offset,
                }) => {
                    let offset = *offset;
                    self.pos += 1;
                    let right = self.parse_term()?;
                    left = Expr::Sub(Box::new(left), Box::new(right), offset);
                }
                _ => return Ok(left),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut left = self.parse_factor()?;
        loop {
            let op = match self.peek() {
                Some(Spanned {
                    token: Token::Symbol('#'),
                    offset,
                }) => Some((OpKind::Smash, *offset)),
                Some(Spanned {
                    token: Token::Symbol('*'),
                    offset,
                }) => Some((OpKind::Star, *offset)),
                Some(Spanned {
                    token: Token::Symbol('.'),
                    offset,
                }) => Some((OpKind::QuasiShuffle, *offset)),
                Some(Spanned {
                    token: Token::Ident(name),
                    offset,
                }) if name == "o" => Some((OpKind::Internal, *offset)),
                _ => None,
            };
            match op {
                Some((kind, offset)) => {
                    self.pos += 1;
                    let right = self.parse_factor()?;
                    left = Expr::Binary(kind, Box::new(left), Box::new(right), offset);
                }
                None => return Ok(left),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Spanned {
                token: Token::Symbol('-'),
                offset,
            }) => {
                let offset = *offset;
                self.pos += 1;
                let inner = self.parse_factor()?;
                Ok(Expr::Neg(Box::new(inner), offset))
            }
            _ => self.parse_atom(),
        }
    }

    fn parse_int_list(&mut self) -> Result<Vec<usize>> {
        self.expect_symbol('[')?;
        let mut items = Vec::new();
        if matches!(
            self.peek(),
            Some(Spanned {
                token: Token::Symbol(']'),
                ..
            })
        ) {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            match self.next() {
                Some(Spanned {
                    token: Token::Int(v),
                    offset,
                }) => {
                    if v <= BigInt::zero() {
                        return Err(Error::Parse {
                            offset,
                            message: "basis keys need positive integers".into(),
                        });
                    }
                    let as_usize: usize = v.try_into().map_err(|_| Error::Parse {
                        offset,
                        message: "integer too large for a basis key".into(),
                    })?;
                    items.push(as_usize);
                }
                Some(Spanned { token, offset }) => {
                    return Err(Error::Parse {
                        offset,
                        message: format!("expected integer, found {}", describe(&token)),
                    })
                }
                None => {
                    return Err(Error::Parse {
                        offset: self.end_offset,
                        message: "expected integer, found end of input".into(),
                    })
                }
            }
            match self.next() {
                Some(Spanned {
                    token: Token::Symbol(','),
                    ..
                }) => continue,
                Some(Spanned {
                    token: Token::Symbol(']'),
                    ..
                }) => return Ok(items),
                Some(Spanned { token, offset }) => {
                    return Err(Error::Parse {
                        offset,
                        message: format!("expected `,` or `]`, found {}", describe(&token)),
                    })
                }
                None => {
                    return Err(Error::Parse {
                        offset: self.end_offset,
                        message: "expected `,` or `]`, found end of input".into(),
                    })
                }
            }
        }
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Spanned {
                token: Token::Int(v),
                offset,
            }) => Ok(Expr::Scalar(v, offset)),
            Some(Spanned {
                token: Token::Symbol('('),
                ..
            }) => {
                let inner = self.parse_expr()?;
                self.expect_symbol(')')?;
                Ok(inner)
            }
            Some(Spanned {
                token: Token::Ident(name),
                offset,
            }) => self.parse_named(name, offset),
            Some(Spanned { token, offset }) => Err(Error::Parse {
                offset,
                message: format!("expected an atom, found {}", describe(&token)),
            }),
            None => Err(Error::Parse {
                offset: self.end_offset,
                message: "expected an atom, found end of input".into(),
            }),
        }
    }

    fn parse_named(&mut self, name: String, offset: usize) -> Result<Expr> {
        match name.as_str() {
            "X" => {
                let parts = self.parse_int_list()?;
                let alpha = Composition::new(parts).map_err(|e| Error::Parse {
                    offset,
                    message: e.to_string(),
                })?;
                Ok(Expr::AtomX(alpha, offset))
            }
            "M" => {
                let parts = self.parse_int_list()?;
                let alpha = Composition::new(parts).map_err(|e| Error::Parse {
                    offset,
                    message: e.to_string(),
                })?;
                Ok(Expr::AtomM(alpha, offset))
            }
            "h" | "s" => {
                let mut parts = self.parse_int_list()?;
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let lambda = Partition::new(parts).map_err(|e| Error::Parse {
                    offset,
                    message: e.to_string(),
                })?;
                if name == "h" {
                    Ok(Expr::AtomH(lambda, offset))
                } else {
                    Ok(Expr::AtomS(lambda, offset))
                }
            }
            "P" => {
                let images = self.parse_int_list()?;
                let sigma = Permutation::new(images).map_err(|e| Error::Parse {
                    offset,
                    message: e.to_string(),
                })?;
                Ok(Expr::AtomP(sigma, offset))
            }
            _ if name.starts_with('P') && name[1..].chars().all(|c| c.is_ascii_digit()) => {
                let images: Vec<usize> = name[1..]
                    .chars()
                    .map(|c| c.to_digit(10).unwrap() as usize)
                    .collect();
                let sigma = Permutation::new(images).map_err(|e| Error::Parse {
                    offset,
                    message: e.to_string(),
                })?;
                Ok(Expr::AtomP(sigma, offset))
            }
            "coprod" | "coprodCirc" | "coprodStar" | "coprodSmash" | "antipode" | "phi"
            | "psi" | "embed" | "pair" | "schur" => {
                self.expect_symbol('(')?;
                let mut args = vec![self.parse_expr()?];
                while matches!(
                    self.peek(),
                    Some(Spanned {
                        token: Token::Symbol(','),
                        ..
                    })
                ) {
                    self.pos += 1;
                    args.push(self.parse_expr()?);
                }
                self.expect_symbol(')')?;
                Ok(Expr::Call(name, args, offset))
            }
            _ => Err(Error::Parse {
                offset,
                message: format!("unknown atom or function `{name}`"),
            }),
        }
    }
}

fn describe(token: &Token) -> String {
    match token {
        Token::Ident(s) => format!("`{s}`"),
        Token::Int(v) => format!("`{v}`"),
        Token::Symbol(c) => format!("`{c}`"),
    }
}

/// Parses an expression, reporting 1-based byte offsets on failure.
pub fn parse(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let end_offset = text.len() + 1;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_offset,
    };
    let expr = parser.parse_expr()?;
    if let Some(extra) = parser.peek() {
        return Err(Error::Parse {
            offset: extra.offset,
            message: format!("unexpected {}", describe(&extra.token)),
        });
    }
    Ok(expr)
}

/// A typed evaluation result.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(BigInt),
    Perm(FormalSum<Permutation>),
    Nsym(XSum),
    Sym(HSum),
    Schur(FormalSum<Partition>),
    Qsym(MSum),
    QsymSeries(GradedSeries),
    PairNsym(PairSum<Composition, Composition>),
    PairSym(PairSum<Partition, Partition>),
    PairQsym(PairSum<Composition, Composition>),
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Perm(_) => "permutation sum",
            Value::Nsym(_) => "X element",
            Value::Sym(_) => "h element",
            Value::Schur(_) => "s element",
            Value::Qsym(_) => "M element",
            Value::QsymSeries(_) => "M series",
            Value::PairNsym(_) => "X tensor",
            Value::PairSym(_) => "h tensor",
            Value::PairQsym(_) => "M tensor",
        }
    }
}

fn eval_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Eval {
        offset,
        message: message.into(),
    }
}

fn lift(offset: usize, r: std::result::Result<impl Into<Value>, Error>) -> Result<Value> {
    r.map(Into::into).map_err(|e| eval_error(offset, e.to_string()))
}

impl From<XSum> for Value {
    fn from(v: XSum) -> Self {
        Value::Nsym(v)
    }
}

impl From<HSum> for Value {
    fn from(v: HSum) -> Self {
        Value::Sym(v)
    }
}

/// Evaluates a parsed expression.
pub fn eval(expr: &Expr) -> Result<Value> {
    match expr {
        Expr::Scalar(v, _) => Ok(Value::Scalar(v.clone())),
        Expr::AtomX(alpha, _) => Ok(Value::Nsym(FormalSum::singleton(alpha.clone()))),
        Expr::AtomM(alpha, _) => Ok(Value::Qsym(FormalSum::singleton(alpha.clone()))),
        Expr::AtomH(lambda, _) => Ok(Value::Sym(FormalSum::singleton(lambda.clone()))),
        Expr::AtomS(lambda, _) => Ok(Value::Schur(FormalSum::singleton(lambda.clone()))),
        Expr::AtomP(sigma, _) => Ok(Value::Perm(FormalSum::singleton(sigma.clone()))),
        Expr::Neg(inner, _) => {
            let v = eval(inner)?;
            Ok(match v {
                Value::Scalar(x) => Value::Scalar(-x),
                Value::Perm(x) => Value::Perm(x.neg()),
                Value::Nsym(x) => Value::Nsym(x.neg()),
                Value::Sym(x) => Value::Sym(x.neg()),
                Value::Schur(x) => Value::Schur(x.neg()),
                Value::Qsym(x) => Value::Qsym(x.neg()),
                Value::PairNsym(x) => Value::PairNsym(x.neg()),
                Value::PairSym(x) => Value::PairSym(x.neg()),
                Value::PairQsym(x) => Value::PairQsym(x.neg()),
                Value::QsymSeries(_) => {
                    return Err(eval_error(inner.offset(), "cannot negate a series"))
                }
            })
        }
        Expr::Add(a, b, offset) => add_values(eval(a)?, eval(b)?, *offset, false),
        Expr::Sub(a, b, offset) => add_values(eval(a)?, eval(b)?, *offset, true),
        Expr::Binary(kind, a, b, offset) => binary(*kind, eval(a)?, eval(b)?, *offset),
        Expr::Call(name, args, offset) => call(name, args, *offset),
    }
}

fn add_values(a: Value, b: Value, offset: usize, subtract: bool) -> Result<Value> {
    let b = if subtract {
        match b {
            Value::Scalar(x) => Value::Scalar(-x),
            Value::Perm(x) => Value::Perm(x.neg()),
            Value::Nsym(x) => Value::Nsym(x.neg()),
            Value::Sym(x) => Value::Sym(x.neg()),
            Value::Schur(x) => Value::Schur(x.neg()),
            Value::Qsym(x) => Value::Qsym(x.neg()),
            Value::PairNsym(x) => Value::PairNsym(x.neg()),
            Value::PairSym(x) => Value::PairSym(x.neg()),
            Value::PairQsym(x) => Value::PairQsym(x.neg()),
            Value::QsymSeries(_) => {
                return Err(eval_error(offset, "cannot subtract a series"))
            }
        }
    } else {
        b
    };
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y)),
        (Value::Perm(x), Value::Perm(y)) => Ok(Value::Perm(x.add(&y))),
        (Value::Nsym(x), Value::Nsym(y)) => Ok(Value::Nsym(x.add(&y))),
        (Value::Sym(x), Value::Sym(y)) => Ok(Value::Sym(x.add(&y))),
        (Value::Schur(x), Value::Schur(y)) => Ok(Value::Schur(x.add(&y))),
        (Value::Qsym(x), Value::Qsym(y)) => Ok(Value::Qsym(x.add(&y))),
        (Value::PairNsym(x), Value::PairNsym(y)) => Ok(Value::PairNsym(x.add(&y))),
        (Value::PairSym(x), Value::PairSym(y)) => Ok(Value::PairSym(x.add(&y))),
        (Value::PairQsym(x), Value::PairQsym(y)) => Ok(Value::PairQsym(x.add(&y))),
        (a, b) => Err(eval_error(
            offset,
            format!("cannot add {} and {}", a.type_name(), b.type_name()),
        )),
    }
}

fn binary(kind: OpKind, a: Value, b: Value, offset: usize) -> Result<Value> {
    use OpKind::*;
    match (kind, a, b) {
        (Star, Value::Scalar(c), v) | (Star, v, Value::Scalar(c)) => Ok(match v {
            Value::Scalar(x) => Value::Scalar(x * c),
            Value::Perm(x) => Value::Perm(x.scale(&c)),
            Value::Nsym(x) => Value::Nsym(x.scale(&c)),
            Value::Sym(x) => Value::Sym(x.scale(&c)),
            Value::Schur(x) => Value::Schur(x.scale(&c)),
            Value::Qsym(x) => Value::Qsym(x.scale(&c)),
            Value::PairNsym(x) => Value::PairNsym(x.scale(&c)),
            Value::PairSym(x) => Value::PairSym(x.scale(&c)),
            Value::PairQsym(x) => Value::PairQsym(x.scale(&c)),
            Value::QsymSeries(_) => {
                return Err(eval_error(offset, "cannot scale a series"))
            }
        }),
        (Smash, Value::Perm(x), Value::Perm(y)) => {
            Ok(Value::Perm(perm_algebra::smash_sum(&x, &y)))
        }
        (Smash, Value::Nsym(x), Value::Nsym(y)) => Ok(Value::Nsym(nsym::smash_sum(&x, &y))),
        (Smash, Value::Sym(x), Value::Sym(y)) => Ok(Value::Sym(sym::smash_sum(&x, &y))),
        (Star, Value::Perm(x), Value::Perm(y)) => {
            Ok(Value::Perm(perm_algebra::convolve_sum(&x, &y)))
        }
        (Star, Value::Nsym(x), Value::Nsym(y)) => Ok(Value::Nsym(nsym::convolve_sum(&x, &y))),
        (Star, Value::Sym(x), Value::Sym(y)) => Ok(Value::Sym(sym::external_sum(&x, &y))),
        (Internal, Value::Perm(x), Value::Perm(y)) => {
            Ok(Value::Perm(perm_algebra::compose_sum(&x, &y)))
        }
        (Internal, Value::Nsym(x), Value::Nsym(y)) => lift(offset, nsym::internal_sum(&x, &y)),
        (Internal, Value::Sym(x), Value::Sym(y)) => lift(offset, sym::internal_sum(&x, &y)),
        (QuasiShuffle, Value::Qsym(x), Value::Qsym(y)) => {
            Ok(Value::Qsym(qsym::quasi_shuffle_sum(&x, &y)))
        }
        (Star, Value::Qsym(_), Value::Qsym(_)) => Err(eval_error(
            offset,
            "`*` is not defined on M elements; use `.` for the quasi-shuffle",
        )),
        (kind, a, b) => {
            let symbol = match kind {
                Smash => "#",
                Star => "*",
                Internal => "o",
                QuasiShuffle => ".",
            };
            Err(eval_error(
                offset,
                format!(
                    "`{symbol}` is not defined on {} and {}",
                    a.type_name(),
                    b.type_name()
                ),
            ))
        }
    }
}

fn call(name: &str, args: &[Expr], offset: usize) -> Result<Value> {
    let arity_ok = match name {
        "pair" => args.len() == 2,
        "antipode" => args.len() == 1 || args.len() == 2,
        _ => args.len() == 1,
    };
    if !arity_ok {
        return Err(eval_error(
            offset,
            format!("`{name}` got {} arguments", args.len()),
        ));
    }
    let first = eval(&args[0])?;
    match (name, first) {
        ("coprod", Value::Nsym(x)) => Ok(Value::PairNsym(nsym::coproduct_sum(&x))),
        ("coprod", Value::Sym(x)) => Ok(Value::PairSym(sym::coproduct_sum(&x))),
        ("coprodCirc", Value::Qsym(x)) => Ok(Value::PairQsym(qsym::coproduct_circ(&x))),
        ("coprodStar", Value::Qsym(x)) => Ok(Value::PairQsym(qsym::coproduct_star(&x))),
        ("coprodSmash", Value::Qsym(x)) => Ok(Value::PairQsym(qsym::coproduct_smash(&x))),
        ("antipode", Value::Nsym(x)) => {
            if args.len() == 2 {
                return Err(eval_error(
                    offset,
                    "truncation argument only applies to M elements",
                ));
            }
            Ok(Value::Nsym(nsym::antipode(&x)))
        }
        ("antipode", Value::Qsym(x)) => {
            let d = if args.len() == 2 {
                match eval(&args[1])? {
                    Value::Scalar(v) => v.try_into().map_err(|_| {
                        eval_error(args[1].offset(), "truncation degree must be a small non-negative integer")
                    })?,
                    other => {
                        return Err(eval_error(
                            args[1].offset(),
                            format!("truncation degree must be a scalar, found {}", other.type_name()),
                        ))
                    }
                }
            } else {
                x.max_degree().unwrap_or(0)
            };
            Ok(Value::QsymSeries(qsym::antipode_smash(&x, d)))
        }
        ("phi", Value::Nsym(x)) => Ok(Value::Sym(sym::phi(&x))),
        ("psi", Value::Nsym(x)) => Ok(Value::Nsym(nsym::psi_sum(&x))),
        ("embed", Value::Nsym(x)) => Ok(Value::Perm(nsym::embed_sum(&x))),
        ("schur", Value::Sym(x)) => Ok(Value::Schur(sym::schur_expand(&x))),
        ("pair", Value::Qsym(f)) => match eval(&args[1])? {
            Value::Nsym(u) => Ok(Value::Scalar(qsym::pairing(&f, &u))),
            other => Err(eval_error(
                args[1].offset(),
                format!("`pair` needs an X element second, found {}", other.type_name()),
            )),
        },
        (_, v) => Err(eval_error(
            offset,
            format!("`{name}` is not defined on {}", v.type_name()),
        )),
    }
}

fn coeff_terms<K: Ord + Clone>(
    sum: &FormalSum<K>,
    mut key_fmt: impl FnMut(&K) -> String,
) -> Vec<serde_json::Value> {
    sum.terms()
        .map(|(k, c)| json!({"key": key_fmt(k), "coeff": c.to_string()}))
        .collect()
}

pub fn format_permutation(p: &Permutation) -> String {
    format!("P{p}")
}

pub fn render_composition_sum(prefix: &str, s: &FormalSum<Composition>) -> String {
    s.render(|k| format!("{prefix}{k}"))
}

pub fn render_partition_sum(prefix: &str, s: &FormalSum<Partition>) -> String {
    s.render(|k| format!("{prefix}{k}"))
}

/// Renders a value as plain text with keys in canonical order.
pub fn render_text(v: &Value) -> String {
    match v {
        Value::Scalar(x) => x.to_string(),
        Value::Perm(s) => s.render(format_permutation),
        Value::Nsym(s) => render_composition_sum("X", s),
        Value::Sym(s) => render_partition_sum("h", s),
        Value::Schur(s) => render_partition_sum("s", s),
        Value::Qsym(s) => render_composition_sum("M", s),
        Value::QsymSeries(s) => format!(
            "{}  (truncated at degree {})",
            render_composition_sum("M", &s.flatten()),
            s.truncation()
        ),
        Value::PairNsym(s) => s.render(|(a, b)| format!("X{a}(x)X{b}")),
        Value::PairSym(s) => s.render(|(a, b)| format!("h{a}(x)h{b}")),
        Value::PairQsym(s) => s.render(|(a, b)| format!("M{a}(x)M{b}")),
    }
}

/// Renders a value as JSON: a scalar, or a list of key/coefficient terms.
pub fn render_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Scalar(x) => json!({"kind": "scalar", "value": x.to_string()}),
        Value::Perm(s) => json!({"kind": "sum", "terms": coeff_terms(s, format_permutation)}),
        Value::Nsym(s) => {
            json!({"kind": "sum", "terms": coeff_terms(s, |k| format!("X{k}"))})
        }
        Value::Sym(s) => {
            json!({"kind": "sum", "terms": coeff_terms(s, |k| format!("h{k}"))})
        }
        Value::Schur(s) => {
            json!({"kind": "sum", "terms": coeff_terms(s, |k| format!("s{k}"))})
        }
        Value::Qsym(s) => {
            json!({"kind": "sum", "terms": coeff_terms(s, |k| format!("M{k}"))})
        }
        Value::QsymSeries(s) => json!({
            "kind": "series",
            "truncated_at": s.truncation(),
            "terms": coeff_terms(&s.flatten(), |k| format!("M{k}")),
        }),
        Value::PairNsym(s) => json!({
            "kind": "tensor",
            "terms": coeff_terms(s, |(a, b)| format!("X{a}(x)X{b}")),
        }),
        Value::PairSym(s) => json!({
            "kind": "tensor",
            "terms": coeff_terms(s, |(a, b)| format!("h{a}(x)h{b}")),
        }),
        Value::PairQsym(s) => json!({
            "kind": "tensor",
            "terms": coeff_terms(s, |(a, b)| format!("M{a}(x)M{b}")),
        }),
    }
}

/// Parse-and-evaluate in one step.
pub fn run(text: &str) -> Result<Value> {
    eval(&parse(text)?)
}
