//! Ordered alphabets and evaluation of monomial quasi-symmetric functions
//! on them. An alphabet is a totally ordered list of signed monomial
//! letters; sums, reverse-lexicographic products, adjoined units, words, and
//! strictly increasing words build composite alphabets out of base variable
//! sets.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::combinatorics::{compositions, Composition};
use crate::error::{Error, Result};
use crate::formal::{FormalSum, Graded, PairSum};

/// A base variable `x_{group,index}`; groups keep independent variable sets
/// apart (for two-sided extraction).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub group: u8,
    pub index: u16,
}

/// A monomial in base variables; exponents are positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<Var, usize>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(BTreeMap::from([(v, 1)]))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            *out.entry(v).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn pow(&self, k: usize) -> Monomial {
        Monomial(self.0.iter().map(|(&v, &e)| (v, e * k)).collect())
    }

    pub fn exponent(&self, v: Var) -> usize {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Var, &usize)> {
        self.0.iter()
    }
}

impl Graded for Monomial {
    fn degree(&self) -> usize {
        self.0.values().sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            let name = (b'x' + v.group) as char;
            write!(f, "{}{}", name, v.index)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub type Polynomial = FormalSum<Monomial>;

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.apply_bilinear(b, |m, n| FormalSum::singleton(m.mul(n)))
}

/// How the antipode evaluation signs a chosen letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    /// Every chosen letter contributes one factor of -1, so a term with `r`
    /// parts gets `(-1)^r`.
    GlobalPartCount,
    /// A chosen letter of weight `l` (its length as a word) contributes
    /// `(-1)^l`.
    PerLetterLength,
}

/// Chain shape used when evaluating a monomial function over the letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainMode {
    StrictlyIncreasing,
    WeaklyDecreasing,
}

/// An alphabet expression. `Negative` may appear only at the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetExpr {
    /// `vars` variables in one group, ordered by index.
    Base { group: u8, vars: usize },
    /// Disjoint union; every letter of the first summand precedes every
    /// letter of the second.
    Sum(Box<AlphabetExpr>, Box<AlphabetExpr>),
    /// Pairs ordered reverse-lexicographically: last factor first.
    Product(Box<AlphabetExpr>, Box<AlphabetExpr>),
    /// A unit letter adjoined below everything.
    OnePlus(Box<AlphabetExpr>),
    /// Product of two alphabets-with-unit, with the unit-unit letter
    /// removed.
    ProductMinusOne(Box<AlphabetExpr>, Box<AlphabetExpr>),
    /// Nonempty words of length at most `max_len` in reverse-lexicographic
    /// order.
    Star(Box<AlphabetExpr>, usize),
    /// Strictly increasing nonempty words of length at most `max_len`.
    Exp(Box<AlphabetExpr>, usize),
    /// Signed evaluation over weakly decreasing chains.
    Negative(Box<AlphabetExpr>, SignConvention),
}

/// One letter: its monomial value, its weight (length as a word over base
/// variables), and the sign it contributes when chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub monomial: Monomial,
    pub weight: usize,
    pub sign: i8,
}

fn letters_inner(expr: &AlphabetExpr) -> Result<Vec<Letter>> {
    match expr {
        AlphabetExpr::Base { group, vars } => {
            if *vars == 0 {
                return Err(Error::InvalidAlphabet("base alphabet needs variables".into()));
            }
            Ok((1..=*vars)
                .map(|index| Letter {
                    monomial: Monomial::var(Var {
                        group: *group,
                        index: index as u16,
                    }),
                    weight: 1,
                    sign: 1,
                })
                .collect())
        }
        AlphabetExpr::Sum(a, b) => {
            let mut out = letters_inner(a)?;
            out.extend(letters_inner(b)?);
            Ok(out)
        }
        AlphabetExpr::Product(a, b) => {
            let la = letters_inner(a)?;
            let lb = letters_inner(b)?;
            let mut out = Vec::with_capacity(la.len() * lb.len());
            for y in &lb {
                for x in &la {
                    out.push(Letter {
                        monomial: x.monomial.mul(&y.monomial),
                        weight: x.weight + y.weight,
                        sign: x.sign * y.sign,
                    });
                }
            }
            Ok(out)
        }
        AlphabetExpr::OnePlus(a) => {
            let mut out = vec![Letter {
                monomial: Monomial::one(),
                weight: 0,
                sign: 1,
            }];
            out.extend(letters_inner(a)?);
            Ok(out)
        }
        AlphabetExpr::ProductMinusOne(a, b) => {
            let product = letters_inner(&AlphabetExpr::Product(a.clone(), b.clone()))?;
            let (unit_like, rest): (Vec<_>, Vec<_>) = product
                .into_iter()
                .partition(|l| l.monomial == Monomial::one());
            if unit_like.len() != 1 {
                return Err(Error::InvalidAlphabet(
                    "expected exactly one unit letter to remove".into(),
                ));
            }
            Ok(rest)
        }
        AlphabetExpr::Star(a, max_len) => word_letters(&letters_inner(a)?, *max_len, false),
        AlphabetExpr::Exp(a, max_len) => word_letters(&letters_inner(a)?, *max_len, true),
        AlphabetExpr::Negative(..) => Err(Error::InvalidAlphabet(
            "negative alphabet is only supported at the root".into(),
        )),
    }
}

/// Words over the given letters in reverse-lexicographic order: compare the
/// index sequences from the last position backwards, a word that is a
/// suffix of another coming first.
fn word_letters(base: &[Letter], max_len: usize, strictly_increasing: bool) -> Result<Vec<Letter>> {
    if max_len == 0 {
        return Err(Error::InvalidAlphabet("word length bound must be positive".into()));
    }
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::new();
    fn rec(
        base_len: usize,
        max_len: usize,
        strictly_increasing: bool,
        current: &mut Vec<usize>,
        words: &mut Vec<Vec<usize>>,
    ) {
        if !current.is_empty() {
            words.push(current.clone());
        }
        if current.len() == max_len {
            return;
        }
        let start = if strictly_increasing {
            current.last().map_or(0, |&l| l + 1)
        } else {
            0
        };
        for i in start..base_len {
            current.push(i);
            rec(base_len, max_len, strictly_increasing, current, words);
            current.pop();
        }
    }
    rec(base.len(), max_len, strictly_increasing, &mut current, &mut words);
    words.sort_by_key(|w| w.iter().rev().copied().collect::<Vec<_>>());
    Ok(words
        .into_iter()
        .map(|w| {
            let mut monomial = Monomial::one();
            let mut weight = 0;
            let mut sign = 1i8;
            for &i in &w {
                monomial = monomial.mul(&base[i].monomial);
                weight += base[i].weight;
                sign *= base[i].sign;
            }
            Letter {
                monomial,
                weight,
                sign,
            }
        })
        .collect())
}

/// The ordered letters of an alphabet expression together with the chain
/// mode its evaluation uses.
pub fn letters(expr: &AlphabetExpr) -> Result<(ChainMode, Vec<Letter>)> {
    match expr {
        AlphabetExpr::Negative(inner, convention) => {
            let base = letters_inner(inner)?;
            let signed = base
                .into_iter()
                .map(|l| {
                    let factor = match convention {
                        SignConvention::GlobalPartCount => -1,
                        SignConvention::PerLetterLength => {
                            if l.weight % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        }
                    };
                    Letter {
                        sign: l.sign * factor,
                        ..l
                    }
                })
                .collect();
            Ok((ChainMode::WeaklyDecreasing, signed))
        }
        _ => Ok((ChainMode::StrictlyIncreasing, letters_inner(expr)?)),
    }
}

/// Evaluates a monomial-basis element on an alphabet: for each composition
/// key, sum over chains of letters (strictly increasing, or weakly
/// decreasing in negative mode) of the signed product of letter values
/// raised to the parts. Terms of degree above `max_degree` are dropped
/// during generation when a bound is given.
pub fn evaluate_bounded(
    f: &FormalSum<Composition>,
    expr: &AlphabetExpr,
    max_degree: Option<usize>,
) -> Result<Polynomial> {
    let (mode, letters) = letters(expr)?;
    let mut out = FormalSum::zero();
    for (alpha, coeff) in f.terms() {
        let value = evaluate_key(alpha, mode, &letters, max_degree);
        out = out.add(&value.scale(coeff));
    }
    Ok(out)
}

pub fn evaluate(f: &FormalSum<Composition>, expr: &AlphabetExpr) -> Result<Polynomial> {
    evaluate_bounded(f, expr, None)
}

fn evaluate_key(
    alpha: &Composition,
    mode: ChainMode,
    letters: &[Letter],
    max_degree: Option<usize>,
) -> Polynomial {
    let parts = alpha.parts();
    let mut out = FormalSum::zero();
    let mut chain: Vec<usize> = Vec::with_capacity(parts.len());
    fn rec(
        parts: &[usize],
        pos: usize,
        degree_so_far: usize,
        acc: &Monomial,
        sign: i8,
        mode: ChainMode,
        letters: &[Letter],
        max_degree: Option<usize>,
        chain: &mut Vec<usize>,
        out: &mut Polynomial,
    ) {
        if pos == parts.len() {
            out.add_term(acc.clone(), BigInt::from(sign));
            return;
        }
        let range: Box<dyn Iterator<Item = usize>> = match (mode, chain.last()) {
            (ChainMode::StrictlyIncreasing, None) => Box::new(0..letters.len()),
            (ChainMode::StrictlyIncreasing, Some(&prev)) => Box::new(prev + 1..letters.len()),
            (ChainMode::WeaklyDecreasing, None) => Box::new(0..letters.len()),
            (ChainMode::WeaklyDecreasing, Some(&prev)) => Box::new(0..=prev),
        };
        for i in range {
            let step = letters[i].monomial.degree() * parts[pos];
            let degree = degree_so_far + step;
            if let Some(bound) = max_degree {
                if degree > bound {
                    continue;
                }
            }
            let next = acc.mul(&letters[i].monomial.pow(parts[pos]));
            chain.push(i);
            rec(
                parts,
                pos + 1,
                degree,
                &next,
                sign * letters[i].sign,
                mode,
                letters,
                max_degree,
                chain,
                out,
            );
            chain.pop();
        }
    }
    rec(
        parts,
        0,
        0,
        &Monomial::one(),
        1,
        mode,
        letters,
        max_degree,
        &mut chain,
        &mut out,
    );
    out
}

fn leading_monomial(group: u8, alpha: &Composition) -> Monomial {
    let mut m = Monomial::one();
    for (i, &a) in alpha.parts().iter().enumerate() {
        let v = Var {
            group,
            index: (i + 1) as u16,
        };
        m = m.mul(&Monomial::var(v).pow(a));
    }
    m
}

/// Reads the monomial-basis coordinates of a quasi-symmetric polynomial in
/// one variable group, up to degree `d`: the coefficient of
/// `x_1^{a_1} ... x_r^{a_r}` is the coordinate of `M[a_1,...,a_r]`.
pub fn extract_qsym(
    p: &Polynomial,
    group: u8,
    group_vars: usize,
    d: usize,
) -> Result<FormalSum<Composition>> {
    if group_vars < d {
        return Err(Error::Truncation {
            needed: d,
            have: group_vars,
        });
    }
    let mut out = FormalSum::zero();
    for n in 0..=d {
        for alpha in compositions(n) {
            let c = p.coefficient(&leading_monomial(group, &alpha));
            out.add_term(alpha, c);
        }
    }
    Ok(out)
}

/// Two-group version: coefficients of `x_1^{a_1}..x_r^{a_r} y_1^{b_1}..y_s^{b_s}`
/// give the tensor coordinates, each side up to degree `d`.
pub fn extract_qsym_pair(
    p: &Polynomial,
    group_x: u8,
    group_y: u8,
    group_vars: usize,
    d: usize,
) -> Result<PairSum<Composition, Composition>> {
    if group_vars < d {
        return Err(Error::Truncation {
            needed: d,
            have: group_vars,
        });
    }
    let mut out = FormalSum::zero();
    for nx in 0..=d {
        for alpha in compositions(nx) {
            let mx = leading_monomial(group_x, &alpha);
            for ny in 0..=d {
                for beta in compositions(ny) {
                    let m = mx.mul(&leading_monomial(group_y, &beta));
                    let c = p.coefficient(&m);
                    out.add_term((alpha.clone(), beta.clone()), c);
                }
            }
        }
    }
    Ok(out)
}
