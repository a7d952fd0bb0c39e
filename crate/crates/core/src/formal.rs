//! Formal integer linear combinations of basis keys, with exact `BigInt`
//! coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Basis keys with a grading.
pub trait Graded {
    fn degree(&self) -> usize;
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

impl<A: Graded, B: Graded, C: Graded> Graded for (A, B, C) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree() + self.2.degree()
    }
}

/// A finite linear combination of keys `K` over the integers. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(key: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, BigInt::one());
        FormalSum { terms }
    }

    pub fn term(key: K, coeff: impl Into<BigInt>) -> Self {
        let mut sum = FormalSum::zero();
        sum.add_term(key, coeff.into());
        sum
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coefficient(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.terms() {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return FormalSum::zero();
        }
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Extend a map on keys linearly.
    pub fn apply_linear<K2, F>(&self, mut f: F) -> FormalSum<K2>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> FormalSum<K2>,
    {
        let mut out = FormalSum::zero();
        for (k, c) in self.terms() {
            let image = f(k);
            for (k2, c2) in image.terms() {
                out.add_term(k2.clone(), c * c2);
            }
        }
        out
    }

    /// Extend a map on pairs of keys bilinearly.
    pub fn apply_bilinear<K2, K3, F>(&self, other: &FormalSum<K2>, mut f: F) -> FormalSum<K3>
    where
        K2: Ord + Clone,
        K3: Ord + Clone,
        F: FnMut(&K, &K2) -> FormalSum<K3>,
    {
        let mut out = FormalSum::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                let image = f(k1, k2);
                for (k3, c3) in image.terms() {
                    out.add_term(k3.clone(), c1 * c2 * c3);
                }
            }
        }
        out
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (K, BigInt)>) -> Self {
        let mut out = FormalSum::zero();
        for (k, c) in pairs {
            out.add_term(k, c);
        }
        out
    }

    /// Renders terms in key order, with signs and unit coefficients folded
    /// into the usual notation.
    pub fn render(&self, mut key_fmt: impl FnMut(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c < &BigInt::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&key_fmt(k));
        }
        out
    }
}

impl<K: Ord + Clone + Graded> FormalSum<K> {
    /// Terms of degree exactly `n`.
    pub fn graded_component(&self, n: usize) -> Self {
        FormalSum {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Largest degree with a nonzero term, or `None` for the zero sum.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.degree()).max()
    }

    /// Degrees appearing with a nonzero term, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|k| k.degree()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

/// A sum of elementary tensors with keys in two factors.
pub type PairSum<A, B> = FormalSum<(A, B)>;

/// Tensor product of two sums: keys pair up, coefficients multiply.
pub fn tensor<A, B>(left: &FormalSum<A>, right: &FormalSum<B>) -> PairSum<A, B>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    let mut out = FormalSum::zero();
    for (a, ca) in left.terms() {
        for (b, cb) in right.terms() {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}
