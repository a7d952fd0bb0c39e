//! Descent classes: for a composition `alpha` of `n`, `X[alpha]` is the sum
//! of all permutations of `n` whose descent positions lie inside the partial
//! sums of `alpha`. These classes span a subalgebra of the permutation
//! algebra under all three products, with structure constants given by
//! margin matrices.

use std::collections::BTreeMap;

use crate::combinatorics::{
    compositions, margin_matrices, permutations, Composition, DescentSubset, Permutation,
};
use crate::error::{Error, Result};
use crate::formal::{FormalSum, PairSum};

pub type XSum = FormalSum<Composition>;

/// The unit `X[]`.
pub fn unit() -> XSum {
    FormalSum::singleton(Composition::empty())
}

/// The sum of all permutations whose descent set lies inside the partial
/// sums of `alpha`.
pub fn embed(alpha: &Composition) -> FormalSum<Permutation> {
    let bound = alpha.to_descent_set();
    let mut out = FormalSum::zero();
    for sigma in permutations(alpha.degree()) {
        if sigma.descent_set().is_subset_of(&bound) {
            out.add_term(sigma, 1.into());
        }
    }
    out
}

pub fn embed_sum(x: &XSum) -> FormalSum<Permutation> {
    x.apply_linear(embed)
}

/// Rewrites a sum of permutations in the descent-class basis. Fails unless,
/// in every degree, the coefficient is constant on each exact-descent-set
/// class.
pub fn expand_in_x(a: &FormalSum<Permutation>) -> Result<XSum> {
    let mut out = FormalSum::zero();
    for n in a.degrees() {
        let component = a.graded_component(n);
        let mut class_coeff: BTreeMap<DescentSubset, num_bigint::BigInt> = BTreeMap::new();
        for sigma in permutations(n) {
            let coeff = component.coefficient(&sigma);
            let class = sigma.descent_set();
            match class_coeff.get(&class) {
                None => {
                    class_coeff.insert(class, coeff);
                }
                Some(existing) => {
                    if *existing != coeff {
                        return Err(Error::NotDescentClosed(n));
                    }
                }
            }
        }
        // exact-class coefficients d_K determine the X coordinates by
        // inclusion-exclusion over supersets
        for alpha in compositions(n) {
            let j = alpha.to_descent_set();
            let mut c = num_bigint::BigInt::from(0);
            for beta in compositions(n) {
                let k = beta.to_descent_set();
                if j.is_subset_of(&k) {
                    let sign = (k.positions().len() - j.positions().len()) % 2;
                    let d = class_coeff.get(&k).cloned().unwrap_or_default();
                    if sign == 0 {
                        c += d;
                    } else {
                        c -= d;
                    }
                }
            }
            out.add_term(alpha, c);
        }
    }
    Ok(out)
}

/// Convolution product: concatenation of compositions.
pub fn convolve(alpha: &Composition, beta: &Composition) -> XSum {
    FormalSum::singleton(alpha.concat(beta))
}

/// The degree-`n` component of the smash product: one term per margin
/// matrix, reading off its nonzero entries row by row.
pub fn smash_component(alpha: &Composition, beta: &Composition, n: usize) -> XSum {
    let p = alpha.degree();
    let q = beta.degree();
    if n < p.max(q) || n > p + q {
        return FormalSum::zero();
    }
    let mut out = FormalSum::zero();
    for m in margin_matrices(alpha, beta, n).expect("degree in range") {
        out.add_term(m.reading_composition(), 1.into());
    }
    out
}

/// Smash product of descent classes, summed over all degrees from
/// `max(p,q)` to `p+q`.
pub fn smash(alpha: &Composition, beta: &Composition) -> XSum {
    let p = alpha.degree();
    let q = beta.degree();
    let mut out = FormalSum::zero();
    for n in p.max(q)..=p + q {
        out = out.add(&smash_component(alpha, beta, n));
    }
    out
}

/// Degree-preserving internal product: margin matrices with zero border,
/// i.e. plain contingency tables with column sums `alpha` and row sums
/// `beta`.
pub fn internal(alpha: &Composition, beta: &Composition) -> Result<XSum> {
    let p = alpha.degree();
    let q = beta.degree();
    if p != q {
        return Err(Error::DegreeMismatch { left: p, right: q });
    }
    Ok(smash_component(alpha, beta, p))
}

/// Coproduct: split every part `a_i = b_i + c_i` with `b_i, c_i >= 0` and
/// drop zero parts on each side.
pub fn coproduct(alpha: &Composition) -> PairSum<Composition, Composition> {
    let mut out: PairSum<Composition, Composition> =
        FormalSum::singleton((Composition::empty(), Composition::empty()));
    for &a in alpha.parts() {
        let mut next = FormalSum::zero();
        for ((left, right), c) in out.terms() {
            for b in 0..=a {
                let mut l = left.clone();
                let mut r = right.clone();
                if b > 0 {
                    l = l.concat(&Composition::new(vec![b]).expect("positive part"));
                }
                if a - b > 0 {
                    r = r.concat(&Composition::new(vec![a - b]).expect("positive part"));
                }
                next.add_term((l, r), c.clone());
            }
        }
        out = next;
    }
    out
}

pub fn coproduct_sum(x: &XSum) -> PairSum<Composition, Composition> {
    x.apply_linear(coproduct)
}

pub fn convolve_sum(a: &XSum, b: &XSum) -> XSum {
    a.apply_bilinear(b, convolve)
}

pub fn smash_sum(a: &XSum, b: &XSum) -> XSum {
    a.apply_bilinear(b, smash)
}

pub fn internal_sum(a: &XSum, b: &XSum) -> Result<XSum> {
    let mut out = FormalSum::zero();
    for (alpha, ca) in a.terms() {
        for (beta, cb) in b.terms() {
            let product = internal(alpha, beta)?;
            out = out.add(&product.scale(&(ca * cb)));
        }
    }
    Ok(out)
}

fn antipode_basis(alpha: &Composition, cache: &mut BTreeMap<Composition, XSum>) -> XSum {
    if let Some(hit) = cache.get(alpha) {
        return hit.clone();
    }
    let n = alpha.degree();
    let mut out = FormalSum::singleton(alpha.clone()).neg();
    if n > 0 {
        for ((gamma, delta), c) in coproduct(alpha).terms() {
            if gamma.degree() < n && delta.degree() < n {
                let s_gamma = antipode_basis(gamma, cache);
                let piece = smash_sum(&s_gamma, &FormalSum::singleton(delta.clone()));
                out = out.sub(&piece.scale(c));
            }
        }
    } else {
        out = unit();
    }
    cache.insert(alpha.clone(), out.clone());
    out
}

/// Antipode of the Hopf algebra whose product is the smash product and
/// whose coproduct is [`coproduct`], by the connected-graded recursion
/// `S(u) = -u - sum S(u') # u''` over the middle coproduct terms. Not
/// degree-homogeneous: lower-degree terms appear.
pub fn antipode(x: &XSum) -> XSum {
    let mut cache = BTreeMap::new();
    x.apply_linear(|alpha| antipode_basis(alpha, &mut cache))
}

/// Antipodes of every `X[alpha]` with degree at most `max_degree`, sharing
/// one recursion cache.
pub fn antipode_table(max_degree: usize) -> BTreeMap<Composition, XSum> {
    let mut cache = BTreeMap::new();
    for n in 0..=max_degree {
        for alpha in compositions(n) {
            antipode_basis(&alpha, &mut cache);
        }
    }
    cache
}

/// The smash product of the single-part classes of `alpha`, in order. Sends
/// the convolution structure to the smash structure; its top-degree term is
/// `X[alpha]` itself.
pub fn psi(alpha: &Composition) -> XSum {
    let mut out = unit();
    for &a in alpha.parts() {
        let factor = FormalSum::singleton(Composition::new(vec![a]).expect("positive part"));
        out = smash_sum(&out, &factor);
    }
    out
}

pub fn psi_sum(x: &XSum) -> XSum {
    x.apply_linear(psi)
}
