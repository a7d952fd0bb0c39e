//! The graded algebra of formal sums of permutations of all sizes, with
//! three products: degreewise composition, convolution, and the smash
//! product that interpolates between them.

use crate::combinatorics::{max_shuffle, shuffles, Permutation};
use crate::formal::FormalSum;

/// Degreewise composition product: `sigma . tau` when degrees match, zero
/// otherwise.
pub fn compose(sigma: &Permutation, tau: &Permutation) -> FormalSum<Permutation> {
    if sigma.degree() != tau.degree() {
        return FormalSum::zero();
    }
    FormalSum::singleton(sigma.compose(tau))
}

/// Convolution product: shuffle the block sum `sigma x tau` in every way.
/// The resulting permutations are pairwise distinct.
pub fn convolve(sigma: &Permutation, tau: &Permutation) -> FormalSum<Permutation> {
    let p = sigma.degree();
    let q = tau.degree();
    let block = sigma.times(tau);
    let mut out = FormalSum::zero();
    for xi in shuffles(p, q) {
        out.add_term(xi.compose(&block), 1.into());
    }
    debug_assert_eq!(
        out.len(),
        shuffles(p, q).len(),
        "convolution terms must be distinct"
    );
    out
}

/// The degree-`n` component of the smash product of basis permutations,
/// for `max(p,q) <= n <= p+q`.
pub fn smash_component(sigma: &Permutation, tau: &Permutation, n: usize) -> FormalSum<Permutation> {
    let p = sigma.degree();
    let q = tau.degree();
    if n < p.max(q) || n > p + q {
        return FormalSum::zero();
    }
    let beta = max_shuffle(2 * n - p - q, p + q - n);
    let right = Permutation::identity(n - q).times(tau);
    let mut out = FormalSum::zero();
    for eta in shuffles(p + q - n, n - q) {
        let middle = sigma.compose(&eta).times(&Permutation::identity(n - p));
        let partial = middle.compose(&beta).compose(&right);
        for xi in shuffles(p, n - p) {
            out.add_term(xi.compose(&partial), 1.into());
        }
    }
    out
}

/// Smash product of basis permutations: the sum of the components over all
/// degrees from `max(p,q)` to `p+q`. The top component is the convolution;
/// at `p = q` the bottom component is the composition.
pub fn smash(sigma: &Permutation, tau: &Permutation) -> FormalSum<Permutation> {
    let p = sigma.degree();
    let q = tau.degree();
    let mut out = FormalSum::zero();
    for n in p.max(q)..=p + q {
        out = out.add(&smash_component(sigma, tau, n));
    }
    out
}

/// Bilinear extension of [`compose`].
pub fn compose_sum(a: &FormalSum<Permutation>, b: &FormalSum<Permutation>) -> FormalSum<Permutation> {
    a.apply_bilinear(b, compose)
}

/// Bilinear extension of [`convolve`].
pub fn convolve_sum(a: &FormalSum<Permutation>, b: &FormalSum<Permutation>) -> FormalSum<Permutation> {
    a.apply_bilinear(b, convolve)
}

/// Bilinear extension of [`smash`].
pub fn smash_sum(a: &FormalSum<Permutation>, b: &FormalSum<Permutation>) -> FormalSum<Permutation> {
    a.apply_bilinear(b, smash)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::permutations;
    use crate::tensor_oracle::{endo_compose, endo_convolve, endo_smash};

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    fn sum_of(list: &[&[usize]]) -> FormalSum<Permutation> {
        let mut out = FormalSum::zero();
        for images in list {
            out.add_term(perm(images), 1.into());
        }
        out
    }

    #[test]
    fn compose_mismatched_degrees_vanishes() {
        assert!(compose(&perm(&[1]), &perm(&[1, 2])).is_zero());
    }

    #[test]
    fn convolve_examples() {
        assert_eq!(
            convolve(&perm(&[1]), &perm(&[1])),
            sum_of(&[&[1, 2], &[2, 1]])
        );
        assert_eq!(
            convolve(&perm(&[2, 1]), &perm(&[1])),
            sum_of(&[&[2, 1, 3], &[3, 1, 2], &[3, 2, 1]])
        );
        assert_eq!(
            convolve(&perm(&[1]), &perm(&[2, 1])),
            sum_of(&[&[1, 3, 2], &[2, 3, 1], &[3, 2, 1]])
        );
    }

    #[test]
    fn convolve_unit_is_empty_permutation() {
        let unit = Permutation::empty();
        for sigma in permutations(3) {
            assert_eq!(convolve(&sigma, &unit), FormalSum::singleton(sigma.clone()));
            assert_eq!(convolve(&unit, &sigma), FormalSum::singleton(sigma.clone()));
        }
    }

    #[test]
    fn smash_identity_with_identity() {
        assert_eq!(
            smash(&perm(&[1]), &perm(&[1])),
            sum_of(&[&[1], &[1, 2], &[2, 1]])
        );
    }

    #[test]
    fn smash_endpoints() {
        for sigma in permutations(2) {
            for tau in permutations(2) {
                let s = smash(&sigma, &tau);
                assert_eq!(s.graded_component(4), convolve(&sigma, &tau));
                assert_eq!(s.graded_component(2), compose(&sigma, &tau));
            }
        }
        for sigma in permutations(1) {
            for tau in permutations(3) {
                let s = smash(&sigma, &tau);
                assert_eq!(s.graded_component(4), convolve(&sigma, &tau));
                assert!(s.graded_component(2).is_zero());
            }
        }
    }

    #[test]
    fn smash_middle_component_frozen() {
        let s = smash(&perm(&[1]), &perm(&[2, 1]));
        assert_eq!(s.graded_component(2), sum_of(&[&[1, 2], &[2, 1]]));
    }

    #[test]
    fn smash_is_noncommutative() {
        let left = smash(&perm(&[2, 1]), &perm(&[1]));
        let right = smash(&perm(&[1]), &perm(&[2, 1]));
        assert_ne!(left, right);
        // the difference is in the top component only
        assert_eq!(left.graded_component(2), right.graded_component(2));
        assert_ne!(left.graded_component(3), right.graded_component(3));
    }

    #[test]
    fn closed_formulas_match_word_model() {
        // asymmetric degree pairs matter: the cyclic rotation inside the
        // smash diagram first becomes visible at (p, q) = (1, 3)
        for p in 0..=3 {
            for q in 0..=3 {
                for sigma in permutations(p) {
                    for tau in permutations(q) {
                        let fs = FormalSum::singleton(sigma.clone());
                        let ft = FormalSum::singleton(tau.clone());
                        assert_eq!(
                            convolve(&sigma, &tau),
                            endo_convolve(&fs, &ft).unwrap(),
                            "convolve {sigma} {tau}"
                        );
                        assert_eq!(
                            smash(&sigma, &tau),
                            endo_smash(&fs, &ft).unwrap(),
                            "smash {sigma} {tau}"
                        );
                        if p == q {
                            assert_eq!(
                                compose(&sigma, &tau),
                                endo_compose(&ft, &fs).unwrap(),
                                "compose {sigma} {tau}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn smash_associative_small() {
        let one = FormalSum::singleton(perm(&[1]));
        let ab = smash_sum(&smash_sum(&one, &one), &one);
        let ba = smash_sum(&one, &smash_sum(&one, &one));
        assert_eq!(ab, ba);
        let x = sum_of(&[&[1, 2], &[2, 1]]);
        let y = FormalSum::singleton(perm(&[1]));
        assert_eq!(
            smash_sum(&smash_sum(&x, &y), &x),
            smash_sum(&x, &smash_sum(&y, &x))
        );
    }
}
