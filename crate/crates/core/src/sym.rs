//! Symmetric functions on the complete homogeneous basis `h[lambda]`,
//! indexed by partitions. The smash product uses the same margin matrices as
//! the descent classes, but only the sorted reading survives; the quotient
//! map `phi` forgets the order of composition parts.

use num_bigint::BigInt;

use crate::combinatorics::{margin_matrices, partitions, Composition, Partition};
use crate::error::{Error, Result};
use crate::formal::{FormalSum, PairSum};
use crate::nsym;

pub type HSum = FormalSum<Partition>;

/// The unit `h[]`.
pub fn unit() -> HSum {
    FormalSum::singleton(Partition::empty())
}

/// External product: multiset union of parts.
pub fn external(lambda: &Partition, mu: &Partition) -> HSum {
    FormalSum::singleton(lambda.merge(mu))
}

/// Degree-`n` component of the smash product: margin matrices read off as
/// partitions.
pub fn smash_component(lambda: &Partition, mu: &Partition, n: usize) -> HSum {
    let p = lambda.degree();
    let q = mu.degree();
    if n < p.max(q) || n > p + q {
        return FormalSum::zero();
    }
    let alpha = lambda.as_composition();
    let beta = mu.as_composition();
    let mut out = FormalSum::zero();
    for m in margin_matrices(&alpha, &beta, n).expect("degree in range") {
        out.add_term(m.reading_partition(), 1.into());
    }
    out
}

/// Smash product on symmetric functions, summed over all degrees from
/// `max(p,q)` to `p+q`. Commutative, unlike the descent-class version.
pub fn smash(lambda: &Partition, mu: &Partition) -> HSum {
    let p = lambda.degree();
    let q = mu.degree();
    let mut out = FormalSum::zero();
    for n in p.max(q)..=p + q {
        out = out.add(&smash_component(lambda, mu, n));
    }
    out
}

/// Degree-preserving internal product (tensor product of representations).
pub fn internal(lambda: &Partition, mu: &Partition) -> Result<HSum> {
    let p = lambda.degree();
    let q = mu.degree();
    if p != q {
        return Err(Error::DegreeMismatch { left: p, right: q });
    }
    Ok(smash_component(lambda, mu, p))
}

/// Coproduct: split every part `l = i + j` and sort each side.
pub fn coproduct(lambda: &Partition) -> PairSum<Partition, Partition> {
    nsym::coproduct(&lambda.as_composition())
        .apply_linear(|(g, h)| FormalSum::singleton((g.sorted(), h.sorted())))
}

pub fn coproduct_sum(x: &HSum) -> PairSum<Partition, Partition> {
    x.apply_linear(coproduct)
}

pub fn external_sum(a: &HSum, b: &HSum) -> HSum {
    a.apply_bilinear(b, external)
}

pub fn smash_sum(a: &HSum, b: &HSum) -> HSum {
    a.apply_bilinear(b, smash)
}

pub fn internal_sum(a: &HSum, b: &HSum) -> Result<HSum> {
    let mut out = FormalSum::zero();
    for (lambda, ca) in a.terms() {
        for (mu, cb) in b.terms() {
            let product = internal(lambda, mu)?;
            out = out.add(&product.scale(&(ca * cb)));
        }
    }
    Ok(out)
}

/// The quotient map from descent classes: sort the composition.
pub fn phi(x: &nsym::XSum) -> HSum {
    x.apply_linear(|alpha| FormalSum::singleton(alpha.sorted()))
}

pub fn phi_pair(
    t: &PairSum<Composition, Composition>,
) -> PairSum<Partition, Partition> {
    t.apply_linear(|(g, h)| FormalSum::singleton((g.sorted(), h.sorted())))
}

/// Number of semistandard tableaux of the given shape whose entry `i+1`
/// appears exactly `content[i]` times: rows weakly increase, columns
/// strictly increase. Counted by direct backtracking over cells.
pub fn kostka(shape: &Partition, content: &[usize]) -> BigInt {
    if shape.degree() != content.iter().sum::<usize>() {
        return BigInt::from(0);
    }
    let rows = shape.parts().to_vec();
    let mut remaining = content.to_vec();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&w| vec![0; w]).collect();

    fn fill(
        r: usize,
        c: usize,
        rows: &[usize],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
    ) -> BigInt {
        if r == rows.len() {
            return BigInt::from(1);
        }
        if c == rows[r] {
            return fill(r + 1, 0, rows, grid, remaining);
        }
        let min_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let min_col = if r > 0 && c < rows[r - 1] {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let lo = min_row.max(min_col);
        let mut total = BigInt::from(0);
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            total += fill(r, c + 1, rows, grid, remaining);
            remaining[v - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }
    fill(0, 0, &rows, &mut grid, &mut remaining)
}

/// Expansion of `h[mu]` over the Schur basis: the coefficient of `s[lambda]`
/// counts semistandard tableaux of shape `lambda` and content `mu`.
pub fn schur_expand_basis(mu: &Partition) -> FormalSum<Partition> {
    let mut out = FormalSum::zero();
    for lambda in partitions(mu.degree()) {
        out.add_term(lambda.clone(), kostka(&lambda, mu.parts()));
    }
    out
}

pub fn schur_expand(x: &HSum) -> FormalSum<Partition> {
    x.apply_linear(schur_expand_basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{compositions, dominates};
    use crate::nsym::XSum;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn h(parts: &[usize]) -> HSum {
        FormalSum::singleton(part(parts))
    }

    #[test]
    fn external_examples() {
        assert_eq!(external(&part(&[2]), &part(&[1])), h(&[2, 1]));
        assert_eq!(external(&part(&[]), &part(&[3, 1])), h(&[3, 1]));
        assert_eq!(external(&part(&[2, 1]), &part(&[3])), h(&[3, 2, 1]));
    }

    #[test]
    fn smash_main_example() {
        let s = smash(&part(&[2, 1]), &part(&[3]));
        let expected = h(&[2, 1])
            .add(&h(&[1, 1, 1, 1]))
            .add(&h(&[2, 1, 1]))
            .add(&h(&[2, 2, 1]))
            .add(&h(&[2, 1, 1, 1]))
            .add(&h(&[3, 2, 1]));
        assert_eq!(s, expected);
    }

    #[test]
    fn smash_unit_and_top() {
        for mu in partitions(4) {
            assert_eq!(smash(&Partition::empty(), &mu), FormalSum::singleton(mu.clone()));
            for lambda in partitions(3) {
                let top = smash(&lambda, &mu).graded_component(7);
                assert_eq!(top, external(&lambda, &mu));
            }
        }
    }

    #[test]
    fn smash_commutes() {
        for p in 0..=3 {
            for q in 0..=3 {
                for lambda in partitions(p) {
                    for mu in partitions(q) {
                        assert_eq!(smash(&lambda, &mu), smash(&mu, &lambda));
                    }
                }
            }
        }
    }

    #[test]
    fn internal_examples() {
        assert_eq!(internal(&part(&[3]), &part(&[2, 1])).unwrap(), h(&[2, 1]));
        assert_eq!(
            internal(&part(&[1, 1]), &part(&[1, 1])).unwrap(),
            h(&[1, 1]).scale(&BigInt::from(2))
        );
        assert_eq!(internal(&part(&[2, 1]), &part(&[3])).unwrap(), h(&[2, 1]));
        assert!(internal(&part(&[1]), &part(&[1, 1])).is_err());
    }

    #[test]
    fn coproduct_examples() {
        let d = coproduct(&part(&[2]));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coefficient(&(part(&[1]), part(&[1]))), BigInt::from(1));

        let d = coproduct(&part(&[1, 1]));
        assert_eq!(d.coefficient(&(part(&[1]), part(&[1]))), BigInt::from(2));
        assert_eq!(d.coefficient(&(part(&[1, 1]), part(&[]))), BigInt::from(1));
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn phi_sorts_keys() {
        let x: XSum = FormalSum::singleton(Composition::new(vec![1, 2]).unwrap());
        assert_eq!(phi(&x), h(&[2, 1]));
        assert_eq!(phi(&nsym::unit()), unit());
    }

    #[test]
    fn phi_carries_the_smash_example() {
        let a = Composition::new(vec![2, 1]).unwrap();
        let b = Composition::new(vec![3]).unwrap();
        let via_x = phi(&nsym::smash(&a, &b));
        assert_eq!(via_x, smash(&part(&[2, 1]), &part(&[3])));
    }

    #[test]
    fn phi_intertwines_products_small() {
        for p in 0..=3 {
            for q in 0..=(5 - p).min(3) {
                for alpha in compositions(p) {
                    for beta in compositions(q) {
                        let la = alpha.sorted();
                        let mu = beta.sorted();
                        assert_eq!(phi(&nsym::smash(&alpha, &beta)), smash(&la, &mu));
                        assert_eq!(
                            phi(&nsym::convolve(&alpha, &beta)),
                            external(&la, &mu)
                        );
                        if p == q {
                            assert_eq!(
                                phi(&nsym::internal(&alpha, &beta).unwrap()),
                                internal(&la, &mu).unwrap()
                            );
                        }
                        assert_eq!(
                            phi_pair(&nsym::coproduct(&alpha)),
                            coproduct(&la)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_small_values() {
        assert_eq!(kostka(&part(&[2]), &[1, 1]), BigInt::from(1));
        assert_eq!(kostka(&part(&[1, 1]), &[1, 1]), BigInt::from(1));
        assert_eq!(kostka(&part(&[1, 1]), &[2]), BigInt::from(0));
        assert_eq!(kostka(&part(&[2, 1]), &[1, 1, 1]), BigInt::from(2));
        assert_eq!(kostka(&part(&[3, 2]), &[2, 2, 1]), BigInt::from(2));
        assert_eq!(kostka(&part(&[2, 2]), &[2, 1, 1]), BigInt::from(1));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_expand_basis(&part(&[3])), FormalSum::singleton(part(&[3])));
        assert_eq!(
            schur_expand_basis(&part(&[1, 1])),
            FormalSum::singleton(part(&[2])).add(&FormalSum::singleton(part(&[1, 1])))
        );
        assert_eq!(
            schur_expand_basis(&part(&[2, 1])),
            FormalSum::singleton(part(&[3])).add(&FormalSum::singleton(part(&[2, 1])))
        );
    }

    #[test]
    fn schur_expansion_is_dominance_unitriangular() {
        for n in 0..=6 {
            for mu in partitions(n) {
                let expansion = schur_expand_basis(&mu);
                assert_eq!(expansion.coefficient(&mu), BigInt::from(1));
                for (lambda, c) in expansion.terms() {
                    assert!(c > &BigInt::from(0));
                    assert!(dominates(lambda, &mu), "K({lambda},{mu}) nonzero");
                }
            }
        }
    }
}
