//! Compositions, partitions, permutations, descent sets, and the
//! margin-constrained matrices that carry the smash structure constants.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formal::Graded;

/// A finite sequence of positive integers. The empty composition is the
/// unique composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition);
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Concatenation `(a_1,...,a_r,b_1,...,b_s)`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// The subset `{a_1, a_1+a_2, ..., a_1+...+a_{r-1}}` of `[n-1]`.
    pub fn to_descent_set(&self) -> DescentSubset {
        let n = self.degree();
        let mut set = BTreeSet::new();
        let mut acc = 0;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            set.insert(acc);
        }
        DescentSubset { n, set }
    }

    /// Parts sorted decreasingly.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A weakly decreasing composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }

    /// Multiset union of parts, sorted decreasingly.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_composition().fmt(f)
    }
}

/// A permutation of `{1..n}` in one-line notation `(sigma(1),...,sigma(n))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The empty permutation, the unit of the convolution product.
    pub fn empty() -> Self {
        Permutation::identity(0)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `sigma(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Function composition `self . other`: `other` acts first,
    /// `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "compose needs equal degrees");
        let images = (1..=self.degree())
            .map(|i| self.apply(other.apply(i)))
            .collect();
        Permutation { images }
    }

    /// Block sum `sigma x tau` in `S_{p+q}`: `sigma` on `1..=p`, `tau`
    /// shifted to `p+1..=p+q`.
    pub fn times(&self, other: &Permutation) -> Permutation {
        let p = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + p));
        Permutation { images }
    }

    /// Positions `i` with `sigma(i) > sigma(i+1)`.
    pub fn descent_set(&self) -> DescentSubset {
        let n = self.degree();
        let set = (1..n)
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect();
        DescentSubset { n, set }
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 || self.degree() > 9 {
            write!(f, "[")?;
            for (i, v) in self.images.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")
        } else {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// A subset of `{1..n-1}` recording descent positions at degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSubset {
    n: usize,
    set: BTreeSet<usize>,
}

impl DescentSubset {
    pub fn new(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for pos in positions {
            if pos == 0 || pos >= n {
                return Err(Error::DescentOutOfRange {
                    pos,
                    max: n.saturating_sub(1),
                });
            }
            set.insert(pos);
        }
        Ok(DescentSubset { n, set })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &BTreeSet<usize> {
        &self.set
    }

    pub fn is_subset_of(&self, other: &DescentSubset) -> bool {
        self.n == other.n && self.set.is_subset(&other.set)
    }

    /// Inverse of [`Composition::to_descent_set`]: successive differences.
    pub fn to_composition(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.set.len() + 1);
        let mut prev = 0;
        for &pos in &self.set {
            parts.push(pos - prev);
            prev = pos;
        }
        if self.n > prev {
            parts.push(self.n - prev);
        }
        Composition { parts }
    }
}

/// Dominance order on partitions of equal degree: every prefix sum of `a`
/// is at least the corresponding prefix sum of `b`.
pub fn dominates(a: &Partition, b: &Partition) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    let mut sum_a = 0;
    let mut sum_b = 0;
    for i in 0..a.len().max(b.len()) {
        sum_a += a.parts().get(i).copied().unwrap_or(0);
        sum_b += b.parts().get(i).copied().unwrap_or(0);
        if sum_a < sum_b {
            return false;
        }
    }
    true
}

/// All compositions of `n` in a fixed order: first part from `n` down to 1.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    for first in (1..=n).rev() {
        for rest in compositions(n - first) {
            let mut parts = Vec::with_capacity(rest.len() + 1);
            parts.push(first);
            parts.extend_from_slice(rest.parts());
            out.push(Composition { parts });
        }
    }
    out
}

/// All partitions of `n`, largest first part first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `{1..n}` in lexicographic order of one-line notation.
pub fn permutations(n: usize) -> Vec<Permutation> {
    fn rec(remaining: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if remaining.is_empty() {
            out.push(Permutation {
                images: prefix.clone(),
            });
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            prefix.push(v);
            rec(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// The `(p,q)`-shuffles: `xi` with `xi(1)<...<xi(p)` and
/// `xi(p+1)<...<xi(p+q)`, ordered by the value set of the first block.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(
        next: usize,
        n: usize,
        p: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if chosen.len() == p {
            let mut images = chosen.clone();
            images.extend((1..=n).filter(|v| !chosen.contains(v)));
            out.push(Permutation { images });
            return;
        }
        for v in next..=n {
            chosen.push(v);
            rec(v + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(1, n, p, &mut chosen, &mut out);
    out
}

/// `beta_{u,v}`, the unique `(u,v)`-shuffle of maximal length: it moves the
/// first block of size `u` past the block of size `v`.
pub fn max_shuffle(u: usize, v: usize) -> Permutation {
    let mut images: Vec<usize> = (v + 1..=v + u).collect();
    images.extend(1..=v);
    Permutation { images }
}

/// A non-negative integer matrix with cached margins and zero upper-left
/// entry, the structure-constant datum of the smash product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginMatrix {
    entries: Vec<Vec<usize>>,
    row_sums: Vec<usize>,
    col_sums: Vec<usize>,
}

impl MarginMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(|r| r.len() != entries[0].len()) {
            return Err(Error::Table("matrix must be rectangular and nonempty".into()));
        }
        if entries[0][0] != 0 {
            return Err(Error::Table("matrix corner entry must be zero".into()));
        }
        let cols = entries[0].len();
        let row_sums = entries.iter().map(|r| r.iter().sum()).collect();
        let col_sums = (0..cols)
            .map(|j| entries.iter().map(|r| r[j]).sum())
            .collect();
        Ok(MarginMatrix {
            entries,
            row_sums,
            col_sums,
        })
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn row_sums(&self) -> &[usize] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[usize] {
        &self.col_sums
    }

    /// `c(M)`: nonzero entries read left to right, top to bottom.
    pub fn reading_composition(&self) -> Composition {
        let parts = self
            .entries
            .iter()
            .flat_map(|row| row.iter().copied())
            .filter(|&e| e != 0)
            .collect();
        Composition { parts }
    }

    /// `p(M)`: the reading composition sorted decreasingly.
    pub fn reading_partition(&self) -> Partition {
        self.reading_composition().sorted()
    }
}

/// All matrices with column sums `(n-p, a_1..a_r)`, row sums `(n-q, b_1..b_s)`
/// and zero corner, for `alpha` of `p` and `beta` of `q`. Enumerated in
/// lexicographic order of the row-major entry sequence.
pub fn margin_matrices(
    alpha: &Composition,
    beta: &Composition,
    n: usize,
) -> Result<Vec<MarginMatrix>> {
    let p = alpha.degree();
    let q = beta.degree();
    if n < p.max(q) || n > p + q {
        return Err(Error::DegreeOutOfRange {
            n,
            min: p.max(q),
            max: p + q,
        });
    }
    let mut col_targets = Vec::with_capacity(alpha.len() + 1);
    col_targets.push(n - p);
    col_targets.extend_from_slice(alpha.parts());
    let mut row_targets = Vec::with_capacity(beta.len() + 1);
    row_targets.push(n - q);
    row_targets.extend_from_slice(beta.parts());

    let rows = row_targets.len();
    let cols = col_targets.len();
    let mut out = Vec::new();
    let mut grid = vec![vec![0usize; cols]; rows];
    let mut col_left = col_targets.clone();

    // Row-major fill; the last cell of each row and the whole last row are
    // forced, which prunes most of the search.
    fn rec(
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
        row_targets: &[usize],
        row_used: usize,
        grid: &mut Vec<Vec<usize>>,
        col_left: &mut Vec<usize>,
        out: &mut Vec<MarginMatrix>,
    ) {
        if i == rows {
            if col_left.iter().all(|&c| c == 0) {
                let entries = grid.clone();
                let row_sums = row_targets.to_vec();
                let col_sums: Vec<usize> = (0..cols)
                    .map(|j| entries.iter().map(|r| r[j]).sum())
                    .collect();
                out.push(MarginMatrix {
                    entries,
                    row_sums,
                    col_sums,
                });
            }
            return;
        }
        if j == cols {
            if row_used == row_targets[i] {
                rec(i + 1, 0, rows, cols, row_targets, 0, grid, col_left, out);
            }
            return;
        }
        let row_left = row_targets[i] - row_used;
        let max_here = row_left.min(col_left[j]);
        let range = if i == 0 && j == 0 { 0..=0 } else { 0..=max_here };
        for v in range {
            grid[i][j] = v;
            col_left[j] -= v;
            rec(
                i,
                j + 1,
                rows,
                cols,
                row_targets,
                row_used + v,
                grid,
                col_left,
                out,
            );
            col_left[j] += v;
            grid[i][j] = 0;
        }
    }
    rec(
        0,
        0,
        rows,
        cols,
        &row_targets,
        0,
        &mut grid,
        &mut col_left,
        &mut out,
    );
    Ok(out)
}

impl Graded for Composition {
    fn degree(&self) -> usize {
        Composition::degree(self)
    }
}

impl Graded for Partition {
    fn degree(&self) -> usize {
        Partition::degree(self)
    }
}

impl Graded for Permutation {
    fn degree(&self) -> usize {
        Permutation::degree(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    /// Independent oracle: count compositions by exhaustive recursion over
    /// first parts.
    fn count_compositions(n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=n).map(|first| count_compositions(n - first)).sum()
    }

    #[test]
    fn compositions_of_zero_and_three() {
        assert_eq!(compositions(0), vec![Composition::empty()]);
        let three = compositions(3);
        assert_eq!(
            three,
            vec![comp(&[3]), comp(&[2, 1]), comp(&[1, 2]), comp(&[1, 1, 1])]
        );
    }

    #[test]
    fn compositions_count_matches_recursion_oracle() {
        for n in 0..=10 {
            assert_eq!(compositions(n).len(), count_compositions(n));
        }
        assert_eq!(compositions(5).len(), 16);
    }

    #[test]
    fn subset_composition_bijection() {
        let j = DescentSubset::new(9, [1, 3, 7]).unwrap();
        assert_eq!(j.to_composition(), comp(&[1, 2, 4, 2]));
        assert_eq!(
            DescentSubset::new(4, []).unwrap().to_composition(),
            comp(&[4])
        );
        // partial sums oracle
        assert_eq!(
            DescentSubset::new(3, [1, 2]).unwrap().to_composition(),
            comp(&[1, 1, 1])
        );
        for n in 0..=10 {
            for alpha in compositions(n) {
                assert_eq!(alpha.to_descent_set().to_composition(), alpha);
            }
        }
    }

    #[test]
    fn subset_out_of_range() {
        assert!(DescentSubset::new(4, [4]).is_err());
        assert!(DescentSubset::new(4, [0]).is_err());
    }

    #[test]
    fn descent_sets() {
        for n in 1..=6 {
            assert!(Permutation::identity(n).descent_set().positions().is_empty());
            let reversal = perm(&(1..=n).rev().collect::<Vec<_>>());
            assert_eq!(
                reversal.descent_set().positions().iter().copied().collect::<Vec<_>>(),
                (1..n).collect::<Vec<_>>()
            );
        }
        let sigma = perm(&[3, 1, 4, 2]);
        assert_eq!(
            sigma.descent_set().positions().iter().copied().collect::<Vec<_>>(),
            vec![1, 3]
        );
    }

    #[test]
    fn times_blocks() {
        assert_eq!(perm(&[1, 2]).times(&perm(&[1])), perm(&[1, 2, 3]));
        assert_eq!(perm(&[2, 1]).times(&perm(&[1])), perm(&[2, 1, 3]));
        assert_eq!(perm(&[1]).times(&perm(&[2, 1])), perm(&[1, 3, 2]));
    }

    #[test]
    fn times_associative() {
        for a in permutations(2) {
            for b in permutations(3) {
                for c in permutations(2) {
                    assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
                }
            }
        }
    }

    #[test]
    fn shuffle_sets() {
        let s11: Vec<_> = shuffles(1, 1);
        assert_eq!(s11, vec![perm(&[1, 2]), perm(&[2, 1])]);
        let s21 = shuffles(2, 1);
        assert_eq!(s21, vec![perm(&[1, 2, 3]), perm(&[1, 3, 2]), perm(&[2, 3, 1])]);
        assert_eq!(shuffles(0, 3), vec![Permutation::identity(3)]);
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        for i in 0..=n {
            table[i][0] = 1;
            for j in 1..=i {
                table[i][j] = table[i - 1][j - 1] + if j <= i - 1 { table[i - 1][j] } else { 0 };
            }
        }
        table[n][k]
    }

    #[test]
    fn shuffle_count_is_binomial() {
        for p in 0..=5 {
            for q in 0..=5.min(10 - p) {
                let sh = shuffles(p, q);
                assert_eq!(sh.len(), binomial(p + q, p));
                for xi in &sh {
                    assert!((1..p).all(|i| xi.apply(i) < xi.apply(i + 1)));
                    assert!((p + 1..p + q).all(|i| xi.apply(i) < xi.apply(i + 1)));
                }
            }
        }
    }

    #[test]
    fn max_shuffle_examples() {
        assert_eq!(max_shuffle(1, 1), perm(&[2, 1]));
        assert_eq!(max_shuffle(2, 1), perm(&[2, 3, 1]));
        assert_eq!(max_shuffle(0, 3), perm(&[1, 2, 3]));
        // maximal inversion number among all shuffles
        for u in 0..=4 {
            for v in 0..=4 {
                let beta = max_shuffle(u, v);
                let max_inv = shuffles(u, v)
                    .iter()
                    .map(|xi| xi.inversions())
                    .max()
                    .unwrap();
                assert_eq!(beta.inversions(), max_inv);
                assert!(shuffles(u, v).contains(&beta));
            }
        }
    }

    /// All ways to write `m` as an ordered sum of `k` non-negative parts.
    fn weak_compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return if m == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=m {
            for rest in weak_compositions(m - first, k - 1) {
                let mut row = Vec::with_capacity(k);
                row.push(first);
                row.extend(rest);
                out.push(row);
            }
        }
        out
    }

    /// Independent oracle: take every combination of rows with the right row
    /// sums, then keep the grids whose column sums and corner also match.
    fn brute_force_margin_matrices(
        alpha: &Composition,
        beta: &Composition,
        n: usize,
    ) -> Vec<MarginMatrix> {
        let p = alpha.degree();
        let q = beta.degree();
        let mut cols = vec![n - p];
        cols.extend_from_slice(alpha.parts());
        let mut rows = vec![n - q];
        rows.extend_from_slice(beta.parts());
        let row_choices: Vec<Vec<Vec<usize>>> = rows
            .iter()
            .map(|&m| weak_compositions(m, cols.len()))
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = Vec::new();
        fn rec(
            i: usize,
            row_choices: &[Vec<Vec<usize>>],
            cols: &[usize],
            stack: &mut Vec<Vec<usize>>,
            out: &mut Vec<MarginMatrix>,
        ) {
            if i == row_choices.len() {
                let ok = stack[0][0] == 0
                    && (0..cols.len())
                        .all(|j| stack.iter().map(|r| r[j]).sum::<usize>() == cols[j]);
                if ok {
                    out.push(MarginMatrix::new(stack.clone()).unwrap());
                }
                return;
            }
            for row in &row_choices[i] {
                stack.push(row.clone());
                rec(i + 1, row_choices, cols, stack, out);
                stack.pop();
            }
        }
        rec(0, &row_choices, &cols, &mut stack, &mut out);
        out
    }

    #[test]
    fn margin_matrix_forced_cases() {
        let ms = margin_matrices(&comp(&[2, 1]), &comp(&[3]), 3).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].entries(), &[vec![0, 0, 0], vec![0, 2, 1]]);
        assert_eq!(ms[0].reading_composition(), comp(&[2, 1]));

        let ms = margin_matrices(&comp(&[2, 1]), &comp(&[3]), 4).unwrap();
        assert_eq!(ms.len(), 2);

        let ms = margin_matrices(&comp(&[1]), &comp(&[1]), 2).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].entries(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn margin_matrix_range_error() {
        assert!(margin_matrices(&comp(&[2, 1]), &comp(&[3]), 2).is_err());
        assert!(margin_matrices(&comp(&[2, 1]), &comp(&[3]), 7).is_err());
    }

    #[test]
    fn margin_matrices_match_brute_force() {
        for p in 0..=4 {
            for q in 0..=(8 - p).min(4) {
                for alpha in compositions(p) {
                    for beta in compositions(q) {
                        for n in p.max(q)..=p + q {
                            let fast = margin_matrices(&alpha, &beta, n).unwrap();
                            let brute = brute_force_margin_matrices(&alpha, &beta, n);
                            let mut fast_sorted = fast.clone();
                            fast_sorted.sort();
                            let mut brute_sorted = brute;
                            brute_sorted.sort();
                            assert_eq!(fast_sorted, brute_sorted, "{alpha} {beta} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn margin_matrices_internal_case_reduces_to_plain_contingency_tables() {
        // p = q = n: the border row and column are zero, and the interiors
        // run over all matrices with column sums alpha and row sums beta.
        let alpha = comp(&[2, 1]);
        let beta = comp(&[1, 1, 1]);
        let ms = margin_matrices(&alpha, &beta, 3).unwrap();
        for m in &ms {
            assert!(m.entries()[0].iter().all(|&e| e == 0));
            assert!(m.entries().iter().all(|r| r[0] == 0));
        }
        // interior margins: three ways to place the 2 among three rows of
        // column 1... enumerate by brute force over 2x3 interiors.
        let mut interiors = Vec::new();
        for m in &ms {
            let interior: Vec<Vec<usize>> =
                m.entries()[1..].iter().map(|r| r[1..].to_vec()).collect();
            interiors.push(interior);
        }
        interiors.sort();
        interiors.dedup();
        assert_eq!(interiors.len(), ms.len());
        for interior in &interiors {
            for (i, row) in interior.iter().enumerate() {
                assert_eq!(row.iter().sum::<usize>(), beta.parts()[i]);
            }
            for j in 0..alpha.len() {
                assert_eq!(
                    interior.iter().map(|r| r[j]).sum::<usize>(),
                    alpha.parts()[j]
                );
            }
        }
    }

    #[test]
    fn reading_examples() {
        let m = MarginMatrix::new(vec![vec![0, 2, 1], vec![3, 0, 0]]).unwrap();
        assert_eq!(m.reading_composition(), comp(&[2, 1, 3]));
        assert_eq!(m.reading_partition(), Partition::new(vec![3, 2, 1]).unwrap());

        let m = MarginMatrix::new(vec![vec![0, 1, 0], vec![1, 1, 1]]).unwrap();
        assert_eq!(m.reading_composition(), comp(&[1, 1, 1, 1]));
    }

    #[test]
    fn dominance_order() {
        let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
        assert!(dominates(&p(&[3]), &p(&[2, 1])));
        assert!(dominates(&p(&[2, 1]), &p(&[1, 1, 1])));
        assert!(!dominates(&p(&[1, 1, 1]), &p(&[2, 1])));
        assert!(dominates(&p(&[2, 2]), &p(&[2, 1, 1])));
        assert!(dominates(&p(&[3, 1]), &p(&[2, 2])));
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])));
        assert!(!dominates(&p(&[3]), &p(&[2])));
        for lambda in partitions(6) {
            assert!(dominates(&lambda, &lambda));
        }
    }

    #[test]
    fn partitions_enumeration() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(4).len(), 5);
        for n in 0..=8 {
            for lambda in partitions(n) {
                assert_eq!(lambda.degree(), n);
            }
        }
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![2, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        for sigma in permutations(3) {
            assert_eq!(id.compose(&sigma), sigma);
            assert_eq!(sigma.compose(&id), sigma);
        }
        assert_eq!(perm(&[2, 1]).compose(&perm(&[2, 1])), perm(&[1, 2]));
        assert_eq!(perm(&[2, 3, 1]).compose(&perm(&[3, 1, 2])), perm(&[1, 2, 3]));
    }
}
