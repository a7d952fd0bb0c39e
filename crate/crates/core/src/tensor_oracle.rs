//! An independent model of the permutation algebra: permutations act on
//! words by position, and sums of permutations become endomorphisms of the
//! tensor algebra on letters. Products computed here by direct word
//! manipulation serve as cross-checks for the closed formulas elsewhere.

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::formal::{FormalSum, Graded, PairSum};

/// A word over the letters `1..=255`; degree is the length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl Graded for Word {
    fn degree(&self) -> usize {
        self.len()
    }
}

/// The word `(1,2,...,n)`, whose letters are pairwise distinct.
pub fn generic_word(n: usize) -> Word {
    assert!(n <= 255, "letters are u8");
    Word((1..=n as u8).collect())
}

/// Position action: `(act(sigma, w))_i = w_{sigma(i)}`.
pub fn act(sigma: &Permutation, w: &Word) -> Result<Word> {
    if sigma.degree() != w.len() {
        return Err(Error::WordLength {
            expected: sigma.degree(),
            got: w.len(),
        });
    }
    Ok(Word(
        (1..=w.len()).map(|i| w.0[sigma.apply(i) - 1]).collect(),
    ))
}

/// Unshuffle coproduct: sum over all ways to pull a subsequence out of `w`,
/// with the complementary subsequence in the second factor.
pub fn unshuffle(w: &Word) -> PairSum<Word, Word> {
    let k = w.len();
    let mut out = FormalSum::zero();
    for mask in 0u32..(1 << k) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &letter) in w.0.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(letter);
            } else {
                right.push(letter);
            }
        }
        out.add_term((Word(left), Word(right)), 1.into());
    }
    out
}

/// Applies the degree-matching component of `f` to `w` and extends linearly.
pub fn endo_apply(f: &FormalSum<Permutation>, w: &Word) -> FormalSum<Word> {
    let mut out = FormalSum::zero();
    for (sigma, c) in f.terms() {
        if sigma.degree() == w.len() {
            out.add_term(act(sigma, w).expect("degree checked"), c.clone());
        }
    }
    out
}

fn apply_to_sum(f: &FormalSum<Permutation>, words: &FormalSum<Word>) -> FormalSum<Word> {
    words.apply_linear(|w| endo_apply(f, w))
}

/// Reads a sum of pairwise-distinct-letter words of length `n` back as a sum
/// of permutations: the word equals the one-line notation when the input was
/// the generic word.
fn read_off(words: &FormalSum<Word>) -> Result<FormalSum<Permutation>> {
    let mut out = FormalSum::zero();
    for (w, c) in words.terms() {
        let images: Vec<usize> = w.letters().iter().map(|&l| l as usize).collect();
        let n = images.len();
        let sigma = Permutation::new(images).map_err(|_| Error::InvalidPermutation(n))?;
        out.add_term(sigma, c.clone());
    }
    Ok(out)
}

/// The composite `f . g` of endomorphisms (`g` first), read off degree by
/// degree from the action on generic words.
pub fn endo_compose(
    f: &FormalSum<Permutation>,
    g: &FormalSum<Permutation>,
) -> Result<FormalSum<Permutation>> {
    let top = f.max_degree().unwrap_or(0).max(g.max_degree().unwrap_or(0));
    let mut out = FormalSum::zero();
    for n in 0..=top {
        let w = generic_word(n);
        let image = apply_to_sum(f, &endo_apply(g, &w));
        out = out.add(&read_off(&image)?);
    }
    Ok(out)
}

/// The convolution of `f` and `g`: unshuffle, apply the factors, and
/// concatenate; read off degree by degree.
pub fn endo_convolve(
    f: &FormalSum<Permutation>,
    g: &FormalSum<Permutation>,
) -> Result<FormalSum<Permutation>> {
    let top = f.max_degree().unwrap_or(0) + g.max_degree().unwrap_or(0);
    let mut out = FormalSum::zero();
    for n in 0..=top {
        let w = generic_word(n);
        let mut image = FormalSum::zero();
        for ((u, v), c) in unshuffle(&w).terms() {
            let fu = endo_apply(f, u);
            let gv = endo_apply(g, v);
            for (wu, cu) in fu.terms() {
                for (wv, cv) in gv.terms() {
                    image.add_term(wu.concat(wv), c * cu * cv);
                }
            }
        }
        out = out.add(&read_off(&image)?);
    }
    Ok(out)
}

/// The smash product of `f` and `g` as endomorphisms, computed arrow by
/// arrow: unshuffle, apply `f` to the first factor, unshuffle that factor
/// again, rotate the three tensor factors left, merge the last two, apply
/// `g` there, and concatenate. Read off degree by degree.
pub fn endo_smash(
    f: &FormalSum<Permutation>,
    g: &FormalSum<Permutation>,
) -> Result<FormalSum<Permutation>> {
    let top = f.max_degree().unwrap_or(0) + g.max_degree().unwrap_or(0);
    let mut out = FormalSum::zero();
    for n in 0..=top {
        let image = smash_on_word(f, g, &generic_word(n));
        out = out.add(&read_off(&image)?);
    }
    Ok(out)
}

fn smash_on_word(
    f: &FormalSum<Permutation>,
    g: &FormalSum<Permutation>,
    w: &Word,
) -> FormalSum<Word> {
    let mut image = FormalSum::zero();
    for ((x, z), c) in unshuffle(w).terms() {
        let fx = endo_apply(f, x);
        for (fx_word, cf) in fx.terms() {
            for ((a, b), cu) in unshuffle(fx_word).terms() {
                // rotate (a, b, z) to (b, z, a), then merge the tail
                let tail = z.concat(a);
                let g_tail = endo_apply(g, &tail);
                for (gt, cg) in g_tail.terms() {
                    image.add_term(b.concat(gt), c * cf * cu * cg);
                }
            }
        }
    }
    image
}
