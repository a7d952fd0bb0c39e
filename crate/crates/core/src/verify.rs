//! Verification suites. Each suite enumerates identities over a degree
//! range, runs the cases in parallel, and reports pass/fail per case with
//! a rendered counterexample on failure.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::alphabet::SignConvention;
use crate::combinatorics::{compositions, partitions, permutations, Composition, Partition, Permutation};
use crate::error::{Error, Result};
use crate::expr::{format_permutation, render_composition_sum, render_partition_sum};
use crate::formal::{tensor, FormalSum, PairSum};
use crate::nsym::{self, XSum};
use crate::perm_algebra;
use crate::qsym::{self, MSum};
use crate::sym;
use crate::tensor_oracle::{self, Word};

pub const SUITE_NAMES: &[&str] = &[
    "interpolation",
    "oracle",
    "closure",
    "hopf",
    "duality",
    "alphabet",
    "antipode",
    "phi",
    "psi",
    "assoc",
];

/// One named check inside a suite. `Ok(None)` passes, `Ok(Some(info))`
/// passes and carries an informational detail, `Err(msg)` fails with a
/// counterexample.
type CaseOutcome = std::result::Result<Option<String>, String>;

struct Case {
    name: &'static str,
    run: Box<dyn Fn() -> CaseOutcome + Send + Sync>,
}

fn case(name: &'static str, run: impl Fn() -> CaseOutcome + Send + Sync + 'static) -> Case {
    Case {
        name,
        run: Box::new(run),
    }
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub max_degree: usize,
    pub passed: bool,
    pub certified_convention: Option<String>,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> serde_json::Value {
        let cases: Vec<serde_json::Value> = self
            .cases
            .iter()
            .map(|c| {
                let mut obj = json!({"name": c.name, "passed": c.passed});
                if let Some(detail) = &c.detail {
                    obj["detail"] = json!(detail);
                }
                obj
            })
            .collect();
        let mut out = json!({
            "suite": self.suite,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "cases": cases,
        });
        if let Some(conv) = &self.certified_convention {
            out["certified_convention"] = json!(conv);
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut lines = vec![format!(
            "suite {} (max degree {}): {}",
            self.suite,
            self.max_degree,
            if self.passed { "PASS" } else { "FAIL" }
        )];
        for c in &self.cases {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            match &c.detail {
                Some(d) => lines.push(format!("  [{mark}] {}: {d}", c.name)),
                None => lines.push(format!("  [{mark}] {}", c.name)),
            }
        }
        if let Some(conv) = &self.certified_convention {
            lines.push(format!("  certified sign convention: {conv}"));
        }
        lines.join("\n")
    }
}

/// Runs one suite with all case ranges capped by `max_degree`.
pub fn run_suite(suite: &str, max_degree: usize) -> Result<SuiteReport> {
    let cases = match suite {
        "interpolation" => interpolation_suite(max_degree),
        "oracle" => oracle_suite(max_degree),
        "closure" => closure_suite(max_degree),
        "hopf" => hopf_suite(max_degree),
        "duality" => duality_suite(max_degree),
        "alphabet" => alphabet_suite(max_degree),
        "antipode" => antipode_suite(max_degree),
        "phi" => phi_suite(max_degree),
        "psi" => psi_suite(max_degree),
        "assoc" => assoc_suite(max_degree),
        _ => return Err(Error::UnknownSuite(suite.to_string())),
    };
    let reports: Vec<CaseReport> = cases
        .par_iter()
        .map(|c| match (c.run)() {
            Ok(detail) => CaseReport {
                name: c.name.to_string(),
                passed: true,
                detail,
            },
            Err(message) => CaseReport {
                name: c.name.to_string(),
                passed: false,
                detail: Some(message),
            },
        })
        .collect();
    let passed = reports.iter().all(|c| c.passed);
    let certified_convention = reports
        .iter()
        .find(|c| c.name == "certified_convention" && c.passed)
        .and_then(|c| c.detail.clone());
    Ok(SuiteReport {
        suite: suite.to_string(),
        max_degree,
        passed,
        certified_convention,
        cases: reports,
    })
}

fn check_all<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Option<String> + Send + Sync,
) -> CaseOutcome {
    match items.par_iter().find_map_first(|t| check(t)) {
        Some(message) => Err(message),
        None => Ok(None),
    }
}

fn comps_up_to(max: usize) -> Vec<Composition> {
    (0..=max).flat_map(compositions).collect()
}

fn comp_pairs(max_total: usize) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for p in 0..=max_total {
        for q in 0..=max_total - p {
            for alpha in compositions(p) {
                for beta in compositions(q) {
                    out.push((alpha.clone(), beta.clone()));
                }
            }
        }
    }
    out
}

fn part_pairs(max_total: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for p in 0..=max_total {
        for q in 0..=max_total - p {
            for lambda in partitions(p) {
                for mu in partitions(q) {
                    out.push((lambda.clone(), mu.clone()));
                }
            }
        }
    }
    out
}

fn perm_pairs(max_total: usize) -> Vec<(Permutation, Permutation)> {
    let mut out = Vec::new();
    for p in 0..=max_total {
        for q in 0..=max_total - p {
            for sigma in permutations(p) {
                for tau in permutations(q) {
                    out.push((sigma.clone(), tau.clone()));
                }
            }
        }
    }
    out
}

fn comp_triples(max_total: usize) -> Vec<(Composition, Composition, Composition)> {
    let mut out = Vec::new();
    for (alpha, beta) in comp_pairs(max_total) {
        let used = alpha.degree() + beta.degree();
        for gamma in comps_up_to(max_total - used) {
            out.push((alpha.clone(), beta.clone(), gamma));
        }
    }
    out
}

fn part_triples(max_total: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for (lambda, mu) in part_pairs(max_total) {
        let used = lambda.degree() + mu.degree();
        for nu in (0..=max_total - used).flat_map(partitions) {
            out.push((lambda.clone(), mu.clone(), nu));
        }
    }
    out
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity")
}

fn x(alpha: &Composition) -> XSum {
    FormalSum::singleton(alpha.clone())
}

fn m(alpha: &Composition) -> MSum {
    FormalSum::singleton(alpha.clone())
}

fn show_x(s: &XSum) -> String {
    render_composition_sum("X", s)
}

fn show_m(s: &MSum) -> String {
    render_composition_sum("M", s)
}

fn show_h(s: &sym::HSum) -> String {
    render_partition_sum("h", s)
}

fn show_perm(s: &FormalSum<Permutation>) -> String {
    s.render(format_permutation)
}

fn show_pair_m(s: &PairSum<Composition, Composition>) -> String {
    s.render(|(a, b)| format!("M{a}(x)M{b}"))
}

// ---------------------------------------------------------------- suites

fn interpolation_suite(max_degree: usize) -> Vec<Case> {
    let pairs = comp_pairs(max_degree);
    let pairs2 = pairs.clone();
    let pairs3 = pairs.clone();
    vec![
        case("support_range", move || {
            check_all(&pairs, |(alpha, beta)| {
                let p = alpha.degree();
                let q = beta.degree();
                let product = nsym::smash(alpha, beta);
                let bad = product
                    .degrees()
                    .into_iter()
                    .any(|n| n < p.max(q) || n > p + q);
                bad.then(|| {
                    format!(
                        "X{alpha} # X{beta} has support outside [{}, {}]: {}",
                        p.max(q),
                        p + q,
                        show_x(&product)
                    )
                })
            })
        }),
        case("top_is_convolution", move || {
            check_all(&pairs2, |(alpha, beta)| {
                let top = nsym::smash(alpha, beta).graded_component(alpha.degree() + beta.degree());
                let conv = nsym::convolve(alpha, beta);
                (top != conv).then(|| {
                    format!(
                        "top of X{alpha} # X{beta} is {}, convolution is {}",
                        show_x(&top),
                        show_x(&conv)
                    )
                })
            })
        }),
        case("bottom_is_internal", move || {
            check_all(&pairs3, |(alpha, beta)| {
                if alpha.degree() != beta.degree() {
                    return None;
                }
                let bottom = nsym::smash(alpha, beta).graded_component(alpha.degree());
                let internal = nsym::internal(alpha, beta).expect("equal degrees");
                (bottom != internal).then(|| {
                    format!(
                        "bottom of X{alpha} # X{beta} is {}, internal product is {}",
                        show_x(&bottom),
                        show_x(&internal)
                    )
                })
            })
        }),
    ]
}

fn oracle_suite(max_degree: usize) -> Vec<Case> {
    let exhaustive = perm_pairs(max_degree.min(6));
    let exhaustive2 = exhaustive.clone();
    let mut random_pairs = Vec::new();
    for total in 7..=max_degree {
        let mut rng = ChaCha8Rng::seed_from_u64(total as u64);
        for _ in 0..50 {
            let p = rng.gen_range(1..total);
            random_pairs.push((
                random_permutation(&mut rng, p),
                random_permutation(&mut rng, total - p),
            ));
        }
    }
    let compose_max = max_degree.min(5);
    let word_total = max_degree.min(6);
    vec![
        case("smash_matches_word_diagram", move || {
            check_all(&exhaustive, |(sigma, tau)| {
                let fast = perm_algebra::smash(sigma, tau);
                let slow = tensor_oracle::endo_smash(
                    &FormalSum::singleton(sigma.clone()),
                    &FormalSum::singleton(tau.clone()),
                )
                .expect("well-formed inputs");
                (fast != slow).then(|| {
                    format!(
                        "P{sigma} # P{tau}: closed form {}, word diagram {}",
                        show_perm(&fast),
                        show_perm(&slow)
                    )
                })
            })
        }),
        case("smash_matches_word_diagram_random", move || {
            if random_pairs.is_empty() {
                return Ok(Some("no totals above 6 requested".into()));
            }
            check_all(&random_pairs, |(sigma, tau)| {
                let fast = perm_algebra::smash(sigma, tau);
                let slow = tensor_oracle::endo_smash(
                    &FormalSum::singleton(sigma.clone()),
                    &FormalSum::singleton(tau.clone()),
                )
                .expect("well-formed inputs");
                (fast != slow).then(|| format!("P{sigma} # P{tau}: closed form disagrees with word diagram"))
            })
        }),
        case("convolution_matches_word_diagram", move || {
            check_all(&exhaustive2, |(sigma, tau)| {
                let fast = perm_algebra::convolve(sigma, tau);
                let slow = tensor_oracle::endo_convolve(
                    &FormalSum::singleton(sigma.clone()),
                    &FormalSum::singleton(tau.clone()),
                )
                .expect("well-formed inputs");
                (fast != slow).then(|| {
                    format!(
                        "P{sigma} * P{tau}: closed form {}, word diagram {}",
                        show_perm(&fast),
                        show_perm(&slow)
                    )
                })
            })
        }),
        case("composition_matches_word_diagram", move || {
            let mut pairs = Vec::new();
            for n in 0..=compose_max {
                for sigma in permutations(n) {
                    for tau in permutations(n) {
                        pairs.push((sigma.clone(), tau.clone()));
                    }
                }
            }
            check_all(&pairs, |(sigma, tau)| {
                let fast = perm_algebra::compose(sigma, tau);
                // the word model composes endomorphisms, so the factors swap
                let slow = tensor_oracle::endo_compose(
                    &FormalSum::singleton(tau.clone()),
                    &FormalSum::singleton(sigma.clone()),
                )
                .expect("equal degrees");
                (fast != slow).then(|| {
                    format!(
                        "P{sigma} o P{tau}: closed form {}, word diagram {}",
                        show_perm(&fast),
                        show_perm(&slow)
                    )
                })
            })
        }),
        case("word_coproduct_bialgebra", move || {
            let mut splittings = Vec::new();
            for a in 0..=word_total {
                for b in 0..=word_total - a {
                    splittings.push((a, b));
                }
            }
            check_all(&splittings, |&(a, b)| {
                let w1 = Word::new((1..=a as u8).collect());
                let w2 = Word::new((a as u8 + 1..=(a + b) as u8).collect());
                let whole = tensor_oracle::unshuffle(&w1.concat(&w2));
                let left = tensor_oracle::unshuffle(&w1);
                let right = tensor_oracle::unshuffle(&w2);
                let mut product = FormalSum::zero();
                for ((u1, v1), c1) in left.terms() {
                    for ((u2, v2), c2) in right.terms() {
                        product.add_term((u1.concat(u2), v1.concat(v2)), c1 * c2);
                    }
                }
                (whole != product).then(|| {
                    format!("unshuffle of ({} letters)({} letters) is not multiplicative", a, b)
                })
            })
        }),
        case("readoff_substitution", move || {
            let nmax = max_degree.min(4);
            let mut cases = Vec::new();
            for n in 1..=nmax {
                for sigma in permutations(n) {
                    cases.push(sigma.clone());
                }
            }
            check_all(&cases, |sigma| {
                let n = sigma.degree();
                let generic = tensor_oracle::generic_word(n);
                let image = tensor_oracle::act(sigma, &generic).expect("length matches");
                // every word over 1..n, by odometer
                let mut digits = vec![1u8; n];
                loop {
                    let w = Word::new(digits.clone());
                    let direct = tensor_oracle::act(sigma, &w).expect("length matches");
                    let substituted =
                        Word::new(image.letters().iter().map(|&i| digits[i as usize - 1]).collect());
                    if direct != substituted {
                        return Some(format!(
                            "P{sigma} acting on {w:?} differs from substitution into its generic image"
                        ));
                    }
                    let mut pos = 0;
                    loop {
                        if pos == n {
                            return None;
                        }
                        if digits[pos] < n as u8 {
                            digits[pos] += 1;
                            break;
                        }
                        digits[pos] = 1;
                        pos += 1;
                    }
                }
            })
        }),
    ]
}

fn closure_suite(max_degree: usize) -> Vec<Case> {
    let pairs = comp_pairs(max_degree);
    let pairs2 = pairs.clone();
    let equal: Vec<(Composition, Composition)> = {
        let mut out = Vec::new();
        for n in 0..=max_degree / 2 {
            for alpha in compositions(n) {
                for beta in compositions(n) {
                    out.push((alpha.clone(), beta.clone()));
                }
            }
        }
        out
    };
    vec![
        case("smash_closure", move || {
            check_all(&pairs, |(alpha, beta)| {
                let on_perms =
                    perm_algebra::smash_sum(&nsym::embed(alpha), &nsym::embed(beta));
                match nsym::expand_in_x(&on_perms) {
                    Err(e) => Some(format!("X{alpha} # X{beta} left the descent span: {e}")),
                    Ok(expanded) => {
                        let direct = nsym::smash(alpha, beta);
                        (expanded != direct).then(|| {
                            format!(
                                "X{alpha} # X{beta}: descent classes give {}, matrix rule gives {}",
                                show_x(&expanded),
                                show_x(&direct)
                            )
                        })
                    }
                }
            })
        }),
        case("convolution_closure", move || {
            check_all(&pairs2, |(alpha, beta)| {
                let on_perms =
                    perm_algebra::convolve_sum(&nsym::embed(alpha), &nsym::embed(beta));
                match nsym::expand_in_x(&on_perms) {
                    Err(e) => Some(format!("X{alpha} * X{beta} left the descent span: {e}")),
                    Ok(expanded) => {
                        let direct = nsym::convolve(alpha, beta);
                        (expanded != direct).then(|| {
                            format!(
                                "X{alpha} * X{beta}: descent classes give {}, concatenation gives {}",
                                show_x(&expanded),
                                show_x(&direct)
                            )
                        })
                    }
                }
            })
        }),
        case("internal_closure", move || {
            check_all(&equal, |(alpha, beta)| {
                let on_perms =
                    perm_algebra::compose_sum(&nsym::embed(alpha), &nsym::embed(beta));
                match nsym::expand_in_x(&on_perms) {
                    Err(e) => Some(format!("X{alpha} o X{beta} left the descent span: {e}")),
                    Ok(expanded) => {
                        let direct = nsym::internal(alpha, beta).expect("equal degrees");
                        (expanded != direct).then(|| {
                            format!(
                                "X{alpha} o X{beta}: descent classes give {}, matrix rule gives {}",
                                show_x(&expanded),
                                show_x(&direct)
                            )
                        })
                    }
                }
            })
        }),
    ]
}

fn smash_tensor_x(
    a: &PairSum<Composition, Composition>,
    b: &PairSum<Composition, Composition>,
) -> PairSum<Composition, Composition> {
    a.apply_bilinear(b, |(g1, d1), (g2, d2)| {
        tensor(&nsym::smash(g1, g2), &nsym::smash(d1, d2))
    })
}

fn smash_tensor_h(
    a: &PairSum<Partition, Partition>,
    b: &PairSum<Partition, Partition>,
) -> PairSum<Partition, Partition> {
    a.apply_bilinear(b, |(g1, d1), (g2, d2)| {
        tensor(&sym::smash(g1, g2), &sym::smash(d1, d2))
    })
}

fn hopf_suite(max_degree: usize) -> Vec<Case> {
    let sigma_cap = max_degree.min(6);
    let sigma_pairs = comp_pairs(sigma_cap);
    let sigma_elements = comps_up_to(sigma_cap);
    let sigma_elements2 = sigma_elements.clone();
    let lambda_pairs_all = part_pairs(max_degree.min(8));
    let lambda_pairs_small = part_pairs(max_degree.min(6));
    let lambda_elements: Vec<Partition> = (0..=max_degree.min(8)).flat_map(partitions).collect();
    let witness_cap = max_degree.min(4);
    vec![
        case("sigma_coproduct_is_multiplicative", move || {
            check_all(&sigma_pairs, |(alpha, beta)| {
                let lhs = nsym::coproduct_sum(&nsym::smash(alpha, beta));
                let rhs = smash_tensor_x(&nsym::coproduct(alpha), &nsym::coproduct(beta));
                (lhs != rhs).then(|| {
                    format!("coprod(X{alpha} # X{beta}) differs from coprod(X{alpha}) # coprod(X{beta})")
                })
            })
        }),
        case("sigma_cocommutative", move || {
            check_all(&sigma_elements, |alpha| {
                let d = nsym::coproduct(alpha);
                let swapped = d.apply_linear(|(g, h)| FormalSum::singleton((h.clone(), g.clone())));
                (d != swapped).then(|| format!("coprod(X{alpha}) is not symmetric"))
            })
        }),
        case("sigma_noncommutative_witness", move || {
            for (alpha, beta) in comp_pairs(witness_cap) {
                let ab = nsym::smash(&alpha, &beta);
                let ba = nsym::smash(&beta, &alpha);
                if ab != ba {
                    return Ok(Some(format!(
                        "X{alpha} # X{beta} = {} but X{beta} # X{alpha} = {}",
                        show_x(&ab),
                        show_x(&ba)
                    )));
                }
            }
            if witness_cap < 3 {
                Ok(Some("no witness expected below total degree 3".into()))
            } else {
                Err("smash looked commutative on every tested pair".into())
            }
        }),
        case("sigma_antipode_axiom", move || {
            let table = nsym::antipode_table(sigma_cap);
            check_all(&sigma_elements2, |alpha| {
                let expected = if alpha.is_empty() {
                    nsym::unit()
                } else {
                    XSum::zero()
                };
                let mut left = XSum::zero();
                let mut right = XSum::zero();
                for ((gamma, delta), c) in nsym::coproduct(alpha).terms() {
                    let s_gamma = table.get(gamma).expect("degree within table");
                    let s_delta = table.get(delta).expect("degree within table");
                    left = left.add(&nsym::smash_sum(s_gamma, &x(delta)).scale(c));
                    right = right.add(&nsym::smash_sum(&x(gamma), s_delta).scale(c));
                }
                if left != expected {
                    return Some(format!(
                        "sum S(u')#u'' for X{alpha} came out {}",
                        show_x(&left)
                    ));
                }
                if right != expected {
                    return Some(format!(
                        "sum u'#S(u'') for X{alpha} came out {}",
                        show_x(&right)
                    ));
                }
                None
            })
        }),
        case("lambda_commutative", move || {
            check_all(&lambda_pairs_all, |(lambda, mu)| {
                let ab = sym::smash(lambda, mu);
                let ba = sym::smash(mu, lambda);
                (ab != ba).then(|| {
                    format!(
                        "h{lambda} # h{mu} = {} but h{mu} # h{lambda} = {}",
                        show_h(&ab),
                        show_h(&ba)
                    )
                })
            })
        }),
        case("lambda_coproduct_is_multiplicative", move || {
            check_all(&lambda_pairs_small, |(lambda, mu)| {
                let lhs = sym::coproduct_sum(&sym::smash(lambda, mu));
                let rhs = smash_tensor_h(&sym::coproduct(lambda), &sym::coproduct(mu));
                (lhs != rhs).then(|| {
                    format!("coprod(h{lambda} # h{mu}) differs from coprod(h{lambda}) # coprod(h{mu})")
                })
            })
        }),
        case("lambda_cocommutative", move || {
            check_all(&lambda_elements, |lambda| {
                let d = sym::coproduct(lambda);
                let swapped = d.apply_linear(|(g, h)| FormalSum::singleton((h.clone(), g.clone())));
                (d != swapped).then(|| format!("coprod(h{lambda}) is not symmetric"))
            })
        }),
    ]
}

fn duality_suite(max_degree: usize) -> Vec<Case> {
    let cap = max_degree.min(6);
    let gammas = comps_up_to(cap);
    let star_elements = comps_up_to(max_degree.min(5));
    let circ_elements = comps_up_to(max_degree.min(5));
    let smash_elements = comps_up_to(max_degree.min(4));
    vec![
        case("quasi_shuffle_dual_to_coproduct", move || {
            check_all(&gammas, |gamma| {
                let n = gamma.degree();
                let d = nsym::coproduct(gamma);
                for i in 0..=n {
                    for alpha in compositions(i) {
                        for beta in compositions(n - i) {
                            let lhs = qsym::quasi_shuffle(&alpha, &beta).coefficient(gamma);
                            let rhs = d.coefficient(&(alpha.clone(), beta.clone()));
                            if lhs != rhs {
                                return Some(format!(
                                    "<M{alpha}.M{beta}, X{gamma}> = {lhs} but <M{alpha}(x)M{beta}, coprod X{gamma}> = {rhs}"
                                ));
                            }
                        }
                    }
                }
                None
            })
        }),
        case("star_coproduct_deconcatenates", move || {
            check_all(&star_elements, |alpha| {
                let computed = qsym::coproduct_star(&m(alpha));
                let mut direct = FormalSum::zero();
                let parts = alpha.parts();
                for i in 0..=parts.len() {
                    let head = Composition::new(parts[..i].to_vec()).expect("valid parts");
                    let tail = Composition::new(parts[i..].to_vec()).expect("valid parts");
                    direct.add_term((head, tail), BigInt::one());
                }
                (computed != direct).then(|| {
                    format!(
                        "coprodStar(M{alpha}) = {} instead of deconcatenation {}",
                        show_pair_m(&computed),
                        show_pair_m(&direct)
                    )
                })
            })
        }),
        case("circ_coproduct_preserves_degree", move || {
            check_all(&circ_elements, |alpha| {
                let n = alpha.degree();
                for ((g, d), _) in qsym::coproduct_circ(&m(alpha)).terms() {
                    if g.degree() != n || d.degree() != n {
                        return Some(format!(
                            "coprodCirc(M{alpha}) has a term M{g}(x)M{d} off the diagonal degree"
                        ));
                    }
                }
                None
            })
        }),
        case("smash_coproduct_degree_pattern", move || {
            check_all(&smash_elements, |alpha| {
                let n = alpha.degree();
                for ((g, d), _) in qsym::coproduct_smash(&m(alpha)).terms() {
                    let (a, b) = (g.degree(), d.degree());
                    if n < a.max(b) || n > a + b {
                        return Some(format!(
                            "coprodSmash(M{alpha}) has M{g}(x)M{d}, outside max <= {n} <= sum"
                        ));
                    }
                }
                None
            })
        }),
    ]
}

fn alphabet_suite(max_degree: usize) -> Vec<Case> {
    let cap = max_degree.min(5);
    let elements = comps_up_to(cap);
    let elements2 = elements.clone();
    let smash_elements = comps_up_to(max_degree.min(4));
    vec![
        case("sum_alphabet_matches_star_coproduct", move || {
            check_all(&elements, |alpha| {
                let d = alpha.degree().max(1);
                let by_vars = match qsym::coproduct_star_alphabet(&m(alpha), d, 6) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("M{alpha}: {e}")),
                };
                let by_duality = qsym::coproduct_star(&m(alpha));
                (by_vars != by_duality).then(|| {
                    format!(
                        "coprodStar(M{alpha}): variables give {}, duality gives {}",
                        show_pair_m(&by_vars),
                        show_pair_m(&by_duality)
                    )
                })
            })
        }),
        case("product_alphabet_matches_circ_coproduct", move || {
            check_all(&elements2, |alpha| {
                let d = alpha.degree().max(1);
                let by_vars = match qsym::coproduct_circ_alphabet(&m(alpha), d, 6) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("M{alpha}: {e}")),
                };
                let by_duality = qsym::coproduct_circ(&m(alpha));
                (by_vars != by_duality).then(|| {
                    format!(
                        "coprodCirc(M{alpha}): variables give {}, duality gives {}",
                        show_pair_m(&by_vars),
                        show_pair_m(&by_duality)
                    )
                })
            })
        }),
        case("unit_extended_product_matches_smash_coproduct", move || {
            check_all(&smash_elements, |alpha| {
                let d = alpha.degree().max(1);
                let by_vars = match qsym::coproduct_smash_alphabet(&m(alpha), d, d.max(4)) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("M{alpha}: {e}")),
                };
                let by_duality = qsym::coproduct_smash(&m(alpha));
                (by_vars != by_duality).then(|| {
                    format!(
                        "coprodSmash(M{alpha}): variables give {}, duality gives {}",
                        show_pair_m(&by_vars),
                        show_pair_m(&by_duality)
                    )
                })
            })
        }),
    ]
}

fn antipode_suite(max_degree: usize) -> Vec<Case> {
    let d = max_degree.min(3);
    let elements = comps_up_to(d);
    let elements2 = elements.clone();
    vec![
        case("truncated_antipode_axiom", move || {
            check_all(&elements, |alpha| {
                let expected = if alpha.is_empty() {
                    qsym::unit()
                } else {
                    MSum::zero()
                };
                let mut left = MSum::zero();
                let mut right = MSum::zero();
                for ((gamma, delta), c) in qsym::coproduct_smash(&m(alpha)).terms() {
                    let s_gamma = qsym::antipode_smash(&m(gamma), d);
                    for j in 0..=d.saturating_sub(delta.degree()) {
                        let prod = qsym::quasi_shuffle_sum(&s_gamma.component(j), &m(delta));
                        left = left.add(&prod.scale(c));
                    }
                    let s_delta = qsym::antipode_smash(&m(delta), d);
                    for j in 0..=d.saturating_sub(gamma.degree()) {
                        let prod = qsym::quasi_shuffle_sum(&m(gamma), &s_delta.component(j));
                        right = right.add(&prod.scale(c));
                    }
                }
                if left != expected {
                    return Some(format!(
                        "(S(x)id) convolution for M{alpha} came out {} through degree {d}",
                        show_m(&left)
                    ));
                }
                if right != expected {
                    return Some(format!(
                        "(id(x)S) convolution for M{alpha} came out {} through degree {d}",
                        show_m(&right)
                    ));
                }
                None
            })
        }),
        case("certified_convention", move || {
            let mut global_mismatch = false;
            for alpha in &elements2 {
                if alpha.is_empty() {
                    continue;
                }
                let truth = qsym::antipode_smash(&m(alpha), d);
                let per_letter = qsym::antipode_alphabet(
                    &m(alpha),
                    d,
                    d.max(1),
                    SignConvention::PerLetterLength,
                )
                .map_err(|e| format!("M{alpha}: {e}"))?;
                if per_letter != truth {
                    return Err(format!(
                        "per-letter-length antipode of M{alpha} gives {}, duality gives {}",
                        show_m(&per_letter.flatten()),
                        show_m(&truth.flatten())
                    ));
                }
                let global = qsym::antipode_alphabet(
                    &m(alpha),
                    d,
                    d.max(1),
                    SignConvention::GlobalPartCount,
                )
                .map_err(|e| format!("M{alpha}: {e}"))?;
                if global != truth {
                    global_mismatch = true;
                }
            }
            if d < 2 {
                return Ok(Some("inconclusive below degree 2".into()));
            }
            if !global_mismatch {
                return Err("both sign conventions matched; expected exactly one".into());
            }
            Ok(Some("per-letter-length".into()))
        }),
    ]
}

fn phi_suite(max_degree: usize) -> Vec<Case> {
    let cap = max_degree.min(7);
    let pairs = comp_pairs(cap);
    let pairs2 = pairs.clone();
    let equal: Vec<(Composition, Composition)> = {
        let mut out = Vec::new();
        for n in 0..=cap / 2 {
            for alpha in compositions(n) {
                for beta in compositions(n) {
                    out.push((alpha.clone(), beta.clone()));
                }
            }
        }
        out
    };
    let elements = comps_up_to(cap);
    let inj_pairs = part_pairs(max_degree.min(5));
    let inj_elements: Vec<Partition> = (0..=max_degree.min(5)).flat_map(partitions).collect();
    vec![
        case("phi_respects_smash", move || {
            check_all(&pairs, |(alpha, beta)| {
                let lhs = sym::phi(&nsym::smash(alpha, beta));
                let rhs = sym::smash(&alpha.sorted(), &beta.sorted());
                (lhs != rhs).then(|| {
                    format!(
                        "phi(X{alpha} # X{beta}) = {} but phi # phi = {}",
                        show_h(&lhs),
                        show_h(&rhs)
                    )
                })
            })
        }),
        case("phi_respects_convolution", move || {
            check_all(&pairs2, |(alpha, beta)| {
                let lhs = sym::phi(&nsym::convolve(alpha, beta));
                let rhs = sym::external(&alpha.sorted(), &beta.sorted());
                (lhs != rhs).then(|| {
                    format!(
                        "phi(X{alpha} * X{beta}) = {} but phi * phi = {}",
                        show_h(&lhs),
                        show_h(&rhs)
                    )
                })
            })
        }),
        case("phi_respects_internal", move || {
            check_all(&equal, |(alpha, beta)| {
                let lhs = sym::phi(&nsym::internal(alpha, beta).expect("equal degrees"));
                let rhs = sym::internal(&alpha.sorted(), &beta.sorted()).expect("equal degrees");
                (lhs != rhs).then(|| {
                    format!(
                        "phi(X{alpha} o X{beta}) = {} but phi o phi = {}",
                        show_h(&lhs),
                        show_h(&rhs)
                    )
                })
            })
        }),
        case("phi_respects_coproduct", move || {
            check_all(&elements, |alpha| {
                let lhs = sym::phi_pair(&nsym::coproduct(alpha));
                let rhs = sym::coproduct(&alpha.sorted());
                (lhs != rhs).then(|| format!("coprod does not commute with phi at X{alpha}"))
            })
        }),
        case("injection_is_multiplicative", move || {
            check_all(&inj_pairs, |(lambda, mu)| {
                let lhs = qsym::inject_sym(&lambda.merge(mu));
                let rhs =
                    qsym::quasi_shuffle_sum(&qsym::inject_sym(lambda), &qsym::inject_sym(mu));
                (lhs != rhs).then(|| {
                    format!(
                        "injection of h{lambda} * h{mu} = {} but product of injections = {}",
                        show_m(&lhs),
                        show_m(&rhs)
                    )
                })
            })
        }),
        case("injection_images_are_symmetric", move || {
            check_all(&inj_elements, |lambda| {
                let image = qsym::inject_sym(lambda);
                for (alpha, c) in image.terms() {
                    let parts = alpha.parts();
                    for i in 0..parts.len().saturating_sub(1) {
                        let mut swapped = parts.to_vec();
                        swapped.swap(i, i + 1);
                        let other = Composition::new(swapped).expect("valid parts");
                        if image.coefficient(&other) != *c {
                            return Some(format!(
                                "injection of h{lambda} treats M{alpha} and a neighbor swap differently"
                            ));
                        }
                    }
                }
                None
            })
        }),
    ]
}

/// Rank of an integer matrix by fraction-free elimination.
fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        for r in row + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let a = m[row][col].clone();
            let b = m[r][col].clone();
            for c in col..cols {
                m[r][c] = &m[r][c] * &a - &m[row][c] * &b;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn psi_suite(max_degree: usize) -> Vec<Case> {
    let cap = max_degree.min(6);
    let elements = comps_up_to(cap);
    let elements2 = elements.clone();
    let pairs = comp_pairs(cap);
    let exp_cap = max_degree.min(4);
    vec![
        case("psi_is_filtration_unitriangular", move || {
            check_all(&elements, |alpha| {
                let image = nsym::psi(alpha);
                let defect = image.sub(&x(alpha));
                let bad = defect
                    .degrees()
                    .into_iter()
                    .any(|k| k >= alpha.degree() && !alpha.is_empty());
                bad.then(|| {
                    format!(
                        "psi(X{alpha}) = {} does not have X{alpha} as its only top term",
                        show_x(&image)
                    )
                })
            })
        }),
        case("psi_matrix_has_full_rank", move || {
            let basis = comps_up_to(cap);
            let index: std::collections::BTreeMap<&Composition, usize> =
                basis.iter().enumerate().map(|(i, a)| (a, i)).collect();
            let mut matrix = vec![vec![BigInt::zero(); basis.len()]; basis.len()];
            for (j, alpha) in basis.iter().enumerate() {
                for (key, c) in nsym::psi(alpha).terms() {
                    let i = *index.get(key).expect("psi stays within the filtration");
                    matrix[i][j] = c.clone();
                }
            }
            let rank = integer_rank(matrix);
            if rank == basis.len() {
                Ok(Some(format!(
                    "rank {rank} on the filtered basis through degree {cap}"
                )))
            } else {
                Err(format!("rank {rank} < dimension {}", basis.len()))
            }
        }),
        case("psi_turns_convolution_into_smash", move || {
            check_all(&pairs, |(alpha, beta)| {
                let lhs = nsym::psi_sum(&nsym::convolve(alpha, beta));
                let rhs = nsym::smash_sum(&nsym::psi(alpha), &nsym::psi(beta));
                (lhs != rhs).then(|| {
                    format!(
                        "psi(X{alpha} * X{beta}) = {} but psi # psi = {}",
                        show_x(&lhs),
                        show_x(&rhs)
                    )
                })
            })
        }),
        case("psi_respects_coproduct", move || {
            check_all(&elements2, |alpha| {
                let lhs = nsym::coproduct_sum(&nsym::psi(alpha));
                let rhs = nsym::coproduct(alpha)
                    .apply_linear(|(g, d)| tensor(&nsym::psi(g), &nsym::psi(d)));
                (lhs != rhs).then(|| format!("coprod does not commute with psi at X{alpha}"))
            })
        }),
        case("exp_alphabet_is_dual_to_psi", move || {
            let betas = comps_up_to(exp_cap);
            check_all(&betas, |beta| {
                let image = match qsym::phi_hat_sum(&m(beta), exp_cap, 5) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("M{beta}: {e}")),
                };
                for alpha in comps_up_to(exp_cap) {
                    let lhs = qsym::pairing(&image.component(alpha.degree()), &x(&alpha));
                    let rhs = qsym::pairing(&m(beta), &nsym::psi(&alpha));
                    if lhs != rhs {
                        return Some(format!(
                            "<M{beta}(e(X)), X{alpha}> = {lhs} but <M{beta}, psi(X{alpha})> = {rhs}"
                        ));
                    }
                }
                None
            })
        }),
    ]
}

fn assoc_suite(max_degree: usize) -> Vec<Case> {
    let perm_cap = max_degree.min(7);
    let x_triples = comp_triples(max_degree.min(6));
    let h_triples = part_triples(max_degree.min(7));
    let qs_triples = comp_triples(max_degree.min(6));
    vec![
        case("perm_smash_associative_sampled", move || {
            let mut rng = ChaCha8Rng::seed_from_u64(41);
            let mut triples = Vec::new();
            for total in 3..=perm_cap {
                for _ in 0..8 {
                    let p = rng.gen_range(1..total - 1);
                    let q = rng.gen_range(1..total - p);
                    let r = total - p - q;
                    triples.push((
                        random_permutation(&mut rng, p),
                        random_permutation(&mut rng, q),
                        random_permutation(&mut rng, r),
                    ));
                }
            }
            check_all(&triples, |(a, b, c)| {
                let left =
                    perm_algebra::smash_sum(&perm_algebra::smash(a, b), &FormalSum::singleton(c.clone()));
                let right =
                    perm_algebra::smash_sum(&FormalSum::singleton(a.clone()), &perm_algebra::smash(b, c));
                (left != right).then(|| format!("(P{a} # P{b}) # P{c} differs from P{a} # (P{b} # P{c})"))
            })
        }),
        case("x_smash_associative", move || {
            check_all(&x_triples, |(a, b, c)| {
                let left = nsym::smash_sum(&nsym::smash(a, b), &x(c));
                let right = nsym::smash_sum(&x(a), &nsym::smash(b, c));
                (left != right).then(|| {
                    format!(
                        "(X{a} # X{b}) # X{c} = {} but X{a} # (X{b} # X{c}) = {}",
                        show_x(&left),
                        show_x(&right)
                    )
                })
            })
        }),
        case("h_smash_associative", move || {
            check_all(&h_triples, |(a, b, c)| {
                let left = sym::smash_sum(&sym::smash(a, b), &FormalSum::singleton(c.clone()));
                let right = sym::smash_sum(&FormalSum::singleton(a.clone()), &sym::smash(b, c));
                (left != right).then(|| format!("h{a} # h{b} # h{c} depends on bracketing"))
            })
        }),
        case("quasi_shuffle_associative", move || {
            check_all(&qs_triples, |(a, b, c)| {
                let left = qsym::quasi_shuffle_sum(&qsym::quasi_shuffle(a, b), &m(c));
                let right = qsym::quasi_shuffle_sum(&m(a), &qsym::quasi_shuffle(b, c));
                (left != right).then(|| format!("M{a} . M{b} . M{c} depends on bracketing"))
            })
        }),
    ]
}
