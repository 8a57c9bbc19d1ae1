//! Exhaustive desk-scale verification sweeps.
//!
//! Each check walks every instance in its range and records failures as
//! counterexample strings. The acceptance test suite pins the ranges; the
//! `verify` CLI subcommand exposes them with caller-chosen bounds.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Result;
use crate::involutions::{enumerate_a, free_entries, m_involution, tau};
use crate::shapes::{
    bounded_partitions_of, compositions_of, is_l_admissible, partitions_of, Composition,
    Partition,
};
use crate::symfunc::{
    classical_e_pieri, classical_h_pieri, e_pieri_set, k_rectangle, kostka_matrix, multiply_e,
    multiply_h, omega, rectangle_multiply, schur_multiply, to_schur, SymFunc,
};
use crate::tableaux::{
    enumerate, enumerate_backtrack, enumerate_chains, k_kostka, skew_k_kostka, ssyt_count,
    transposed_skew_kostka, KTableau, TableauMode,
};

const MAX_RECORDED: usize = 20;

/// Outcome of one verification check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Individual assertions exercised.
    pub checks: u64,
    /// Number of failed assertions (only the first few are recorded).
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn assert(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(msg());
            }
        }
    }

    fn warn(&mut self, msg: String) {
        if self.warnings.len() < MAX_RECORDED {
            self.warnings.push(msg);
        }
    }
}

/// Unitriangularity of the Kostka matrices, the zero pattern outside
/// dominance, exactness of the integer inverse, and the triangular Schur
/// expansion of every k-Schur function (negative expansion coefficients
/// are reported as warnings, never failures).
pub fn check_triangularity(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("triangularity");
    let mut negatives = 0u64;
    for n in 0..=max_degree {
        let m = kostka_matrix(k, n)?;
        let index = m.index();
        for (i, mu) in index.iter().enumerate() {
            for (j, lambda) in index.iter().enumerate() {
                let entry = m.entries()[i][j];
                if i == j {
                    out.assert(entry == 1, || format!("K[{mu}][{mu}] = {entry} at k={k}"));
                } else if !mu.dominates(lambda) {
                    out.assert(entry == 0, || {
                        format!("K[{mu}][{lambda}] = {entry} without dominance at k={k}")
                    });
                }
            }
        }
        let inv = m.inverse()?;
        out.assert(inv.len() == index.len(), || "inverse has wrong size".to_string());
        for lambda in index {
            let f = to_schur(&SymFunc::kschur(k, lambda.clone())?)?;
            out.assert(f.coeff(lambda) == 1, || {
                format!("leading Schur coefficient of index {lambda} is {}", f.coeff(lambda))
            });
            for (mu, &c) in f.terms() {
                if mu != lambda {
                    out.assert(mu.dominates(lambda), || {
                        format!("Schur term {mu} of index {lambda} breaks triangularity")
                    });
                    if c < 0 {
                        negatives += 1;
                    }
                }
            }
        }
    }
    if negatives > 0 {
        out.warn(format!(
            "{negatives} negative Schur-expansion coefficients at k={k}, degrees up to {max_degree}"
        ));
    }
    Ok(out)
}

/// Invariance of the Kostka count under rearranging the weight.
pub fn check_weight_symmetry(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("weight-symmetry");
    for n in 0..=max_degree {
        for mu in bounded_partitions_of(n, k) {
            for alpha in compositions_of(n) {
                let sorted = Composition::from(&alpha.sorted());
                let lhs = k_kostka(k, &mu, &alpha)?;
                let rhs = k_kostka(k, &mu, &sorted)?;
                out.assert(lhs == rhs, || {
                    format!("K[{mu}][{alpha:?}] = {lhs} but sorted weight gives {rhs} at k={k}")
                });
            }
        }
    }
    Ok(out)
}

/// The weight-permuting operator is an involution and a bijection onto
/// the tableaux of the swapped weight, over every composition.
pub fn check_tau(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("tau");
    let mut cache: HashMap<(Partition, Vec<usize>), Vec<KTableau>> = HashMap::new();
    for n in 0..=max_degree {
        for mu in bounded_partitions_of(n, k) {
            for alpha in compositions_of(n) {
                for a in 1..alpha.len() {
                    let swapped = alpha.swap_adjacent(a);
                    let source = cached_enumeration(&mut cache, k, &mu, &alpha)?;
                    let target = cached_enumeration(&mut cache, k, &mu, &swapped)?;
                    let mut images = Vec::with_capacity(source.len());
                    let mut all_ok = true;
                    for t in &source {
                        match tau(t, a) {
                            Ok(image) => {
                                match tau(&image, a) {
                                    Ok(back) => {
                                        if back != *t {
                                            all_ok = false;
                                        }
                                    }
                                    Err(_) => all_ok = false,
                                }
                                images.push(image);
                            }
                            Err(e) => {
                                all_ok = false;
                                out.warn(format!("tau failed on mu={mu} alpha={alpha:?} a={a}: {e}"));
                            }
                        }
                    }
                    images.sort();
                    images.dedup();
                    out.assert(all_ok && images == target, || {
                        format!("tau is not a weight-swapping involution at mu={mu} alpha={alpha:?} a={a} k={k}")
                    });
                }
            }
        }
    }
    Ok(out)
}

fn cached_enumeration(
    cache: &mut HashMap<(Partition, Vec<usize>), Vec<KTableau>>,
    k: usize,
    mu: &Partition,
    alpha: &Composition,
) -> Result<Vec<KTableau>> {
    let key = (mu.clone(), alpha.parts().to_vec());
    if let Some(ts) = cache.get(&key) {
        return Ok(ts.clone());
    }
    let ts = enumerate(k, mu, &Partition::empty(), alpha, TableauMode::ColumnStrict)?;
    cache.insert(key, ts.clone());
    Ok(ts)
}

/// The chain count equals the tableau count, with the backtracking
/// enumerator as the independent reference.
pub fn check_chain_identity(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("chains");
    for n in 0..=max_degree {
        for mu in bounded_partitions_of(n, k) {
            for alpha in compositions_of(n) {
                let chains = enumerate_chains(k, &mu, &alpha).len() as i64;
                let oracle = enumerate_backtrack(
                    k,
                    &mu,
                    &Partition::empty(),
                    &alpha,
                    TableauMode::ColumnStrict,
                )?
                .len() as i64;
                let production = k_kostka(k, &mu, &alpha)?;
                out.assert(chains == oracle && production == oracle, || {
                    format!(
                        "mu={mu} alpha={alpha:?} k={k}: {chains} chains, {oracle} tableaux, production {production}"
                    )
                });
            }
        }
    }
    Ok(out)
}

/// The one-step recursion of the Kostka numbers over admissible pairs.
pub fn check_kostka_recursion(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("kostka-recursion");
    for n in 0..=max_degree {
        for mu in bounded_partitions_of(n, k) {
            for l in 1..=k.min(n) {
                for lambda in bounded_partitions_of(n - l, k) {
                    let mut prefixed = vec![l];
                    prefixed.extend_from_slice(lambda.parts());
                    let lhs = k_kostka(k, &mu, &Composition::new(prefixed))?;
                    let mut rhs = 0i64;
                    for nu in bounded_partitions_of(n - l, k) {
                        if is_l_admissible(&mu, &nu, l, k) {
                            rhs += k_kostka(k, &nu, &Composition::from(&lambda))?;
                        }
                    }
                    out.assert(lhs == rhs, || {
                        format!("recursion fails at mu={mu} l={l} lambda={lambda} k={k}: {lhs} vs {rhs}")
                    });
                }
            }
        }
    }
    Ok(out)
}

/// h-Pieri products agree with classical multiplication after the Schur
/// expansion, and iterated products have skew-tableau coefficients.
pub fn check_pieri_h(k: usize, max_nu: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("pieri-h");
    for n in 0..=max_nu {
        for nu in bounded_partitions_of(n, k) {
            let f = SymFunc::kschur(k, nu.clone())?;
            let f_schur = to_schur(&f)?;
            for l in 0..=k {
                let lhs = to_schur(&multiply_h(k, l, &f)?)?;
                let rhs = classical_h_pieri(l, &f_schur)?;
                out.assert(lhs == rhs, || {
                    format!("h-Pieri disagrees with classical at nu={nu} l={l} k={k}")
                });
            }
        }
    }
    // Iterated form: coefficients of h_lambda * s^(k)_mu count skew
    // tableaux, one degree beyond the plain sweep.
    for n in 0..=max_nu + 1 {
        for m in 0..=n {
            for mu in bounded_partitions_of(m, k) {
                for lambda in bounded_partitions_of(n - m, k) {
                    let mut product = SymFunc::kschur(k, mu.clone())?;
                    for &part in lambda.parts().iter().rev() {
                        product = multiply_h(k, part, &product)?;
                    }
                    let weight = Composition::from(&lambda);
                    for nu in bounded_partitions_of(n, k) {
                        let coeff = product.coeff(&nu);
                        // Cores that do not nest admit no skew tableaux.
                        let count = skew_k_kostka(k, &nu, &mu, &weight).unwrap_or(0);
                        out.assert(coeff == count, || {
                            format!(
                                "coefficient of {nu} in h_{lambda} * s({mu}) is {coeff}, skew count {count} at k={k}"
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// e-Pieri products against classical multiplication, transposed skew
/// coefficients, and the alternating product identity.
pub fn check_pieri_e(k: usize, max_nu: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("pieri-e");
    for n in 0..=max_nu {
        for nu in bounded_partitions_of(n, k) {
            let f = SymFunc::kschur(k, nu.clone())?;
            let f_schur = to_schur(&f)?;
            for l in 0..=k {
                let lhs = to_schur(&multiply_e(k, l, &f)?)?;
                let rhs = classical_e_pieri(l, &f_schur)?;
                out.assert(lhs == rhs, || {
                    format!("e-Pieri disagrees with classical at nu={nu} l={l} k={k}")
                });
                if l == 0 {
                    continue;
                }
                // The alternating sum of h e products collapses onto the
                // e-Pieri set with sign (-1)^l.
                let mut total = SymFunc::zero(crate::symfunc::Basis::Schur, n + l);
                for r in 0..l {
                    let sign = if r.is_multiple_of(2) { 1 } else { -1 };
                    let term = multiply_h(k, l - r, &multiply_e(k, r, &f)?)?;
                    total.add_scaled(&to_schur(&term)?, sign)?;
                }
                let e_sign = if l.is_multiple_of(2) { 1 } else { -1 };
                for lambda in e_pieri_set(k, &nu, l)? {
                    total.add_scaled(&to_schur(&SymFunc::kschur(k, lambda)?)?, e_sign)?;
                }
                out.assert(total.is_zero(), || {
                    format!("alternating Pieri sum is nonzero at nu={nu} l={l} k={k}")
                });
            }
        }
    }
    for n in 0..=max_nu + 1 {
        for m in 0..=n {
            for mu in bounded_partitions_of(m, k) {
                for lambda in bounded_partitions_of(n - m, k) {
                    let mut product = SymFunc::kschur(k, mu.clone())?;
                    for &part in lambda.parts().iter().rev() {
                        product = multiply_e(k, part, &product)?;
                    }
                    let weight = Composition::from(&lambda);
                    for nu in bounded_partitions_of(n, k) {
                        let coeff = product.coeff(&nu);
                        let count = transposed_skew_kostka(k, &nu, &mu, &weight).unwrap_or(0);
                        out.assert(coeff == count, || {
                            format!(
                                "coefficient of {nu} in e_{lambda} * s({mu}) is {coeff}, transposed count {count} at k={k}"
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The sign-reversing map is a fixed-point-free involution flipping the
/// sign, so the signed enumeration of cancellation fillings vanishes.
pub fn check_msign(k: usize, max_mu: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("msign");
    let mut ties = 0u64;
    for n in 0..=max_mu {
        for mu in bounded_partitions_of(n, k) {
            for l in 1..=k.min(n) {
                for nu in bounded_partitions_of(n - l, k) {
                    let fillings = enumerate_a(k, &nu, l, &mu)?;
                    let signed: i64 = fillings.iter().map(|f| f.sign()).sum();
                    out.assert(signed == 0, || {
                        format!("signed sum {signed} at mu={mu} nu={nu} l={l} k={k}")
                    });
                    for f in &fillings {
                        let fe = free_entries(f)?;
                        if let (Some((r1, _)), Some((r2, _))) = (fe.r1(), fe.r2()) {
                            if r1 == r2 {
                                ties += 1;
                            }
                        }
                        let g = m_involution(f)?;
                        out.assert(g != *f, || {
                            format!("fixed point at mu={mu} nu={nu} l={l} k={k}")
                        });
                        out.assert(g.sign() == -f.sign(), || {
                            format!("sign preserved at mu={mu} nu={nu} l={l} k={k}")
                        });
                        let back = m_involution(&g)?;
                        out.assert(back == *f, || {
                            format!("not an involution at mu={mu} nu={nu} l={l} k={k}")
                        });
                    }
                }
            }
        }
    }
    if ties > 0 {
        out.warn(format!(
            "{ties} fillings had a free x and a free y in the same lowest row"
        ));
    }
    Ok(out)
}

/// The omega involution commutes with the Schur expansion.
pub fn check_omega(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("omega");
    for n in 0..=max_degree {
        for lambda in bounded_partitions_of(n, k) {
            let f = SymFunc::kschur(k, lambda.clone())?;
            let lhs = to_schur(&omega(&f))?;
            let rhs = omega(&to_schur(&f)?);
            out.assert(lhs == rhs, || {
                format!("omega does not commute with the Schur expansion at {lambda}, k={k}")
            });
            out.assert(omega(&omega(&f)) == f, || {
                format!("omega squared moves {lambda} at k={k}")
            });
        }
    }
    Ok(out)
}

/// Multiplying by a k-rectangle Schur function only reindexes.
pub fn check_rectangle(k: usize, max_mu: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("rectangle");
    for n in 0..=max_mu {
        for mu in bounded_partitions_of(n, k) {
            let f = SymFunc::kschur(k, mu.clone())?;
            let f_schur = to_schur(&f)?;
            for width in 1..=k {
                let lhs = to_schur(&rectangle_multiply(k, width, &f)?)?;
                let rhs = schur_multiply(&k_rectangle(k, width), &f_schur)?;
                out.assert(lhs == rhs, || {
                    format!("rectangle product disagrees at mu={mu} width={width} k={k}")
                });
            }
        }
    }
    Ok(out)
}

/// For k at least the main hook-length, tableau counts reduce to
/// classical semistandard counts.
pub fn check_reduction(max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("reduction");
    for n in 1..=max_degree {
        for shape in partitions_of(n) {
            let k = shape.main_hook();
            for weight in partitions_of(n) {
                let alpha = Composition::from(&weight);
                let classical = ssyt_count(&shape, &Partition::empty(), &alpha)?;
                let via_k = k_kostka(k, &shape, &alpha)?;
                out.assert(classical == via_k, || {
                    format!("shape {shape} weight {weight}: {via_k} k-tableaux, {classical} classical")
                });
            }
            if n <= 4 {
                for alpha in compositions_of(n) {
                    let classical = ssyt_count(&shape, &Partition::empty(), &alpha)?;
                    let via_k = k_kostka(k, &shape, &alpha)?;
                    out.assert(classical == via_k, || {
                        format!("shape {shape} weight {alpha:?}: {via_k} k-tableaux, {classical} classical")
                    });
                }
            }
        }
    }
    Ok(out)
}

/// k-Schur functions with small main hook are plain Schur functions.
pub fn check_kss(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("kss");
    for n in 0..=max_degree {
        for lambda in bounded_partitions_of(n, k) {
            if lambda.main_hook() > k {
                continue;
            }
            let f = to_schur(&SymFunc::kschur(k, lambda.clone())?)?;
            out.assert(f.terms().len() == 1 && f.coeff(&lambda) == 1, || {
                format!("index {lambda} with hook at most {k} expands beyond itself")
            });
        }
    }
    Ok(out)
}

/// Full list agreement of the two enumeration engines, straight and skew,
/// both orderings.
pub fn check_oracle_agreement(k: usize, max_degree: usize) -> Result<CheckResult> {
    let mut out = CheckResult::new("oracle-agreement");
    for n in 0..=max_degree {
        for mu in bounded_partitions_of(n, k) {
            for alpha in compositions_of(n) {
                for mode in [TableauMode::ColumnStrict, TableauMode::Transposed] {
                    let fast = enumerate(k, &mu, &Partition::empty(), &alpha, mode)?;
                    let slow = enumerate_backtrack(k, &mu, &Partition::empty(), &alpha, mode)?;
                    out.assert(fast == slow, || {
                        format!("engines disagree at mu={mu} alpha={alpha:?} mode={mode:?} k={k}")
                    });
                }
            }
            // Skew shapes, partition weights.
            for m in 0..n {
                for inner in bounded_partitions_of(m, k) {
                    if !mu.contains(&inner) {
                        continue;
                    }
                    for weight in partitions_of(n - m) {
                        let alpha = Composition::from(&weight);
                        for mode in [TableauMode::ColumnStrict, TableauMode::Transposed] {
                            let fast = match enumerate(k, &mu, &inner, &alpha, mode) {
                                Ok(ts) => ts,
                                Err(_) => continue,
                            };
                            let slow = enumerate_backtrack(k, &mu, &inner, &alpha, mode)?;
                            out.assert(fast == slow, || {
                                format!(
                                    "engines disagree at mu={mu}/{inner} weight={weight} mode={mode:?} k={k}"
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Aggregate wall time of the two engines over every shape and partition
/// weight of one degree. Returns (chain engine, backtracking oracle).
pub fn enumeration_timings(k: usize, degree: usize) -> Result<(Duration, Duration)> {
    let shapes = bounded_partitions_of(degree, k);
    let weights: Vec<Composition> = partitions_of(degree)
        .iter()
        .filter(|w| w.is_bounded_by(k))
        .map(Composition::from)
        .collect();
    // One untimed pass of each engine so both are measured warm, then
    // several timed repetitions to keep millisecond noise out of the
    // ratio.
    for mu in &shapes {
        for alpha in &weights {
            enumerate(k, mu, &Partition::empty(), alpha, TableauMode::ColumnStrict)?;
            enumerate_backtrack(k, mu, &Partition::empty(), alpha, TableauMode::ColumnStrict)?;
        }
    }
    const REPS: usize = 5;
    let mut fast = Duration::MAX;
    let mut slow = Duration::MAX;
    let mut fast_total = 0usize;
    let mut slow_total = 0usize;
    for _ in 0..REPS {
        fast_total = 0;
        let start = Instant::now();
        for mu in &shapes {
            for alpha in &weights {
                fast_total +=
                    enumerate(k, mu, &Partition::empty(), alpha, TableauMode::ColumnStrict)?.len();
            }
        }
        fast = fast.min(start.elapsed());

        slow_total = 0;
        let start = Instant::now();
        for mu in &shapes {
            for alpha in &weights {
                slow_total += enumerate_backtrack(
                    k,
                    mu,
                    &Partition::empty(),
                    alpha,
                    TableauMode::ColumnStrict,
                )?
                .len();
            }
        }
        slow = slow.min(start.elapsed());
    }
    assert_eq!(fast_total, slow_total);
    Ok((fast, slow))
}

/// The named verification suites exposed by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Triangularity,
    WeightSymmetry,
    Tau,
    Chains,
    PieriH,
    PieriE,
    MSign,
    Omega,
    Rectangle,
    Reduction,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "triangularity" => Suite::Triangularity,
            "weight-symmetry" => Suite::WeightSymmetry,
            "tau" => Suite::Tau,
            "chains" => Suite::Chains,
            "pieri-h" => Suite::PieriH,
            "pieri-e" => Suite::PieriE,
            "msign" => Suite::MSign,
            "omega" => Suite::Omega,
            "rectangle" => Suite::Rectangle,
            "reduction" => Suite::Reduction,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub const ALL_NAMES: &'static [&'static str] = &[
        "triangularity",
        "weight-symmetry",
        "tau",
        "chains",
        "pieri-h",
        "pieri-e",
        "msign",
        "omega",
        "rectangle",
        "reduction",
        "all",
    ];
}

/// Run one suite at the given bounds.
pub fn run_suite(suite: Suite, k: usize, max_degree: usize) -> Result<Vec<CheckResult>> {
    Ok(match suite {
        Suite::Triangularity => vec![check_triangularity(k, max_degree)?],
        Suite::WeightSymmetry => vec![check_weight_symmetry(k, max_degree)?],
        Suite::Tau => vec![check_tau(k, max_degree)?],
        Suite::Chains => vec![
            check_chain_identity(k, max_degree)?,
            check_kostka_recursion(k, max_degree)?,
        ],
        Suite::PieriH => vec![check_pieri_h(k, max_degree)?],
        Suite::PieriE => vec![check_pieri_e(k, max_degree)?],
        Suite::MSign => vec![check_msign(k, max_degree)?],
        Suite::Omega => vec![check_omega(k, max_degree)?],
        Suite::Rectangle => vec![check_rectangle(k, max_degree)?],
        Suite::Reduction => vec![check_reduction(max_degree)?, check_kss(k, max_degree)?],
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Triangularity,
                Suite::WeightSymmetry,
                Suite::Tau,
                Suite::Chains,
                Suite::PieriH,
                Suite::PieriE,
                Suite::MSign,
                Suite::Omega,
                Suite::Rectangle,
                Suite::Reduction,
            ] {
                all.extend(run_suite(s, k, max_degree)?);
            }
            all
        }
    })
}
