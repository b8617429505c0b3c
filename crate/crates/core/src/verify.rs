//! Invariant suites cross-checking the analytic and measured sides.
//!
//! Each suite stops at its first failing `n`. Suites always run in the
//! order of [`SUITES`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::adversary::{self, CostGuard};
use crate::analytics::{self, delta};
use crate::rectree::RecTree;
use crate::sorters;

/// Absolute tolerance per unit of `n` for real-valued bound comparisons.
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// Largest `n` the merge-extremality suite enumerates.
pub const MERGE_SPLIT_MAX: u64 = 12;

pub const SUITES: [&str; 9] = [
    "closed-forms",
    "level-decomposition",
    "bounds",
    "best-case",
    "interpolation",
    "recursion-tree",
    "generator",
    "brute-force",
    "merge-extremality",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub n: u64,
    pub quantity: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}: {}", self.n, self.quantity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub outcome: Result<(), Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` for the closed-form, tree and generator suites.
    pub n_max: u64,
    /// Largest `n` for exhaustive permutation search.
    pub brute_max: usize,
}

pub fn run_all(config: VerifyConfig) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|&name| SuiteReport {
            name,
            outcome: run_suite(name, config),
        })
        .collect()
}

pub fn run_suite(name: &str, config: VerifyConfig) -> Result<(), Failure> {
    let n_max = config.n_max;
    match name {
        "closed-forms" => closed_forms(n_max),
        "level-decomposition" => level_decomposition(n_max),
        "bounds" => bounds(n_max),
        "best-case" => best_case(n_max),
        "interpolation" => interpolation(n_max),
        "recursion-tree" => recursion_tree(n_max),
        "generator" => generator(n_max),
        "brute-force" => brute_force(config.brute_max),
        "merge-extremality" => merge_extremality(n_max.min(MERGE_SPLIT_MAX)),
        other => Err(Failure {
            n: 0,
            quantity: format!("unknown suite {other:?}"),
        }),
    }
}

fn ensure(ok: bool, n: u64, quantity: impl FnOnce() -> String) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure {
            n,
            quantity: quantity(),
        })
    }
}

fn closed_forms(n_max: u64) -> Result<(), Failure> {
    let table = analytics::w_recurrence_table(n_max as usize);
    let mut running = 0u64;
    for n in 1..=n_max {
        running += u64::from(analytics::ceil_lg(n).unwrap_or(0));
        let w = analytics::w_closed(n);
        let levels = analytics::w_levels(n);
        let rec = table[n as usize];
        ensure(w == running && w == levels && w == rec, n, || {
            format!("w_closed={w} sum={running} levels={levels} recurrence={rec}")
        })?;
    }
    // The literal term-by-term sum, at a bounded number of points.
    for n in (1..=n_max).filter(|n| *n <= 1024 || n.is_power_of_two()) {
        let (w, s) = (analytics::w_closed(n), analytics::w_sum(n));
        ensure(w == s, n, || format!("w_closed={w} w_sum={s}"))?;
    }
    Ok(())
}

fn level_decomposition(n_max: u64) -> Result<(), Failure> {
    for n in 1..=n_max {
        let h = analytics::ceil_lg(n).unwrap_or(0);
        let total: u64 = (0..=h).map(|k| analytics::level_comps(n, k)).sum();
        let w = analytics::w_closed(n);
        ensure(total == w, n, || format!("sum of level comps {total} != W {w}"))?;
        for k in 0..=h + 1 {
            let positive = analytics::level_comps(n, k) > 0;
            ensure(positive == (k < h), n, || {
                format!("level_comps(n, {k}) positivity wrong")
            })?;
        }
    }
    Ok(())
}

fn bounds(n_max: u64) -> Result<(), Failure> {
    let d = delta();
    for n in 1..=n_max {
        let w = analytics::w_closed(n);
        let x = n as f64;
        let (lower, upper) = analytics::smooth_bounds(n);
        let tol = BOUND_TOLERANCE * x;
        ensure(lower <= w as f64 + tol && w as f64 <= upper + tol, n, || {
            format!("W={w} outside [{lower}, {upper}]")
        })?;
        if n.is_power_of_two() {
            let k = u64::from(n.trailing_zeros());
            ensure(w + n == k * n + 1, n, || format!("W={w} != k·2^k − 2^k + 1"))?;
        }
        let eps = analytics::epsilon(x).map(|p| p.epsilon).unwrap_or(f64::NAN);
        ensure((0.0..d).contains(&eps), n, || format!("epsilon={eps} not in [0, δ)"))?;
        ensure((w as f64) < analytics::linear_upper(n, 1.0 - d), n, || {
            format!("W={w} not strictly below n lg n − (1−δ)n + 1")
        })?;
        let (ilo, iup) = analytics::integer_bounds(n);
        ensure(ilo <= w as i64 && w as i64 <= iup, n, || {
            format!("W={w} outside integer bounds [{ilo}, {iup}]")
        })?;
    }
    let witness = (1..=64).find(|&n| analytics::violates_integer_upper(n, 0.914));
    ensure(witness.is_some(), 64, || String::from("no n ≤ 64 refutes ⌈n lg n − 0.914n⌉"))
}

fn best_case(n_max: u64) -> Result<(), Failure> {
    let mut bits = 0u64;
    for n in 1..=n_max {
        bits += u64::from((n - 1).count_ones());
        let halves = analytics::best_case_halves(n);
        ensure(halves.is_integer(), n, || format!("best case {halves} is not an integer"))?;
        let b = analytics::best_case(n);
        ensure(b == bits && analytics::bit_sum(n) == bits, n, || {
            format!("best_case={b} bit_sum={} enumerated={bits}", analytics::bit_sum(n))
        })?;
    }
    Ok(())
}

fn interpolation(n_max: u64) -> Result<(), Failure> {
    // Strictly inside a dyadic block W is linear.
    for n in (2..n_max).filter(|n| !n.is_power_of_two()) {
        let w = |m: u64| i128::from(analytics::w_closed(m));
        let d2 = w(n + 1) - 2 * w(n) + w(n - 1);
        ensure(d2 == 0, n, || format!("second difference {d2}"))?;
    }
    Ok(())
}

fn recursion_tree(n_max: u64) -> Result<(), Failure> {
    for n in 1..=n_max {
        let tree = RecTree::build(n).map_err(|e| Failure {
            n,
            quantity: format!("{e}"),
        })?;
        let h = analytics::ceil_lg(n).unwrap_or(0);
        ensure(tree.depth() == h, n, || format!("depth {} != ⌈lg n⌉ {h}", tree.depth()))?;
        let census = tree.census();
        ensure(census.nodes == 2 * n - 1 && census.leaves == n, n, || {
            format!("nodes={} leaves={}", census.nodes, census.leaves)
        })?;
        let s_n = analytics::tree_stats(n).map(|s| s.s_n).unwrap_or(0);
        ensure(tree.size_sum() == s_n, n, || format!("size sum {} != S_n {s_n}", tree.size_sum()))?;
        for profile in tree.level_profiles() {
            let k = profile.level;
            let measured = profile.worst_comps();
            let formula = analytics::level_comps(n, k);
            ensure(measured == formula, n, || format!("level {k}: tree {measured} != C_k {formula}"))?;
            let spread = profile.spread();
            ensure(spread <= 1, n, || format!("level {k} size spread {spread}"))?;
        }
        if n >= 2 {
            let from_tree = tree.last_levels();
            let formula = analytics::level_census(n).ok();
            ensure(Some(from_tree) == formula, n, || {
                format!("last-levels census {from_tree:?} != {formula:?}")
            })?;
            ensure(census.leaves_by_level.keys().all(|&l| l + 1 >= h), n, || {
                String::from("leaf above level h − 1")
            })?;
        }
    }
    Ok(())
}

fn generator(n_max: u64) -> Result<(), Failure> {
    for n in 1..=n_max {
        let keys: Vec<u64> = (1..=n).collect();
        let perm = adversary::un_sort(&keys).map_err(|e| Failure {
            n,
            quantity: format!("{e}"),
        })?;
        let comps = sorters::merge_sort(perm.values()).comps;
        let w = analytics::w_closed(n);
        ensure(comps == w, n, || format!("merge_sort(un_sort) comps={comps} != W={w}"))?;
    }
    Ok(())
}

fn brute_force(brute_max: usize) -> Result<(), Failure> {
    for n in 1..=brute_max {
        let fail = |e: crate::Error| Failure {
            n: n as u64,
            quantity: format!("{e}"),
        };
        let (max, min) =
            adversary::brute_force_extremes(n, CostGuard::Standard, |p| sorters::merge_sort(p).comps)
                .map_err(fail)?;
        let (w, b) = (analytics::w_closed(n as u64), analytics::best_case(n as u64));
        ensure(max.count == w, n as u64, || format!("exhaustive max {} != W {w}", max.count))?;
        ensure(min.count == b, n as u64, || format!("exhaustive min {} != B {b}", min.count))?;
        let (bi, _) = adversary::brute_force_extremes(n, CostGuard::Standard, |p| {
            sorters::binary_insertion_sort(p).comps
        })
        .map_err(fail)?;
        let s = analytics::w_sum(n as u64);
        ensure(bi.count == s, n as u64, || {
            format!("binary insertion exhaustive max {} != Σ⌈lg i⌉ {s}", bi.count)
        })?;
    }
    Ok(())
}

fn merge_extremality(n_max: u64) -> Result<(), Failure> {
    for n in 2..=n_max {
        let split = adversary::worst_merge_split(n as usize).map_err(|e| Failure {
            n,
            quantity: format!("{e}"),
        })?;
        ensure(split.count == n - 1, n, || format!("worst balanced merge {} != n − 1", split.count))?;
    }
    Ok(())
}
