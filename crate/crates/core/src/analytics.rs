//! Closed forms for the comparison counts of top-down MergeSort.
//!
//! `W(n)` is available through four independent routes ([`w_closed`],
//! [`w_sum`], [`w_levels`], [`w_recurrence`]) so that each can be checked
//! against the others. All integer quantities use exact `u64` arithmetic;
//! `⌈lg n⌉` comes from the bit length of `n − 1`, never from a float log.
//! Integer routines are exact for `n < 2^57`.

use alloc::vec::Vec;
use core::f64::consts::LOG2_E;

use crate::{CompCount, DyadicHalf, Error, Result};

/// Smallest `k` with `2^k ≥ n`.
pub fn ceil_lg(n: u64) -> Result<u32> {
    match n {
        0 => Err(Error::Domain("ceil_lg(0) is undefined")),
        1 => Ok(0),
        _ => Ok(u64::BITS - (n - 1).leading_zeros()),
    }
}

/// Largest `k` with `2^k ≤ n`.
pub fn floor_lg(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Domain("floor_lg(0) is undefined"));
    }
    Ok(u64::BITS - 1 - n.leading_zeros())
}

// Total for every n; used internally where n = 0 has already been handled.
fn clg(n: u64) -> u32 {
    ceil_lg(n.max(1)).unwrap_or(0)
}

/// `W(n) = n⌈lg n⌉ − 2^⌈lg n⌉ + 1`, with `W(0) = 0`.
pub fn w_closed(n: u64) -> CompCount {
    if n <= 1 {
        return 0;
    }
    let h = clg(n);
    n * u64::from(h) - (1u64 << h) + 1
}

/// `Σ_{i=1}^{n} ⌈lg i⌉`, summed term by term.
pub fn w_sum(n: u64) -> CompCount {
    (1..=n).map(|i| u64::from(clg(i))).sum()
}

/// `Σ_{y=0}^{⌈lg n⌉−1} (n − 2^y)`: the per-level worst cases added up.
pub fn w_levels(n: u64) -> CompCount {
    if n == 0 {
        return 0;
    }
    (0..clg(n)).map(|y| n - (1u64 << y)).sum()
}

/// `W(n) = W(⌊n/2⌋) + W(⌈n/2⌉) + n − 1`, `W(1) = 0`, evaluated bottom-up.
pub fn w_recurrence(n: u64) -> CompCount {
    let n = usize::try_from(n).expect("n exceeds the address space");
    w_recurrence_table(n)[n]
}

/// All values `W(0..=n_max)` of the recurrence, bottom-up.
pub fn w_recurrence_table(n_max: usize) -> Vec<CompCount> {
    let mut table = Vec::with_capacity(n_max + 1);
    table.push(0);
    for m in 1..=n_max {
        let w = if m == 1 {
            0
        } else {
            table[m / 2] + table[m - m / 2] + m as u64 - 1
        };
        table.push(w);
    }
    table
}

/// `C_k = max(n − 2^k, 0)`, the worst-case comparisons made by all merges at level `k`.
pub fn level_comps(n: u64, k: u32) -> CompCount {
    1u64.checked_shl(k).map_or(0, |p| n.saturating_sub(p))
}

/// `θ = ⌈lg n⌉ − lg n`, in `[0, 1)`.
pub fn theta(n: f64) -> Result<f64> {
    if !n.is_finite() || n <= 0.0 {
        return Err(Error::Domain("theta/epsilon need a finite n > 0"));
    }
    let lg = libm::log2(n);
    // Integer arguments take the exact route so that 2^k + 1 never rounds onto 2^k.
    let ceil = if libm::trunc(n) == n && n < 9_007_199_254_740_992.0 {
        f64::from(clg(n as u64))
    } else {
        libm::ceil(lg)
    };
    let theta = ceil - lg;
    if (0.0..1.0).contains(&theta) {
        Ok(theta)
    } else {
        Ok(0.0)
    }
}

/// A point on the correction curve `ε(n) = 1 + θ − 2^θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonPoint {
    pub n: f64,
    pub theta: f64,
    pub epsilon: f64,
}

/// `ε(n)`, the term making `W(n) = n lg n + (ε − 1)n + 1` exact.
pub fn epsilon(n: f64) -> Result<EpsilonPoint> {
    let theta = theta(n)?;
    let epsilon = if theta == 0.0 {
        0.0
    } else {
        1.0 + theta - libm::exp2(theta)
    };
    Ok(EpsilonPoint { n, theta, epsilon })
}

/// `δ = 1 − lg e + lg lg e`, the supremum of `ε`.
pub fn delta() -> f64 {
    1.0 - LOG2_E + libm::log2(LOG2_E)
}

fn n_lg_n(n: u64) -> f64 {
    let x = n as f64;
    x * libm::log2(x)
}

/// `(n lg n − n + 1, n lg n − (1 − δ)n + 1)`.
pub fn smooth_bounds(n: u64) -> (f64, f64) {
    let x = n as f64;
    let nlg = n_lg_n(n);
    (nlg - x + 1.0, nlg - (1.0 - delta()) * x + 1.0)
}

/// `n lg n − c·n + 1` for an arbitrary linear coefficient `c`.
pub fn linear_upper(n: u64, c: f64) -> f64 {
    n_lg_n(n) - c * n as f64 + 1.0
}

/// Constant in the published integer upper bound `⌈n lg n − 0.913 n⌉`.
pub const INTEGER_UPPER_CONSTANT: f64 = 0.913;

/// `(⌈n lg n⌉ − n + 1, ⌈n lg n − 0.913 n⌉)`.
pub fn integer_bounds(n: u64) -> (i64, i64) {
    let lower = libm::ceil(n_lg_n(n)) as i64 - n as i64 + 1;
    (lower, integer_upper(n, INTEGER_UPPER_CONSTANT))
}

/// `⌈n lg n − c·n⌉`.
pub fn integer_upper(n: u64, c: f64) -> i64 {
    libm::ceil(n_lg_n(n) - c * n as f64) as i64
}

/// True when `W(n) > ⌈n lg n − c·n⌉`, i.e. `n` refutes the bound with constant `c`.
pub fn violates_integer_upper(n: u64, c: f64) -> bool {
    w_closed(n) as i64 > integer_upper(n, c)
}

/// `B(n) = n/2·(⌊lg n⌋ + 1) − Σ_{k=0}^{⌊lg n⌋} 2^k·Zigzag(n / 2^{k+1})`.
///
/// Evaluated in half units. Each `2^k·Zigzag(n/2^{k+1})` equals
/// `min(r, 2^{k+1} − r) / 2` with `r = n mod 2^{k+1}`.
///
/// # Panics
///
/// If the half units fail to cancel, which would be an arithmetic bug.
pub fn best_case(n: u64) -> CompCount {
    let value = best_case_halves(n);
    let v = value
        .to_integer()
        .unwrap_or_else(|| panic!("best_case({n}) left a half unit: {value}"));
    v as CompCount
}

/// The exact value of the best-case formula before integrality is asserted.
pub fn best_case_halves(n: u64) -> DyadicHalf {
    if n == 0 {
        return DyadicHalf::ZERO;
    }
    let fl = floor_lg(n).unwrap_or(0);
    let n = i128::from(n);
    let head = DyadicHalf::from_halves(n) * i128::from(fl + 1);
    let zigzags: DyadicHalf = (0..=fl)
        .map(|k| {
            let block = 1i128 << (k + 1);
            let r = n % block;
            DyadicHalf::from_halves(r.min(block - r))
        })
        .sum();
    head - zigzags
}

/// `Σ_{i=0}^{n−1} popcount(i)`, counted one bit position at a time.
pub fn bit_sum(n: u64) -> CompCount {
    let mut total = 0u64;
    for b in 0..u64::BITS {
        let half = 1u64 << b;
        if half >= n {
            break;
        }
        let period = half << 1;
        total += (n / period) * half + (n % period).saturating_sub(half);
    }
    total
}

/// Structural statistics of the recursion tree, from closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeStats {
    /// `h = ⌈lg n⌉`.
    pub depth: u32,
    /// `2n − 1`.
    pub nodes: u64,
    /// Recursive calls, `2(n − 1)`.
    pub calls: u64,
    /// Sum of all node sizes, `n⌈lg n⌉ − 2^⌈lg n⌉ + 2n`.
    pub s_n: u64,
    /// Mean size over the recursive calls; `None` for `n = 1`.
    pub a_n: Option<f64>,
}

pub fn tree_stats(n: u64) -> Result<TreeStats> {
    let depth = ceil_lg(n)?;
    Ok(TreeStats {
        depth,
        nodes: 2 * n - 1,
        calls: 2 * (n - 1),
        s_n: n * u64::from(depth) + 2 * n - (1u64 << depth),
        a_n: average_call_size(n).ok(),
    })
}

/// `A_n = ½(1 + 1/(n − 1))(lg n + ε)`, the mean subarray size passed to a recursive call.
pub fn average_call_size(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain("average call size needs n ≥ 2"));
    }
    let x = n as f64;
    let eps = epsilon(x)?.epsilon;
    Ok(0.5 * (1.0 + 1.0 / (x - 1.0)) * (libm::log2(x) + eps))
}

/// Node counts in the last two levels of the recursion tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelCensus {
    /// Leaves at level `h − 1`: `2^h − n`.
    pub leaves_h1: u64,
    /// Internal nodes at level `h − 1`: `n − 2^{h−1}`.
    pub internals_h1: u64,
    /// Nodes (all leaves) at level `h`: `2n − 2^h`.
    pub leaves_h: u64,
}

pub fn level_census(n: u64) -> Result<LevelCensus> {
    if n < 2 {
        return Err(Error::Domain("level census needs n ≥ 2"));
    }
    let h = clg(n);
    let p = 1u64 << h;
    Ok(LevelCensus {
        leaves_h1: p - n,
        internals_h1: n - p / 2,
        leaves_h: 2 * n - p,
    })
}

/// `(n − 1)·⌈lg n⌉`: every merge charged the full depth.
pub fn rough_upper(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    (n - 1) * u64::from(clg(n))
}

/// Every closed-form quantity for one `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticsRow {
    pub n: u64,
    pub w: CompCount,
    pub b: CompCount,
    pub lower: f64,
    pub upper: f64,
    pub epsilon: f64,
    pub depth: u32,
    pub nodes: u64,
    pub calls: u64,
    pub s_n: u64,
    pub leaves_h1: u64,
    pub internals_h1: u64,
    pub leaves_h: u64,
}

impl AnalyticsRow {
    pub fn new(n: u64) -> Result<Self> {
        let stats = tree_stats(n)?;
        let (lower, upper) = smooth_bounds(n);
        // For n = 1 the single node is a leaf at level h = 0.
        let census = level_census(n).unwrap_or(LevelCensus {
            leaves_h1: 0,
            internals_h1: 0,
            leaves_h: 1,
        });
        Ok(AnalyticsRow {
            n,
            w: w_closed(n),
            b: best_case(n),
            lower,
            upper,
            epsilon: epsilon(n as f64)?.epsilon,
            depth: stats.depth,
            nodes: stats.nodes,
            calls: stats.calls,
            s_n: stats.s_n,
            leaves_h1: census.leaves_h1,
            internals_h1: census.internals_h1,
            leaves_h: census.leaves_h,
        })
    }
}
