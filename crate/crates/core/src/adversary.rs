//! Worst-case inputs for MergeSort and exhaustive oracles at small `n`.

use alloc::vec::Vec;

use crate::sorters::{self, Tally};
use crate::{CompCount, Error, Result};

/// A rearrangement of a sorted base sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation<T> {
    values: Vec<T>,
}

impl<T> Permutation<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Reshuffles strictly increasing `sorted` into an input on which
/// [`sorters::merge_sort`] makes exactly `W(n)` comparisons.
///
/// Mirrors MergeSort's split: from the top down, the sorted values are dealt
/// alternately to the right (`⌈n/2⌉`) and left (`⌊n/2⌋`) blocks, so the two
/// sorted halves interleave completely and the final merge costs `n − 1`.
/// Each block is then arranged the same way.
pub fn un_sort<T: Ord + Clone>(sorted: &[T]) -> Result<Permutation<T>> {
    if let Some(i) = sorted.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing { index: i + 1 });
    }
    let mut values = Vec::with_capacity(sorted.len());
    arrange(sorted, &mut values);
    Ok(Permutation { values })
}

fn arrange<T: Clone>(sorted: &[T], out: &mut Vec<T>) {
    let n = sorted.len();
    if n <= 1 {
        out.extend_from_slice(sorted);
        return;
    }
    // Counting down from the largest value, even offsets go right and odd offsets left.
    let (mut left, mut right) = (Vec::with_capacity(n / 2), Vec::with_capacity(n - n / 2));
    for (i, v) in sorted.iter().enumerate() {
        if (n - 1 - i).is_multiple_of(2) {
            right.push(v.clone());
        } else {
            left.push(v.clone());
        }
    }
    debug_assert_eq!(left.len(), n / 2);
    arrange(&left, out);
    arrange(&right, out);
}

/// Enumeration size allowed by the brute-force oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CostGuard {
    /// `n ≤ 9` (362,880 permutations).
    #[default]
    Standard,
    /// `n ≤ 10` (3,628,800 permutations).
    Extended,
}

impl CostGuard {
    pub fn cap(self) -> usize {
        match self {
            CostGuard::Standard => 9,
            CostGuard::Extended => 10,
        }
    }
}

/// An extreme comparison count with its lexicographically least witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub count: CompCount,
    pub witness: Permutation<u32>,
}

/// Maximum MergeSort comparisons over all `n!` permutations of `1..=n`.
pub fn brute_force_max(n: usize, guard: CostGuard) -> Result<Extremum> {
    Ok(brute_force_extremes(n, guard, merge_sort_comps)?.0)
}

/// Minimum MergeSort comparisons over all `n!` permutations of `1..=n`.
pub fn brute_force_min(n: usize, guard: CostGuard) -> Result<Extremum> {
    Ok(brute_force_extremes(n, guard, merge_sort_comps)?.1)
}

fn merge_sort_comps(keys: &[u32]) -> CompCount {
    sorters::merge_sort(keys).comps
}

/// `(max, min)` of `sort`'s comparison count over all permutations of `1..=n`.
pub fn brute_force_extremes<F>(n: usize, guard: CostGuard, mut sort: F) -> Result<(Extremum, Extremum)>
where
    F: FnMut(&[u32]) -> CompCount,
{
    check_guard(n, guard)?;
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    let first = sort(&perm);
    let mut max = Extremum {
        count: first,
        witness: Permutation { values: perm.clone() },
    };
    let mut min = max.clone();
    while next_permutation(&mut perm) {
        let c = sort(&perm);
        // Lexicographic order and strict improvement keep the least witness.
        if c > max.count {
            max = Extremum {
                count: c,
                witness: Permutation { values: perm.clone() },
            };
        }
        if c < min.count {
            min = Extremum {
                count: c,
                witness: Permutation { values: perm.clone() },
            };
        }
    }
    Ok((max, min))
}

fn check_guard(n: usize, guard: CostGuard) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("brute force needs n ≥ 1"));
    }
    if n > guard.cap() {
        return Err(Error::TooLarge { n, cap: guard.cap() });
    }
    Ok(())
}

/// Advances `v` to the next permutation in lexicographic order; `false` after the last.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).expect("a larger element exists past i");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Worst balanced merge of `{1..=n}`, found by trying every split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeSplit {
    pub count: CompCount,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    /// Number of splits examined, `C(n, ⌊n/2⌋)`.
    pub splits: u64,
}

/// Enumerates every way to deal `{1..=n}` into sorted lists of sizes
/// `⌊n/2⌋` and `⌈n/2⌉`, merges each pair, and reports the maximum count.
///
/// The witness is the alternating split whenever it attains the maximum,
/// otherwise the first maximal split in bitmask order.
pub fn worst_merge_split(n: usize) -> Result<MergeSplit> {
    if !(2..=16).contains(&n) {
        return Err(Error::Domain("worst_merge_split needs 2 ≤ n ≤ 16"));
    }
    let left_len = n / 2;
    let split = |mask: u32| -> (Vec<u32>, Vec<u32>) {
        (1..=n as u32).partition(|v| mask & (1 << (v - 1)) != 0)
    };
    let merge_count = |left: &[u32], right: &[u32]| {
        let mut tally = Tally::new();
        sorters::merge(left, right, &mut tally);
        tally.comps()
    };

    let mut best: Option<(CompCount, u32)> = None;
    let mut splits = 0u64;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != left_len {
            continue;
        }
        splits += 1;
        let (left, right) = split(mask);
        let c = merge_count(&left, &right);
        if best.is_none_or(|(b, _)| c > b) {
            best = Some((c, mask));
        }
    }
    let (count, first_mask) = best.expect("at least one split");

    let alternating = un_sort_top_split(n);
    let (left, right) = if merge_count(&alternating.0, &alternating.1) == count {
        alternating
    } else {
        split(first_mask)
    };
    Ok(MergeSplit {
        count,
        left,
        right,
        splits,
    })
}

// The top-level split `un_sort` uses on 1..=n.
fn un_sort_top_split(n: usize) -> (Vec<u32>, Vec<u32>) {
    (1..=n as u32).partition(|v| (n - *v as usize) % 2 == 1)
}
