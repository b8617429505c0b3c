//! Instrumented Merge, MergeSort and binary insertion sort.
//!
//! Every key comparison goes through [`Tally::is_less`], so the count
//! reported in a [`SortOutcome`] is exact.

use alloc::vec::Vec;

use crate::CompCount;

/// Running count of key comparisons.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    comps: CompCount,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    pub fn comps(&self) -> CompCount {
        self.comps
    }

    /// `a < b`, counted as one comparison.
    #[inline]
    pub fn is_less<T: Ord + ?Sized>(&mut self, a: &T, b: &T) -> bool {
        self.comps += 1;
        a < b
    }
}

/// Sorted output of one run together with the comparisons it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortOutcome<T> {
    pub output: Vec<T>,
    pub comps: CompCount,
}

/// Two-pointer merge of sorted `a` and `b`.
///
/// One comparison per head-to-head decision and none once either side is
/// exhausted, so at most `|a| + |b| − 1`. Equal heads are taken from `a`.
pub fn merge<T: Ord + Clone>(a: &[T], b: &[T], tally: &mut Tally) -> Vec<T> {
    debug_assert!(is_sorted(a) && is_sorted(b), "merge inputs must be sorted");
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if tally.is_less(&b[j], &a[i]) {
            out.push(b[j].clone());
            j += 1;
        } else {
            out.push(a[i].clone());
            i += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Which half receives the extra key when a subarray has odd length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Split {
    /// The first `⌊n/2⌋` keys go left.
    #[default]
    FloorLeft,
    /// The first `⌈n/2⌉` keys go left, as in `mid = (first + last) / 2` with an inclusive left half.
    CeilLeft,
}

impl Split {
    pub fn left_len(self, n: usize) -> usize {
        match self {
            Split::FloorLeft => n / 2,
            Split::CeilLeft => n - n / 2,
        }
    }
}

/// Top-down MergeSort: the first `⌊n/2⌋` keys go left, the rest right.
pub fn merge_sort<T: Ord + Clone>(keys: &[T]) -> SortOutcome<T> {
    merge_sort_split(keys, Split::FloorLeft)
}

/// Top-down MergeSort with an explicit split convention.
///
/// Both conventions share the worst case `W(n)` and best case `B(n)`, but a
/// worst-case input for one is generally not worst for the other.
pub fn merge_sort_split<T: Ord + Clone>(keys: &[T], split: Split) -> SortOutcome<T> {
    let mut tally = Tally::new();
    let output = merge_sort_with(keys, split, &mut tally);
    SortOutcome {
        output,
        comps: tally.comps(),
    }
}

/// [`merge_sort_split`] charging comparisons to a caller-owned tally.
pub fn merge_sort_with<T: Ord + Clone>(keys: &[T], split: Split, tally: &mut Tally) -> Vec<T> {
    if keys.len() <= 1 {
        return keys.to_vec();
    }
    let (left, right) = keys.split_at(split.left_len(keys.len()));
    let left = merge_sort_with(left, split, tally);
    let right = merge_sort_with(right, split, tally);
    merge(&left, &right, tally)
}

/// Binary insertion sort: key `i` (1-based) costs at most `⌈lg i⌉` comparisons.
pub fn binary_insertion_sort<T: Ord + Clone>(keys: &[T]) -> SortOutcome<T> {
    let mut tally = Tally::new();
    let mut output = Vec::with_capacity(keys.len());
    for key in keys {
        binary_insert(&mut output, key.clone(), &mut tally);
    }
    SortOutcome {
        output,
        comps: tally.comps(),
    }
}

/// Inserts `key` into the sorted `prefix` after any equal keys; returns the slot.
///
/// Probes `⌊(lo + hi)/2⌋` of the half-open range `[lo, hi)` until it is empty,
/// so a prefix of length `m` costs at most `⌈lg(m + 1)⌉` comparisons.
pub fn binary_insert<T: Ord>(prefix: &mut Vec<T>, key: T, tally: &mut Tally) -> usize {
    let (mut lo, mut hi) = (0, prefix.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if tally.is_less(&key, &prefix[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    prefix.insert(lo, key);
    lo
}

pub fn is_sorted<T: Ord>(keys: &[T]) -> bool {
    keys.windows(2).all(|w| w[0] <= w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::{best_case, w_closed, w_sum};
    use proptest::prelude::*;

    fn sorted_copy<T: Ord + Clone>(keys: &[T]) -> Vec<T> {
        let mut v = keys.to_vec();
        v.sort();
        v
    }

    #[test]
    fn merge_examples() {
        let mut t = Tally::new();
        assert_eq!(merge::<i32>(&[], &[1, 2], &mut t), vec![1, 2]);
        assert_eq!(t.comps(), 0);

        let mut t = Tally::new();
        assert_eq!(merge(&[1, 3], &[2, 4], &mut t), vec![1, 2, 3, 4]);
        assert_eq!(t.comps(), 3);

        let mut t = Tally::new();
        assert_eq!(merge(&[1, 2], &[3, 4], &mut t), vec![1, 2, 3, 4]);
        assert_eq!(t.comps(), 2);
    }

    #[test]
    fn merge_is_stable() {
        #[derive(Debug, Clone)]
        struct Key(u8, char);
        impl PartialEq for Key {
            fn eq(&self, o: &Self) -> bool {
                self.0 == o.0
            }
        }
        impl Eq for Key {}
        impl PartialOrd for Key {
            fn partial_cmp(&self, o: &Self) -> Option<core::cmp::Ordering> {
                Some(self.cmp(o))
            }
        }
        impl Ord for Key {
            fn cmp(&self, o: &Self) -> core::cmp::Ordering {
                self.0.cmp(&o.0)
            }
        }
        let mut t = Tally::new();
        let out = merge(&[Key(1, 'a'), Key(2, 'a')], &[Key(1, 'b'), Key(2, 'b')], &mut t);
        let tags: Vec<char> = out.iter().map(|k| k.1).collect();
        assert_eq!(tags, vec!['a', 'b', 'a', 'b']);

        let sorted = merge_sort(&[Key(3, 'x'), Key(1, 'y'), Key(3, 'z'), Key(1, 'w')]).output;
        let tags: Vec<char> = sorted.iter().map(|k| k.1).collect();
        assert_eq!(tags, vec!['y', 'w', 'x', 'z']);
        let sorted = binary_insertion_sort(&[Key(3, 'x'), Key(1, 'y'), Key(3, 'z'), Key(1, 'w')]).output;
        let tags: Vec<char> = sorted.iter().map(|k| k.1).collect();
        assert_eq!(tags, vec!['y', 'w', 'x', 'z']);
    }

    #[test]
    fn merge_sort_examples() {
        let empty: [u8; 0] = [];
        assert_eq!(merge_sort(&empty), SortOutcome { output: vec![], comps: 0 });
        let out = merge_sort(&[2, 1, 3]);
        assert_eq!(out.output, vec![1, 2, 3]);
        assert!(out.comps <= 3);
        // [2] | [1,3]: the right merge costs 1, the top merge 2 (2 vs 1, 2 vs 3).
        assert_eq!(out.comps, 3);
    }

    #[test]
    fn binary_insertion_examples() {
        assert_eq!(binary_insertion_sort(&[1]), SortOutcome { output: vec![1], comps: 0 });
        assert_eq!(binary_insertion_sort(&[2, 1]), SortOutcome { output: vec![1, 2], comps: 1 });
    }

    #[test]
    fn insertion_step_costs() {
        // Oracle: ⌈lg(m + 1)⌉ by counting up.
        let bound = |m: usize| {
            let mut k = 0;
            while (1usize << k) < m + 1 {
                k += 1;
            }
            k as u64
        };
        for m in 0..64usize {
            let prefix: Vec<usize> = (0..m).map(|i| 2 * i + 1).collect();
            let mut worst = 0;
            for key in 0..=2 * m + 1 {
                let mut p = prefix.clone();
                let mut t = Tally::new();
                let slot = binary_insert(&mut p, key, &mut t);
                assert!(is_sorted(&p));
                assert_eq!(p[slot], key);
                assert!(t.comps() <= bound(m), "m={m} key={key}");
                worst = worst.max(t.comps());
            }
            assert_eq!(worst, bound(m), "bound is attained for m={m}");
        }
    }

    #[test]
    fn envelope_on_distinct_keys() {
        for n in 1..=300u64 {
            let mut keys: Vec<u64> = (0..n).collect();
            // deterministic scramble
            for i in 0..keys.len() {
                let j = (i * 7919 + 13) % keys.len();
                keys.swap(i, j);
            }
            let ms = merge_sort(&keys);
            assert!(best_case(n) <= ms.comps && ms.comps <= w_closed(n));
            let bi = binary_insertion_sort(&keys);
            assert!(bi.comps <= w_sum(n));
            let sorted: Vec<u64> = (0..n).collect();
            assert_eq!(merge_sort(&sorted).comps, best_case(n));
        }
    }

    #[test]
    fn split_conventions_share_extremes() {
        use crate::adversary::{brute_force_extremes, CostGuard};
        for n in 1..=8usize {
            let (max, min) = brute_force_extremes(n, CostGuard::Standard, |p| {
                merge_sort_split(p, Split::CeilLeft).comps
            })
            .unwrap();
            assert_eq!(max.count, w_closed(n as u64));
            assert_eq!(min.count, best_case(n as u64));
        }
        assert_eq!(merge_sort_split(&[3, 1, 2], Split::CeilLeft).output, vec![1, 2, 3]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn sorts_return_sorted_permutations(keys in prop::collection::vec(0u8..32, 0..=256)) {
            let expected = sorted_copy(&keys);
            let n = keys.len() as u64;
            let ms = merge_sort(&keys);
            prop_assert_eq!(&ms.output, &expected);
            let ceil = merge_sort_split(&keys, Split::CeilLeft);
            prop_assert_eq!(&ceil.output, &expected);
            prop_assert!(ceil.comps <= w_closed(n));
            prop_assert!(ms.comps <= w_closed(n));
            let bi = binary_insertion_sort(&keys);
            prop_assert_eq!(&bi.output, &expected);
            prop_assert!(bi.comps <= w_sum(n));
        }

        #[test]
        fn merge_bound(mut a in prop::collection::vec(any::<i16>(), 0..64),
                       mut b in prop::collection::vec(any::<i16>(), 0..64)) {
            a.sort();
            b.sort();
            let mut t = Tally::new();
            let out = merge(&a, &b, &mut t);
            let mut both = a.clone();
            both.extend_from_slice(&b);
            prop_assert_eq!(out, sorted_copy(&both));
            let total = (a.len() + b.len()) as u64;
            prop_assert!(t.comps() <= total.saturating_sub(1));
            prop_assert!(t.comps() >= a.len().min(b.len()) as u64);
        }
    }
}
