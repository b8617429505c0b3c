//! Comparison-counting laboratory for top-down MergeSort.
//!
//! The crate pairs instrumented sorts (every key comparison goes through a
//! [`sorters::Tally`]) with exact closed forms for the worst case
//! `W(n) = n⌈lg n⌉ − 2^⌈lg n⌉ + 1`, the best case `B(n)`, the smooth and
//! integer bounds on `W(n)`, and the explicit recursion tree of MergeSort.
//! Each analytic quantity can be checked against the measured side:
//!
//! ```
//! use mergelab_core::{adversary, analytics, sorters};
//!
//! let keys: Vec<u32> = (1..=500).collect();
//! let worst = adversary::un_sort(&keys).unwrap();
//! let outcome = sorters::merge_sort(worst.values());
//! assert_eq!(outcome.comps, analytics::w_closed(500));
//! assert_eq!(outcome.comps, 3989);
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod adversary;
pub mod analytics;
mod dyadic;
mod error;
pub mod rectree;
pub mod sorters;
pub mod verify;

pub use dyadic::DyadicHalf;
pub use error::{Error, Result};

/// Number of key comparisons. Always exact integer arithmetic.
pub type CompCount = u64;
