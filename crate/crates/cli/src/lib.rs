//! Command implementations behind the `mergelab` binary.
//!
//! Every command writes to a caller-supplied [`Write`] so the output can be
//! captured in tests byte for byte.

use std::io::{self, Write};

use mergelab_core::analytics::{self, AnalyticsRow};
use mergelab_core::rectree::RecTree;
use mergelab_core::verify::{self, VerifyConfig};
use mergelab_core::{adversary, sorters};

pub mod format;

/// Header of the `table` CSV.
pub const TABLE_HEADER: &str = "n,W,B,lower,upper,epsilon,depth";

/// Significant digits used for every real in CSV output.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mergelab_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// Process exit code: 2 for bad arguments or input, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    Mergesort,
    Bininsert,
}

/// Split convention for `count --alg mergesort`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum SplitArg {
    /// First ⌊n/2⌋ keys go left
    #[default]
    Floor,
    /// First ⌈n/2⌉ keys go left
    Ceil,
}

impl From<SplitArg> for sorters::Split {
    fn from(s: SplitArg) -> Self {
        match s {
            SplitArg::Floor => sorters::Split::FloorLeft,
            SplitArg::Ceil => sorters::Split::CeilLeft,
        }
    }
}

/// Writes the analytics table for `n = min, min + step, …, ≤ max`.
pub fn table(out: &mut impl Write, min: u64, max: u64, step: u64) -> Result<(), CliError> {
    if min < 1 || min > max {
        return Err(usage(format!("need 1 ≤ min ≤ max, got min={min} max={max}")));
    }
    if step < 1 {
        return Err(usage("step must be at least 1"));
    }
    writeln!(out, "{TABLE_HEADER}")?;
    let real = |x: f64| format::significant(x, SIGNIFICANT_DIGITS);
    let mut n = min;
    while n <= max {
        let row = AnalyticsRow::new(n)?;
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.n,
            row.w,
            row.b,
            real(row.lower),
            real(row.upper),
            real(row.epsilon),
            row.depth
        )?;
        n = match n.checked_add(step) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(())
}

/// Prints a worst-case permutation of `1..=n` and its measured and closed-form counts.
/// Returns whether the two agree.
pub fn gen_worst(out: &mut impl Write, n: u64) -> Result<bool, CliError> {
    if n < 1 {
        return Err(usage("n must be at least 1"));
    }
    let keys: Vec<u64> = (1..=n).collect();
    let perm = adversary::un_sort(&keys)?;
    let line: Vec<String> = perm.values().iter().map(u64::to_string).collect();
    writeln!(out, "{}", line.join(","))?;
    let comps = sorters::merge_sort(perm.values()).comps;
    let w = analytics::w_closed(n);
    writeln!(out, "comps={comps},W={w}")?;
    Ok(comps == w)
}

/// Runs every verification suite; returns whether all passed.
pub fn verify(out: &mut impl Write, n_max: u64, brute_max: usize) -> Result<bool, CliError> {
    if n_max < 1 {
        return Err(usage("--max must be at least 1"));
    }
    if brute_max > 9 {
        return Err(usage("--brute must be at most 9"));
    }
    let reports = verify::run_all(VerifyConfig { n_max, brute_max });
    for report in &reports {
        match &report.outcome {
            Ok(()) => writeln!(out, "PASS {}", report.name)?,
            Err(failure) => writeln!(out, "FAIL {}: {failure}", report.name)?,
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    writeln!(out, "{passed}/{} suites passed", reports.len())?;
    Ok(passed == reports.len())
}

pub fn tree(out: &mut impl Write, n: u64) -> Result<(), CliError> {
    if n < 1 {
        return Err(usage("n must be at least 1"));
    }
    let tree = RecTree::build(n)?;
    write!(out, "{}", tree.dump())?;
    Ok(())
}

/// Parses comma- or whitespace-separated integers. A single trailing period is ignored.
pub fn parse_keys(input: &str) -> Result<Vec<i64>, CliError> {
    let body = input.trim();
    let body = body.strip_suffix('.').unwrap_or(body);
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| usage(format!("cannot parse {t:?} as an integer")))
        })
        .collect()
}

/// Sorts the keys with the chosen instrumented algorithm and reports its count.
pub fn count(out: &mut impl Write, input: &str, algorithm: Algorithm, split: SplitArg) -> Result<(), CliError> {
    let keys = parse_keys(input)?;
    let outcome = match algorithm {
        Algorithm::Mergesort => sorters::merge_sort_split(&keys, split.into()),
        Algorithm::Bininsert => sorters::binary_insertion_sort(&keys),
    };
    let n = keys.len() as u64;
    writeln!(
        out,
        "n={n},comps={},W={},B={}",
        outcome.comps,
        analytics::w_closed(n),
        analytics::best_case(n)
    )?;
    Ok(())
}
