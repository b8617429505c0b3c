use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument outside the domain of the requested quantity.
    Domain(&'static str),
    /// A level index past the depth of the tree.
    LevelOutOfRange { level: u32, depth: u32 },
    /// A node set that is not a cut of the recursion tree.
    InvalidCut(&'static str),
    /// Input to the worst-case generator is not strictly increasing.
    NotStrictlyIncreasing { index: usize },
    /// Exhaustive enumeration refused because `n!` is too large.
    TooLarge { n: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::LevelOutOfRange { level, depth } => {
                write!(f, "level {level} out of range (tree depth is {depth})")
            }
            Error::InvalidCut(why) => write!(f, "invalid cut: {why}"),
            Error::NotStrictlyIncreasing { index } => {
                write!(f, "keys must be strictly increasing (violated at index {index})")
            }
            Error::TooLarge { n, cap } => {
                write!(f, "refusing to enumerate {n}! permutations (cap is {cap})")
            }
        }
    }
}

impl core::error::Error for Error {}
