use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// An exact multiple of one half, stored as twice its value.
///
/// Used to evaluate the best-case formula, whose terms are all half-integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyadicHalf {
    twice_value: i128,
}

impl DyadicHalf {
    pub const ZERO: DyadicHalf = DyadicHalf { twice_value: 0 };

    /// The value `halves / 2`.
    pub const fn from_halves(halves: i128) -> Self {
        DyadicHalf { twice_value: halves }
    }

    pub const fn from_int(value: i128) -> Self {
        DyadicHalf {
            twice_value: value * 2,
        }
    }

    pub const fn twice_value(self) -> i128 {
        self.twice_value
    }

    pub const fn is_integer(self) -> bool {
        self.twice_value % 2 == 0
    }

    /// The represented integer, or `None` if a half unit remains.
    pub const fn to_integer(self) -> Option<i128> {
        if self.is_integer() {
            Some(self.twice_value / 2)
        } else {
            None
        }
    }

    pub fn to_f64(self) -> f64 {
        self.twice_value as f64 / 2.0
    }
}

impl Add for DyadicHalf {
    type Output = DyadicHalf;
    fn add(self, rhs: DyadicHalf) -> DyadicHalf {
        DyadicHalf::from_halves(self.twice_value + rhs.twice_value)
    }
}

impl Sub for DyadicHalf {
    type Output = DyadicHalf;
    fn sub(self, rhs: DyadicHalf) -> DyadicHalf {
        DyadicHalf::from_halves(self.twice_value - rhs.twice_value)
    }
}

impl Neg for DyadicHalf {
    type Output = DyadicHalf;
    fn neg(self) -> DyadicHalf {
        DyadicHalf::from_halves(-self.twice_value)
    }
}

impl Mul<i128> for DyadicHalf {
    type Output = DyadicHalf;
    fn mul(self, rhs: i128) -> DyadicHalf {
        DyadicHalf::from_halves(self.twice_value * rhs)
    }
}

impl core::iter::Sum for DyadicHalf {
    fn sum<I: Iterator<Item = DyadicHalf>>(iter: I) -> DyadicHalf {
        iter.fold(DyadicHalf::ZERO, Add::add)
    }
}

impl fmt::Display for DyadicHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.twice_value),
        }
    }
}
