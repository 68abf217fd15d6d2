//! Exact half-integers, stored as twice their value.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use crate::Rational;

/// An element of (1/2)·ℤ. The wrapped integer is twice the value, so all
/// comparisons and arithmetic stay in plain integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    /// 1/2.
    pub const HALF: Half = Half(1);

    /// Builds from twice the intended value: `from_twice(3)` is 3/2.
    pub fn from_twice(twice: i64) -> Self {
        Half(twice)
    }

    pub fn from_int(n: i64) -> Self {
        Half(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    /// True when the value lies in ℤ rather than 1/2 + ℤ.
    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        Half(self.0.abs())
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Canonical (numerator, denominator) with denominator 1 or 2.
    pub fn numer_denom(self) -> (i64, i64) {
        if self.is_integer() {
            (self.0 / 2, 1)
        } else {
            (self.0, 2)
        }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.0), BigInt::from(2))
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.numer_denom();
        if d == 1 {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/2")
        }
    }
}
