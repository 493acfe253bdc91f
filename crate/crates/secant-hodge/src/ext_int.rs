//! Extended integers: finite values together with `+inf` and `-inf`.
//!
//! Several singularity invariants (`c`, `HRH`, `w`, the Q-factoriality
//! defect `sigma`) take the value `+inf`, and generation levels of the
//! zero module are `-inf` by convention, so the scalar type carries both.

use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Int(i64),
    PosInf,
}

impl ExtInt {
    pub const INF: ExtInt = ExtInt::PosInf;

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Int(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn min(self, other: ExtInt) -> ExtInt {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: ExtInt) -> ExtInt {
        std::cmp::max(self, other)
    }
}

impl From<i64> for ExtInt {
    fn from(n: i64) -> Self {
        ExtInt::Int(n)
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::Int(n) => ExtInt::Int(n + rhs),
            inf => inf,
        }
    }
}

impl Sub<ExtInt> for i64 {
    type Output = ExtInt;
    fn sub(self, rhs: ExtInt) -> ExtInt {
        match rhs {
            ExtInt::Int(n) => ExtInt::Int(self - n),
            ExtInt::PosInf => ExtInt::NegInf,
            ExtInt::NegInf => ExtInt::PosInf,
        }
    }
}

impl Neg for ExtInt {
    type Output = ExtInt;
    fn neg(self) -> ExtInt {
        0i64 - self
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Int(n) => write!(f, "{n}"),
            ExtInt::PosInf => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering() {
        assert!(ExtInt::NegInf < ExtInt::Int(i64::MIN));
        assert!(ExtInt::Int(i64::MAX) < ExtInt::PosInf);
        assert!(ExtInt::Int(-1) < ExtInt::Int(0));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(ExtInt::Int(3) + 2, ExtInt::Int(5));
        assert_eq!(ExtInt::PosInf + 7, ExtInt::PosInf);
        assert_eq!(4i64 - ExtInt::PosInf, ExtInt::NegInf);
        assert_eq!(4i64 - ExtInt::Int(1), ExtInt::Int(3));
    }

    #[test]
    fn display() {
        assert_eq!(ExtInt::PosInf.to_string(), "inf");
        assert_eq!(ExtInt::NegInf.to_string(), "-inf");
        assert_eq!(ExtInt::Int(-3).to_string(), "-3");
    }
}
