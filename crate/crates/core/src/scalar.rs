use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Scalars with exact field arithmetic and a total order.
///
/// Strict inequalities in the rounding bound are only meaningful when the
/// arithmetic is exact, so floating point types deliberately do not
/// implement this.
pub trait ExactField: Num + Signed + Ord + Clone + Debug + Display {
    fn from_nat(n: usize) -> Self;

    fn from_int(n: i128) -> Self;

    fn ratio(num: usize, den: usize) -> Self {
        Self::from_nat(num) / Self::from_nat(den)
    }

    fn half() -> Self {
        Self::ratio(1, 2)
    }

    /// True for exactly 0 or exactly 1.
    fn is_boolean(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// True for values in the closed unit interval.
    fn in_unit_interval(&self) -> bool {
        !self.is_negative() && *self <= Self::one()
    }
}

impl<I> ExactField for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + FromPrimitive,
{
    fn from_nat(n: usize) -> Self {
        Ratio::from_integer(I::from_usize(n).expect("integer out of range for scalar"))
    }

    fn from_int(n: i128) -> Self {
        Ratio::from_integer(I::from_i128(n).expect("integer out of range for scalar"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Rational64};

    #[test]
    fn ratio_helpers() {
        assert_eq!(Rational::ratio(2, 4), Rational::half());
        assert_eq!(Rational64::ratio(3, 8), Rational64::new(3, 8));
        assert!(Rational::from_nat(1).is_boolean());
        assert!(!Rational::half().is_boolean());
        assert!(Rational::half().in_unit_interval());
        assert!(!Rational::ratio(3, 2).in_unit_interval());
        assert!(!(-Rational::half()).in_unit_interval());
    }
}
