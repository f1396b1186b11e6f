//! Exact rationals in lowest terms, printed as `p/q`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numerator / denominator` reduced to lowest terms.
    ///
    /// Panics if `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Nearest `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl Add for ExactRational {
    type Output = ExactRational;

    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0 + rhs.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), Add::add)
    }
}

/// Always `p/q`, including `q = 1`.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(String);

/// Accepts `p/q` or a bare integer `p`.
impl FromStr for ExactRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_owned());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(ExactRational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_displays() {
        assert_eq!(ExactRational::new(22, 2).to_string(), "11/1");
        assert_eq!(ExactRational::new(34, 4).to_string(), "17/2");
        assert_eq!(ExactRational::new(3, -6).to_string(), "-1/2");
        assert_eq!(ExactRational::zero().to_string(), "0/1");
    }

    #[test]
    fn sums_exactly() {
        let h: ExactRational = [(1, 1), (1, 2), (1, 2)]
            .into_iter()
            .map(|(p, q)| ExactRational::new(p, q))
            .sum();
        assert_eq!(h, ExactRational::from_integer(2));
        assert!(h.is_integer());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("x/2".parse::<ExactRational>().is_err());
        assert_eq!(
            "6".parse::<ExactRational>().unwrap(),
            ExactRational::from_integer(6)
        );
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in any::<i64>(), q in 1i64..) {
            let r = ExactRational::new(p, q);
            prop_assert_eq!(r.to_string().parse::<ExactRational>().unwrap(), r);
        }
    }
}
