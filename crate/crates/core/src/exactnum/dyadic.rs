//! Exact dyadic rationals `n / 2^k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactnumError, Ring};

/// A rational number whose denominator is a power of two.
///
/// Stored canonically: the numerator is odd, or the exponent is zero.
/// Zero is always `0 / 2^0`, so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DyadicRational {
    numerator: BigInt,
    exponent: u32,
}

impl DyadicRational {
    /// Builds `numerator / 2^exponent` and normalizes it.
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut numerator = numerator.into();
        let mut exponent = exponent;
        if numerator.is_zero() {
            return Self::default();
        }
        let tz = numerator.trailing_zeros().unwrap_or(0);
        let drop = tz.min(u64::from(exponent)) as u32;
        if drop > 0 {
            numerator >>= drop;
            exponent -= drop;
        }
        Self { numerator, exponent }
    }

    pub fn from_int(value: i64) -> Self {
        Self::new(value, 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    /// If the value is `±2^k` returns `(sign, k)`; `k` may be negative.
    pub fn as_signed_power_of_two(&self) -> Option<(i8, i32)> {
        if self.numerator.is_zero() {
            return None;
        }
        let sign = if self.numerator.is_negative() { -1 } else { 1 };
        let mag = self.numerator.abs();
        let tz = mag.trailing_zeros()?;
        if mag != (BigInt::one() << tz) {
            return None;
        }
        Some((sign, tz as i32 - self.exponent as i32))
    }

    /// Multiplies by `2^k`.
    pub fn shifted(&self, k: i32) -> Self {
        if k >= 0 {
            let k = k as u32;
            if k <= self.exponent {
                Self::new(self.numerator.clone(), self.exponent - k)
            } else {
                Self::new(&self.numerator << (k - self.exponent), 0)
            }
        } else {
            Self::new(self.numerator.clone(), self.exponent + k.unsigned_abs())
        }
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.numerator.to_f64().unwrap_or(f64::NAN);
        n * 2f64.powi(-(self.exponent as i32))
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let e = self.exponent.max(other.exponent);
        let a = &self.numerator << (e - self.exponent);
        let b = &other.numerator << (e - other.exponent);
        (a, b, e)
    }
}

impl From<i64> for DyadicRational {
    fn from(value: i64) -> Self {
        Self::from_int(value)
    }
}

impl From<BigInt> for DyadicRational {
    fn from(value: BigInt) -> Self {
        Self::new(value, 0)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

impl fmt::Debug for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `n` or `n/2^k` (also `n/d` when `d` is a power of two).
impl FromStr for DyadicRational {
    type Err = ExactnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactnumError::Parse(s.to_string());
        let s = s.trim();
        let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
        match s.split_once('/') {
            None => Ok(Self::new(parse_int(s)?, 0)),
            Some((num, den)) => {
                let num = parse_int(num)?;
                let den = den.trim();
                let exponent = if let Some(k) = den.strip_prefix("2^") {
                    k.trim().parse::<u32>().map_err(|_| bad())?
                } else {
                    let d = parse_int(den)?;
                    match Self::new(d, 0).as_signed_power_of_two() {
                        Some((1, k)) if k >= 0 => k as u32,
                        _ => return Err(bad()),
                    }
                };
                Ok(Self::new(num, exponent))
            }
        }
    }
}

impl Add for DyadicRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b, e) = self.aligned(&rhs);
        Self::new(a + b, e)
    }
}

impl Sub for DyadicRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let (a, b, e) = self.aligned(&rhs);
        Self::new(a - b, e)
    }
}

impl Neg for DyadicRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            numerator: -self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Mul for DyadicRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.numerator * rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl Zero for DyadicRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl One for DyadicRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Ring for DyadicRational {
    fn from_dyadic(value: &DyadicRational) -> Self {
        value.clone()
    }

    fn shift(&self, k: i32) -> Self {
        self.shifted(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let x = DyadicRational::new(12, 3);
        assert_eq!(x.numerator(), &BigInt::from(3));
        assert_eq!(x.exponent(), 1);
        assert_eq!(DyadicRational::new(0, 9), DyadicRational::zero());
        assert_eq!(DyadicRational::new(8, 0).exponent(), 0);
    }

    #[test]
    fn halving_twice_is_quarter() {
        let x = DyadicRational::from_int(7);
        assert_eq!(x.halve().halve(), DyadicRational::new(7, 2));
        assert_eq!(x.shifted(-2).shifted(2), x);
    }

    #[test]
    fn power_of_two_classification() {
        assert_eq!(DyadicRational::from_int(1).as_signed_power_of_two(), Some((1, 0)));
        assert_eq!(DyadicRational::from_int(-8).as_signed_power_of_two(), Some((-1, 3)));
        assert_eq!(DyadicRational::new(1, 5).as_signed_power_of_two(), Some((1, -5)));
        assert_eq!(DyadicRational::from_int(6).as_signed_power_of_two(), None);
        assert_eq!(DyadicRational::new(3, 2).as_signed_power_of_two(), None);
        assert_eq!(DyadicRational::zero().as_signed_power_of_two(), None);
    }

    #[test]
    fn parse_and_display() {
        let x: DyadicRational = "-3/2^4".parse().unwrap();
        assert_eq!(x, DyadicRational::new(-3, 4));
        assert_eq!(x.to_string(), "-3/2^4");
        assert_eq!("10/4".parse::<DyadicRational>().unwrap(), DyadicRational::new(5, 1));
        assert_eq!("42".parse::<DyadicRational>().unwrap().to_string(), "42");
        assert!("1/3".parse::<DyadicRational>().is_err());
        assert!("x".parse::<DyadicRational>().is_err());
        assert!("1.5".parse::<DyadicRational>().is_err());
    }

    #[test]
    fn to_f64_matches() {
        assert_eq!(DyadicRational::new(-5, 2).to_f64(), -1.25);
    }
}
