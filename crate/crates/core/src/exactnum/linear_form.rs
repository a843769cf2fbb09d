//! Affine forms `c + Σ c_m b_m` over the dyadic rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{DyadicRational, ExactnumError, Ring};

const TERMS: usize = 17;

/// Slot 0 is the constant term, slot `m + 1` the coefficient of `b_m`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearForm {
    coeffs: [DyadicRational; TERMS],
}

/// The form `b_index`.
pub fn lf_from_b(index: usize) -> Result<LinearForm, ExactnumError> {
    if index > 15 {
        return Err(ExactnumError::IndexOutOfRange(index));
    }
    let mut f = LinearForm::zero();
    f.coeffs[index + 1] = DyadicRational::one();
    Ok(f)
}

impl LinearForm {
    pub fn constant(value: DyadicRational) -> Self {
        let mut f = Self::zero();
        f.coeffs[0] = value;
        f
    }

    pub fn constant_term(&self) -> &DyadicRational {
        &self.coeffs[0]
    }

    pub fn coeff(&self, m: usize) -> &DyadicRational {
        &self.coeffs[m + 1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some((sign, m))` when the form is exactly `±b_m`.
    pub fn single_b(&self) -> Option<(i8, usize)> {
        if !self.coeffs[0].is_zero() {
            return None;
        }
        let mut found = None;
        for (m, c) in self.coeffs[1..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() {
                return None;
            }
            found = Some((m, c));
        }
        let (m, c) = found?;
        match c.as_signed_power_of_two() {
            Some((sign, 0)) => Some((sign, m)),
            _ => None,
        }
    }

    /// Product defined only when one side is constant.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ExactnumError> {
        let (scale, form) = if rhs.is_constant() {
            (&rhs.coeffs[0], self)
        } else if self.is_constant() {
            (&self.coeffs[0], rhs)
        } else {
            return Err(ExactnumError::NonLinearProduct);
        };
        Ok(form.map(|c| c.clone() * scale.clone()))
    }

    /// Substitutes concrete `b` values.
    pub fn eval<S: Ring>(&self, b: &[S; 16]) -> S {
        let mut acc = S::from_dyadic(&self.coeffs[0]);
        for (m, c) in self.coeffs[1..].iter().enumerate() {
            if !c.is_zero() {
                acc = acc + S::from_dyadic(c) * b[m].clone();
            }
        }
        acc
    }

    fn map(&self, f: impl Fn(&DyadicRational) -> DyadicRational) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| f(&self.coeffs[i])),
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(DyadicRational, DyadicRational) -> DyadicRational) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| f(self.coeffs[i].clone(), rhs.coeffs[i].clone())),
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.numerator().is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "b{}", i - 1)?;
            } else {
                write!(f, "{mag}*b{}", i - 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for LinearForm {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl Sub for LinearForm {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Neg for LinearForm {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c.clone())
    }
}

/// Panics on a product of two non-constant forms; use
/// [`LinearForm::checked_mul`] to get an error instead.
impl Mul for LinearForm {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        match self.checked_mul(&rhs) {
            Ok(f) => f,
            Err(e) => panic!("{e}: ({self}) * ({rhs})"),
        }
    }
}

impl Zero for LinearForm {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for LinearForm {
    fn one() -> Self {
        Self::constant(DyadicRational::one())
    }
}

impl Ring for LinearForm {
    fn from_dyadic(value: &DyadicRational) -> Self {
        Self::constant(value.clone())
    }

    fn shift(&self, k: i32) -> Self {
        self.map(|c| c.shifted(k))
    }
}
