//! Scalar rings.
//!
//! Everything above this module is generic over [`Ring`], so one pipeline
//! implementation runs on machine floats, exact dyadic rationals, symbolic
//! linear forms in `b`, and the operation-counting scalar.

mod counting;
mod dyadic;
mod linear_form;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

pub use counting::{counter_report, Counter, CountingScalar, OpCounts};
pub use dyadic::DyadicRational;
pub use linear_form::{lf_from_b, LinearForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactnumError {
    #[error("cannot parse {0:?} as a dyadic rational")]
    Parse(String),
    #[error("basis index {0} out of range 0..15")]
    IndexOutOfRange(usize),
    #[error("product of two non-constant linear forms is not linear")]
    NonLinearProduct,
}

/// The arithmetic the pipeline needs from a scalar type.
///
/// `shift(k)` multiplies by `2^k` exactly (up to rounding for floats);
/// `halve` is `shift(-1)`.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<Output = Self>
{
    fn from_dyadic(value: &DyadicRational) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_dyadic(&DyadicRational::from_int(value))
    }

    fn shift(&self, k: i32) -> Self;

    fn halve(&self) -> Self {
        self.shift(-1)
    }
}

impl Ring for f64 {
    fn from_dyadic(value: &DyadicRational) -> Self {
        value.to_f64()
    }

    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn shift(&self, k: i32) -> Self {
        self * 2f64.powi(k)
    }
}
