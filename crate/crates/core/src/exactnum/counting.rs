//! Operation-counting scalar.
//!
//! A [`CountingScalar`] is either a *constant* (no counter attached) or a
//! *data* value created through [`Counter::input`] and everything computed
//! from it. Cost rules:
//!
//! * `mul` by a constant 0 gives a constant 0 and by +1 is free; a constant
//!   ±2^k costs one shift (plus a negation for the minus sign); anything
//!   else is one nontrivial multiplication;
//! * `add`/`sub` with a constant zero is free, otherwise one addition;
//! * `neg` on data is one negation.
//!
//! Only constants are classified. A data value that happens to equal 1 still
//! costs a multiplication, so counts never depend on the inputs.
//!
//! Counters use `Rc<Cell<_>>` and are single-threaded by design.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::{DyadicRational, Ring};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub nontrivial_mults: u64,
    pub additions: u64,
    pub negations: u64,
    pub shifts: u64,
}

impl std::ops::Sub for OpCounts {
    type Output = OpCounts;
    fn sub(self, rhs: Self) -> Self {
        OpCounts {
            nontrivial_mults: self.nontrivial_mults - rhs.nontrivial_mults,
            additions: self.additions - rhs.additions,
            negations: self.negations - rhs.negations,
            shifts: self.shifts - rhs.shifts,
        }
    }
}

impl std::ops::Add for OpCounts {
    type Output = OpCounts;
    fn add(self, rhs: Self) -> Self {
        OpCounts {
            nontrivial_mults: self.nontrivial_mults + rhs.nontrivial_mults,
            additions: self.additions + rhs.additions,
            negations: self.negations + rhs.negations,
            shifts: self.shifts + rhs.shifts,
        }
    }
}

/// `nontrivial_mults=.. additions=.. negations=.. shifts=..`, one per line.
impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nontrivial_mults={}", self.nontrivial_mults)?;
        writeln!(f, "additions={}", self.additions)?;
        writeln!(f, "negations={}", self.negations)?;
        write!(f, "shifts={}", self.shifts)
    }
}

/// Shared tally handle.
#[derive(Debug, Clone, Default)]
pub struct Counter {
    cell: Rc<Cell<OpCounts>>,
}

impl Counter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Wraps a value as data tracked by this counter.
    pub fn input(&self, value: impl Into<DyadicRational>) -> CountingScalar {
        CountingScalar {
            value: value.into(),
            counter: Some(self.clone()),
        }
    }

    pub fn report(&self) -> OpCounts {
        self.cell.get()
    }

    pub fn reset(&self) {
        self.cell.set(OpCounts::default());
    }

    fn bump(&self, f: impl FnOnce(&mut OpCounts)) {
        let mut c = self.cell.get();
        f(&mut c);
        self.cell.set(c);
    }
}

/// Free function form matching the CLI's report plumbing.
pub fn counter_report(counter: &Counter) -> OpCounts {
    counter.report()
}

#[derive(Debug, Clone)]
pub struct CountingScalar {
    value: DyadicRational,
    counter: Option<Counter>,
}

impl CountingScalar {
    pub fn constant(value: impl Into<DyadicRational>) -> Self {
        Self {
            value: value.into(),
            counter: None,
        }
    }

    pub fn value(&self) -> &DyadicRational {
        &self.value
    }

    pub fn is_data(&self) -> bool {
        self.counter.is_some()
    }

    fn is_const_zero(&self) -> bool {
        self.counter.is_none() && self.value.is_zero()
    }

    fn merged(a: &Option<Counter>, b: &Option<Counter>) -> Option<Counter> {
        a.clone().or_else(|| b.clone())
    }
}

impl PartialEq for CountingScalar {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl fmt::Display for CountingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl Add for CountingScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let counter = Self::merged(&self.counter, &rhs.counter);
        if !self.is_const_zero() && !rhs.is_const_zero() {
            if let Some(c) = &counter {
                c.bump(|o| o.additions += 1);
            }
        }
        Self {
            value: self.value + rhs.value,
            counter,
        }
    }
}

impl Sub for CountingScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        if self.is_const_zero() {
            return -rhs;
        }
        let counter = Self::merged(&self.counter, &rhs.counter);
        if !rhs.is_const_zero() {
            if let Some(c) = &counter {
                c.bump(|o| o.additions += 1);
            }
        }
        Self {
            value: self.value - rhs.value,
            counter,
        }
    }
}

impl Neg for CountingScalar {
    type Output = Self;
    fn neg(self) -> Self {
        if let Some(c) = &self.counter {
            c.bump(|o| o.negations += 1);
        }
        Self {
            value: -self.value,
            counter: self.counter,
        }
    }
}

impl Mul for CountingScalar {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let value = self.value.clone() * rhs.value.clone();
        let Some(counter) = Self::merged(&self.counter, &rhs.counter) else {
            return Self::constant(value);
        };
        let constant = [&self, &rhs].into_iter().find(|x| x.counter.is_none());
        match constant.map(|c| (c.value.is_zero(), c.value.as_signed_power_of_two())) {
            Some((true, _)) => return Self::constant(value),
            Some((false, Some((sign, k)))) => counter.bump(|o| {
                o.shifts += u64::from(k != 0);
                o.negations += u64::from(sign < 0);
            }),
            _ => counter.bump(|o| o.nontrivial_mults += 1),
        }
        Self {
            value,
            counter: Some(counter),
        }
    }
}

impl Zero for CountingScalar {
    fn zero() -> Self {
        Self::constant(DyadicRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl One for CountingScalar {
    fn one() -> Self {
        Self::constant(DyadicRational::one())
    }
}

impl Ring for CountingScalar {
    fn from_dyadic(value: &DyadicRational) -> Self {
        Self::constant(value.clone())
    }

    fn shift(&self, k: i32) -> Self {
        if k != 0 {
            if let Some(c) = &self.counter {
                c.bump(|o| o.shifts += 1);
            }
        }
        Self {
            value: self.value.shifted(k),
            counter: self.counter.clone(),
        }
    }
}
