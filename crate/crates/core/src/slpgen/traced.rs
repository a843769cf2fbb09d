//! A ring whose operations record instructions.
//!
//! Constants fold and are classified exactly like
//! [`CountingScalar`](crate::exactnum::CountingScalar) classifies them, so a
//! traced run emits one MUL per counted multiplication, one ADD/SUB per
//! counted addition, and so on.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::exactnum::{DyadicRational, Ring};

use super::program::Instr;

#[derive(Debug, Default)]
pub(crate) struct Tape {
    pub instrs: Vec<Instr>,
    values: usize,
}

impl Tape {
    fn push(&mut self, ins: Instr) -> usize {
        let defines = ins.defines_value();
        self.instrs.push(ins);
        if defines {
            self.values += 1;
        }
        self.values - 1
    }
}

pub(crate) type TapeRef = Rc<RefCell<Tape>>;

#[derive(Clone)]
pub(crate) enum Traced {
    Const(DyadicRational),
    Node(usize, TapeRef),
}

impl Traced {
    pub fn record(tape: &TapeRef, ins: Instr) -> Self {
        let id = tape.borrow_mut().push(ins);
        Traced::Node(id, tape.clone())
    }

    /// The node id, materializing a constant if needed.
    pub fn node(&self, tape: &TapeRef) -> usize {
        match self {
            Traced::Node(id, _) => *id,
            Traced::Const(c) => tape.borrow_mut().push(Instr::Const(c.clone())),
        }
    }

    fn tape(&self) -> Option<&TapeRef> {
        match self {
            Traced::Node(_, t) => Some(t),
            Traced::Const(_) => None,
        }
    }

    fn konst(&self) -> Option<&DyadicRational> {
        match self {
            Traced::Const(c) => Some(c),
            Traced::Node(..) => None,
        }
    }

    fn binary(self, rhs: Self, op: fn(usize, usize) -> Instr) -> Self {
        let tape = self.tape().or(rhs.tape()).expect("at least one node").clone();
        let (x, y) = (self.node(&tape), rhs.node(&tape));
        Self::record(&tape, op(x, y))
    }
}

impl fmt::Debug for Traced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Traced::Const(c) => write!(f, "const {c}"),
            Traced::Node(id, _) => write!(f, "v{id}"),
        }
    }
}

impl PartialEq for Traced {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Traced::Const(a), Traced::Const(b)) => a == b,
            (Traced::Node(a, _), Traced::Node(b, _)) => a == b,
            _ => false,
        }
    }
}

impl Add for Traced {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        match (self.konst(), rhs.konst()) {
            (Some(a), Some(b)) => Traced::Const(a.clone() + b.clone()),
            (Some(a), _) if a.is_zero() => rhs,
            (_, Some(b)) if b.is_zero() => self,
            _ => self.binary(rhs, Instr::Add),
        }
    }
}

impl Sub for Traced {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        match (self.konst(), rhs.konst()) {
            (Some(a), Some(b)) => Traced::Const(a.clone() - b.clone()),
            (Some(a), _) if a.is_zero() => -rhs,
            (_, Some(b)) if b.is_zero() => self,
            _ => self.binary(rhs, Instr::Sub),
        }
    }
}

impl Neg for Traced {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            Traced::Const(c) => Traced::Const(-c),
            Traced::Node(id, tape) => Self::record(&tape, Instr::Neg(id)),
        }
    }
}

impl Mul for Traced {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (node, c) = match (self.konst(), rhs.konst()) {
            (Some(a), Some(b)) => return Traced::Const(a.clone() * b.clone()),
            (Some(a), None) => (rhs.clone(), a.clone()),
            (None, Some(b)) => (self.clone(), b.clone()),
            (None, None) => return self.binary(rhs, Instr::Mul),
        };
        if c.is_zero() {
            return Traced::Const(c);
        }
        match c.as_signed_power_of_two() {
            Some((sign, k)) => {
                let shifted = node.shift(k);
                if sign < 0 {
                    -shifted
                } else {
                    shifted
                }
            }
            None => node.binary(Traced::Const(c), Instr::Mul),
        }
    }
}

impl Zero for Traced {
    fn zero() -> Self {
        Traced::Const(DyadicRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.konst().is_some_and(Zero::is_zero)
    }
}

impl One for Traced {
    fn one() -> Self {
        Traced::Const(DyadicRational::one())
    }
}

impl Ring for Traced {
    fn from_dyadic(value: &DyadicRational) -> Self {
        Traced::Const(value.clone())
    }

    fn shift(&self, k: i32) -> Self {
        match self {
            Traced::Const(c) => Traced::Const(c.shifted(k)),
            Traced::Node(..) if k == 0 => self.clone(),
            Traced::Node(id, tape) => Self::record(tape, Instr::Shift(*id, k)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folds_and_records() {
        let tape = TapeRef::default();
        let x = Traced::record(&tape, Instr::LoadA(0));
        let y = Traced::record(&tape, Instr::LoadA(1));
        let big = Traced::from_i64(3) * Traced::from_i64(4);
        assert_eq!(big, Traced::from_i64(12));
        let _ = x.clone() + Traced::zero();
        let _ = x.clone() * Traced::one();
        let _ = x.clone() * Traced::from_i64(-2);
        let _ = x.clone() * y.clone();
        let _ = x.clone() * Traced::from_i64(3);
        let ins = tape.borrow().instrs.clone();
        assert_eq!(
            ins,
            vec![
                Instr::LoadA(0),
                Instr::LoadA(1),
                Instr::Shift(0, 1),
                Instr::Neg(2),
                Instr::Mul(0, 1),
                Instr::Const(DyadicRational::from_int(3)),
                Instr::Mul(0, 5),
            ]
        );
    }
}
