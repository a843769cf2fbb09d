//! Straight-line programs and their interpreter.

use std::fmt;

use crate::exactnum::{DyadicRational, Ring};

use super::SlpError;

/// Value indices are assigned in instruction order; every instruction
/// except `StoreY` defines the next one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instr {
    LoadA(usize),
    LoadB(usize),
    Const(DyadicRational),
    Add(usize, usize),
    Sub(usize, usize),
    Neg(usize),
    Mul(usize, usize),
    /// Multiply by `2^k`.
    Shift(usize, i32),
    StoreY(usize, usize),
}

impl Instr {
    pub fn defines_value(&self) -> bool {
        !matches!(self, Instr::StoreY(..))
    }

    fn operands(&self) -> Vec<usize> {
        match *self {
            Instr::Add(x, y) | Instr::Sub(x, y) | Instr::Mul(x, y) => vec![x, y],
            Instr::Neg(x) | Instr::Shift(x, _) | Instr::StoreY(_, x) => vec![x],
            Instr::LoadA(_) | Instr::LoadB(_) | Instr::Const(_) => vec![],
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Histogram {
    pub load_a: usize,
    pub load_b: usize,
    pub consts: usize,
    pub add: usize,
    pub sub: usize,
    pub neg: usize,
    pub mul: usize,
    pub shift: usize,
    pub store: usize,
}

impl Histogram {
    pub fn add_sub(&self) -> usize {
        self.add + self.sub
    }
}

/// `mul=.. add=.. neg=.. shift=..` (`add` counts ADD and SUB).
impl fmt::Display for Histogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mul={} add={} neg={} shift={}", self.mul, self.add_sub(), self.neg, self.shift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SLProgram {
    pub(crate) instrs: Vec<Instr>,
    pub(crate) a_arity: usize,
    pub(crate) b_arity: usize,
    pub(crate) outputs: usize,
}

impl SLProgram {
    /// Checks single assignment, operand order, load ranges and that every
    /// output is stored exactly once.
    pub fn new(instrs: Vec<Instr>, a_arity: usize, b_arity: usize, outputs: usize) -> Result<Self, SlpError> {
        let p = Self {
            instrs,
            a_arity,
            b_arity,
            outputs,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn instrs(&self) -> &[Instr] {
        &self.instrs
    }

    pub fn a_arity(&self) -> usize {
        self.a_arity
    }

    pub fn b_arity(&self) -> usize {
        self.b_arity
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn validate(&self) -> Result<(), SlpError> {
        let mut defined = 0;
        let mut stored = vec![false; self.outputs];
        for (pc, ins) in self.instrs.iter().enumerate() {
            if let Some(&x) = ins.operands().iter().find(|&&x| x >= defined) {
                return Err(SlpError::Dangling { pc, operand: x });
            }
            match *ins {
                Instr::LoadA(i) if i >= self.a_arity => return Err(SlpError::Range { pc, what: "a", index: i }),
                Instr::LoadB(i) if i >= self.b_arity => return Err(SlpError::Range { pc, what: "b", index: i }),
                Instr::StoreY(i, _) => {
                    if i >= self.outputs {
                        return Err(SlpError::Range { pc, what: "y", index: i });
                    }
                    if std::mem::replace(&mut stored[i], true) {
                        return Err(SlpError::DoubleStore(i));
                    }
                }
                _ => {}
            }
            if ins.defines_value() {
                defined += 1;
            }
        }
        if let Some(i) = stored.iter().position(|s| !s) {
            return Err(SlpError::MissingStore(i));
        }
        Ok(())
    }

    pub fn histogram(&self) -> Histogram {
        let mut h = Histogram::default();
        for ins in &self.instrs {
            match ins {
                Instr::LoadA(_) => h.load_a += 1,
                Instr::LoadB(_) => h.load_b += 1,
                Instr::Const(_) => h.consts += 1,
                Instr::Add(..) => h.add += 1,
                Instr::Sub(..) => h.sub += 1,
                Instr::Neg(_) => h.neg += 1,
                Instr::Mul(..) => h.mul += 1,
                Instr::Shift(..) => h.shift += 1,
                Instr::StoreY(..) => h.store += 1,
            }
        }
        h
    }
}

/// Runs the program in instruction order.
pub fn interpret<S: Ring>(p: &SLProgram, a: &[S], b: &[S]) -> Result<Vec<S>, SlpError> {
    if a.len() != p.a_arity || b.len() != p.b_arity {
        return Err(SlpError::Arity {
            a: a.len(),
            b: b.len(),
            want_a: p.a_arity,
            want_b: p.b_arity,
        });
    }
    let mut vals: Vec<S> = Vec::with_capacity(p.instrs.len());
    let mut out: Vec<Option<S>> = vec![None; p.outputs];
    for (pc, ins) in p.instrs.iter().enumerate() {
        let get = |x: usize| vals.get(x).cloned().ok_or(SlpError::Dangling { pc, operand: x });
        let v = match *ins {
            Instr::LoadA(i) => a.get(i).cloned().ok_or(SlpError::Range { pc, what: "a", index: i })?,
            Instr::LoadB(i) => b.get(i).cloned().ok_or(SlpError::Range { pc, what: "b", index: i })?,
            Instr::Const(ref c) => S::from_dyadic(c),
            Instr::Add(x, y) => get(x)? + get(y)?,
            Instr::Sub(x, y) => get(x)? - get(y)?,
            Instr::Neg(x) => -get(x)?,
            Instr::Mul(x, y) => get(x)? * get(y)?,
            Instr::Shift(x, k) => get(x)?.shift(k),
            Instr::StoreY(i, x) => {
                let v = get(x)?;
                *out.get_mut(i).ok_or(SlpError::Range { pc, what: "y", index: i })? = Some(v);
                continue;
            }
        };
        vals.push(v);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or(SlpError::MissingStore(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> SLProgram {
        use Instr::*;
        SLProgram::new(
            vec![LoadA(0), LoadB(0), Add(0, 1), Shift(2, -1), Mul(3, 0), StoreY(0, 4)],
            1,
            1,
            1,
        )
        .unwrap()
    }

    #[test]
    fn interprets() {
        let y = interpret(&tiny(), &[3.0], &[5.0]).unwrap();
        assert_eq!(y, vec![12.0]);
        assert!(interpret(&tiny(), &[3.0, 1.0], &[5.0]).is_err());
    }

    #[test]
    fn histogram_counts() {
        let h = tiny().histogram();
        assert_eq!((h.load_a, h.load_b, h.add, h.mul, h.shift, h.store), (1, 1, 1, 1, 1, 1));
        assert_eq!(h.to_string(), "mul=1 add=1 neg=0 shift=1");
    }

    #[test]
    fn malformed_rejected() {
        use Instr::*;
        assert!(matches!(
            SLProgram::new(vec![LoadA(0), Add(0, 1), StoreY(0, 1)], 1, 0, 1),
            Err(SlpError::Dangling { pc: 1, operand: 1 })
        ));
        assert!(SLProgram::new(vec![LoadA(0)], 1, 0, 1).is_err());
        assert!(SLProgram::new(vec![LoadA(0), StoreY(0, 0), StoreY(0, 0)], 1, 0, 1).is_err());
        assert!(SLProgram::new(vec![LoadA(1), StoreY(0, 0)], 1, 0, 1).is_err());
        let bad = SLProgram {
            instrs: vec![Neg(3), StoreY(0, 0)],
            a_arity: 0,
            b_arity: 0,
            outputs: 1,
        };
        assert!(matches!(interpret::<f64>(&bad, &[], &[]), Err(SlpError::Dangling { .. })));
    }
}
