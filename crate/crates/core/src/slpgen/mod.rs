//! Straight-line programs.
//!
//! [`flatten`] traces a verified pipeline into a branch-free list of
//! single-assignment scalar instructions. Shared sums in the block diagonal
//! are emitted once, and multiplications by `±2^k` become `SHIFT` (plus
//! `NEG`), so the opcode histogram matches the operation counts of
//! [`measure_costs`](crate::fastmult::measure_costs).

mod flatten;
mod program;
mod text;
mod traced;

use thiserror::Error;

pub use flatten::{flatten, flatten_schoolbook, flatten_stage};
pub use program::{interpret, Histogram, Instr, SLProgram};
pub use text::{emit_text, parse_text};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlpError {
    #[error("instruction {pc} reads v{operand} before it is defined")]
    Dangling { pc: usize, operand: usize },
    #[error("instruction {pc}: {what}[{index}] out of range")]
    Range { pc: usize, what: &'static str, index: usize },
    #[error("output y[{0}] stored twice")]
    DoubleStore(usize),
    #[error("output y[{0}] never stored")]
    MissingStore(usize),
    #[error("program takes {want_a}+{want_b} inputs, got {a}+{b}")]
    Arity {
        a: usize,
        b: usize,
        want_a: usize,
        want_b: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
