//! The 16-dimensional Dirac algebra.
//!
//! Ground truth is [`MultTable::from_generators`]. The printed table and the
//! printed `B16` matrix ship as data assets and are only compared against it.

mod element;
mod table;

use thiserror::Error;

pub use element::{b_matrix_pattern, derive_b_matrix, mul_schoolbook, BMatrix, DiracNumber};
pub use table::{table_errata, MultTable, SignedBasis, TableDiff, DIM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i8),
    #[error("basis index {0} out of range 0..15")]
    IndexOutOfRange(usize),
    #[error("bad token {0:?}")]
    BadToken(String),
    #[error("{0}")]
    Shape(String),
    #[error("table not well formed: {0}")]
    NotWellFormed(String),
}

const PRINTED_B16: &str = include_str!("../../assets/printed_b16.txt");

/// Signed `b` indices of a `B16` pattern, `pattern[k][n] = ±b_m`.
pub type BPattern = [[SignedBasis; DIM]; DIM];

/// The printed `B16` as transcribed, in the same token format as the table
/// (`-3` is `-b3`).
pub fn parse_printed_b16() -> BPattern {
    parse_b_pattern(PRINTED_B16).expect("builtin printed B16 is well-formed")
}

pub fn parse_b_pattern(text: &str) -> Result<BPattern, AlgebraError> {
    // Same shape and tokens as a table; no unit/Latin checks apply.
    let t = MultTable::parse(text)?;
    Ok(std::array::from_fn(|k| std::array::from_fn(|n| t.get(k, n))))
}

/// Cells where a printed `B16` disagrees with the derived pattern.
pub fn b16_errata(printed: &BPattern, derived: &BPattern) -> Vec<TableDiff> {
    let p = MultTable::from_entries(*printed);
    let d = MultTable::from_entries(*derived);
    table_errata(&p, &d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_b16_row0_is_exact() {
        let derived = b_matrix_pattern(&MultTable::from_generators());
        let printed = parse_printed_b16();
        assert_eq!(printed[0], derived[0]);
        let diff = b16_errata(&printed, &derived);
        assert!(diff.iter().all(|d| d.row > 0));
    }
}
