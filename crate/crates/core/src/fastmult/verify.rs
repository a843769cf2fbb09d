//! Symbolic check of a pipeline against `B16`.

use std::fmt;
use std::ops::Deref;

use crate::algebra::{derive_b_matrix, DiracNumber, MultTable, DIM};
use crate::exactnum::{lf_from_b, LinearForm};

use super::pipeline::{Level, Pipeline};
use super::FastMultError;

#[derive(Debug, Clone, PartialEq)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub expected: LinearForm,
    pub got: LinearForm,
}

impl fmt::Display for EntryMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry ({}, {}): expected {}, got {}", self.row, self.col, self.expected, self.got)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub level: Level,
    pub mismatches: Vec<EntryMismatch>,
    /// Whether every pipeline entry is a single `±b_m`.
    pub all_single_b: bool,
}

impl VerifyReport {
    pub const ENTRIES: usize = DIM * DIM;

    pub fn matched(&self) -> usize {
        Self::ENTRIES - self.mismatches.len()
    }

    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `symbolic: 256/256 entries match`.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "symbolic: {}/{} entries match", self.matched(), Self::ENTRIES)
    }
}

pub fn verify_pipeline(p: &Pipeline) -> VerifyReport {
    verify_pipeline_against(p, &MultTable::from_generators())
}

pub fn verify_pipeline_against(p: &Pipeline, t: &MultTable) -> VerifyReport {
    let got = p.symbolic_matrix();
    let b = DiracNumber::new(std::array::from_fn(|i| lf_from_b(i).expect("in range")));
    let want = derive_b_matrix(&b, t);
    let mut mismatches = Vec::new();
    let mut all_single_b = true;
    for row in 0..DIM {
        for col in 0..DIM {
            let g = got.get(row, col);
            all_single_b &= g.single_b().is_some();
            if *g != want.entries[row][col] {
                mismatches.push(EntryMismatch {
                    row,
                    col,
                    expected: want.entries[row][col].clone(),
                    got: g.clone(),
                });
            }
        }
    }
    VerifyReport {
        level: p.level(),
        mismatches,
        all_single_b,
    }
}

/// A pipeline that passed [`verify_pipeline`].
#[derive(Debug, Clone, PartialEq)]
pub struct VerifiedPipeline(Pipeline);

impl VerifiedPipeline {
    pub fn new(p: Pipeline) -> Result<Self, FastMultError> {
        let r = verify_pipeline(&p);
        match r.mismatches.first() {
            None => Ok(Self(p)),
            Some(first) => Err(FastMultError::Verification {
                level: p.level().number(),
                mismatches: r.mismatches.len(),
                first: first.to_string(),
            }),
        }
    }

    pub fn into_inner(self) -> Pipeline {
        self.0
    }
}

impl Deref for VerifiedPipeline {
    type Target = Pipeline;
    fn deref(&self) -> &Pipeline {
        &self.0
    }
}
