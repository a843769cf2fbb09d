//! The factorized product.
//!
//! `Y = B16 · X` is rewritten as a chain of constant signed permutations and
//! `{-1, 0, +1}` combiners around one `b`-dependent block diagonal. The stages
//! are data files (see [`assets`]); [`verify_pipeline`] checks a chain
//! symbolically against the multiplication table, and [`measure_costs`]
//! counts its operations.
//!
//! Stages run in execution order, input first.

pub mod assets;
mod blockdiag;
mod cost;
mod operator;
mod pipeline;
mod stage;
mod verify;

use thiserror::Error;

pub use assets::{builtin_asset, write_builtin_assets, AssetSource, ASSET_DIR_ENV, BUILTIN_ASSETS};
pub use blockdiag::{Block, BlockDiagSpec, BlockValues, Entry, Recipe, SharedSum, Terms};
pub use cost::{measure_costs, schoolbook_cost, BlockCost, CostReport, StageCost};
pub use operator::{builtin_pipeline, build_d30, mul_fast, precompute_apply, D30Blocks, FastOperator};
pub use pipeline::{Level, Pipeline};
pub use stage::{parse_expr, Stage, StageKind};
pub use verify::{verify_pipeline, verify_pipeline_against, EntryMismatch, VerifiedPipeline, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FastMultError {
    #[error("{file}:{line}: {message}")]
    Asset {
        file: String,
        line: usize,
        message: String,
    },
    #[error("asset {0} not found")]
    MissingAsset(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("dimension error: {0}")]
    Dim(String),
    #[error("level {level} pipeline does not reproduce B16 ({mismatches} entries differ); first: {first}")]
    Verification {
        level: u8,
        mismatches: usize,
        first: String,
    },
}

impl FastMultError {
    pub(crate) fn asset(file: &str, line: usize, message: &str) -> Self {
        Self::Asset {
            file: file.to_string(),
            line,
            message: message.to_string(),
        }
    }
}
