//! Fast products over the builtin pipelines.

use std::sync::OnceLock;

use crate::algebra::DiracNumber;
use crate::exactnum::Ring;
use crate::linalg::{dirsum, Mat};

use super::assets::AssetSource;
use super::blockdiag::BlockValues;
use super::pipeline::{Level, Pipeline};
use super::verify::VerifiedPipeline;

/// The shipped pipeline for `level`, verified once per process.
pub fn builtin_pipeline(level: Level) -> &'static VerifiedPipeline {
    static CACHE: [OnceLock<VerifiedPipeline>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[level.number() as usize - 1].get_or_init(|| {
        let p = Pipeline::assemble_from(level, &AssetSource::Builtin).expect("builtin assets parse");
        VerifiedPipeline::new(p).expect("builtin assets verify")
    })
}

/// `a · b` through the factored pipeline.
pub fn mul_fast<S: Ring>(a: &DiracNumber<S>, b: &DiracNumber<S>, level: Level) -> DiracNumber<S> {
    builtin_pipeline(level).run(a, b)
}

/// Right multiplication by a fixed `b`, with its block entries built once.
#[derive(Debug, Clone)]
pub struct FastOperator<'p, S> {
    pipeline: &'p Pipeline,
    values: BlockValues<S>,
}

impl<'p, S: Ring> FastOperator<'p, S> {
    pub fn new(pipeline: &'p VerifiedPipeline, b: &DiracNumber<S>) -> Self {
        Self {
            pipeline,
            values: pipeline.precompute(b),
        }
    }

    pub fn apply(&self, a: &DiracNumber<S>) -> DiracNumber<S> {
        self.pipeline.apply(&self.values, a)
    }

    pub fn values(&self) -> &BlockValues<S> {
        &self.values
    }
}

/// Precomputes `b` for the level-3 pipeline.
pub fn precompute_apply<S: Ring>(b: &DiracNumber<S>) -> FastOperator<'static, S> {
    FastOperator::new(builtin_pipeline(Level::Three), b)
}

/// The level-3 diagonal blocks, without the ½ factors.
#[derive(Debug, Clone, PartialEq)]
pub struct D30Blocks<S> {
    pub s4: [Mat<S>; 4],
    pub s2: [Mat<S>; 4],
    pub s: [S; 4],
    pub f2: Mat<S>,
}

impl<S: Ring> D30Blocks<S> {
    /// `diag(½S4_0..3, ½S2_0..3, ½s0..3, F2)`.
    pub fn to_matrix(&self) -> Mat<S> {
        let mut parts: Vec<Mat<S>> = self.s4.iter().chain(&self.s2).map(Mat::halve).collect();
        parts.extend(self.s.iter().map(|s| Mat::new(1, 1, vec![s.halve()]).expect("1x1")));
        parts.push(self.f2.clone());
        dirsum(&parts).expect("non-empty")
    }

    pub fn block_sizes() -> [usize; 13] {
        [4, 4, 4, 4, 2, 2, 2, 2, 1, 1, 1, 1, 2]
    }
}

pub fn build_d30<S: Ring>(b: &DiracNumber<S>) -> D30Blocks<S> {
    let mut m = builtin_pipeline(Level::Three).d_spec().block_matrices(&b.coeffs).into_iter();
    let mut take = || m.next().expect("thirteen blocks");
    let s4 = std::array::from_fn(|_| take());
    let s2 = std::array::from_fn(|_| take());
    let s = std::array::from_fn(|_| take().get(0, 0).clone());
    let f2 = take();
    D30Blocks { s4, s2, s, f2 }
}
