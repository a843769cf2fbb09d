//! Stage chains for the three factorization levels.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{DiracNumber, DIM};
use crate::exactnum::{lf_from_b, LinearForm, Ring};
use crate::linalg::Mat;

use super::assets::{AssetLines, AssetSource};
use super::blockdiag::{BlockDiagSpec, BlockValues};
use super::stage::{Stage, StageKind};
use super::FastMultError;

/// Factorization depth: level 1 has a 28-dimensional block diagonal,
/// level 2 splits its three full 4×4 blocks, level 3 splits again down to
/// the 88-multiplication form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    One,
    Two,
    Three,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::One, Level::Two, Level::Three];

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Self::One),
            2 => Some(Self::Two),
            3 => Some(Self::Three),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Three => 3,
        }
    }

    pub fn manifest(self) -> String {
        format!("level{}.pipeline", self.number())
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pipeline {
    level: Level,
    stages: Vec<Stage>,
    d_index: usize,
}

impl Pipeline {
    /// Loads the builtin (or `DIRAC_ASSET_DIR`) assets for `level`.
    pub fn assemble(level: Level) -> Result<Self, FastMultError> {
        Self::assemble_from(level, &AssetSource::from_env())
    }

    pub fn assemble_from(level: Level, source: &AssetSource) -> Result<Self, FastMultError> {
        let file = level.manifest();
        let text = source.read(&file)?;
        let a = AssetLines::parse(&file, &text)?;
        if a.kind != "pipeline" {
            return Err(a.err(1, format!("expected kind pipeline, got {:?}", a.kind)));
        }
        let mut stages = Vec::new();
        for &(n, line) in &a.lines {
            if let Some(rest) = line.strip_prefix("level ") {
                if rest.trim() != level.number().to_string() {
                    return Err(a.err(n, format!("manifest declares level {rest}")));
                }
            } else if let Some(name) = line.strip_prefix("stage ") {
                let name = name.trim();
                let text = source.read(&format!("{name}.stage"))?;
                stages.push(Stage::parse(name, &text)?);
            } else {
                return Err(a.err(n, format!("unknown directive {line:?}")));
            }
        }
        Self::from_stages(level, stages)
    }

    /// Checks the dimension chain `16 → … → 16` and that exactly one stage
    /// is block-diagonal.
    pub fn from_stages(level: Level, stages: Vec<Stage>) -> Result<Self, FastMultError> {
        let ds: Vec<usize> = stages
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_block_diag())
            .map(|(i, _)| i)
            .collect();
        let [d_index] = ds[..] else {
            return Err(FastMultError::Dim(format!(
                "level {level}: expected one block-diagonal stage, found {}",
                ds.len()
            )));
        };
        let mut dim = DIM;
        for s in &stages {
            if s.in_dim() != dim {
                return Err(FastMultError::Dim(format!(
                    "level {level}: stage {} takes {} inputs but receives {dim}",
                    s.name,
                    s.in_dim()
                )));
            }
            dim = s.out_dim();
        }
        if dim != DIM {
            return Err(FastMultError::Dim(format!("level {level}: pipeline ends with dimension {dim}")));
        }
        Ok(Self {
            level,
            stages,
            d_index,
        })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    /// For planted-fault experiments.
    pub fn stage_mut(&mut self, name: &str) -> Option<&mut Stage> {
        self.stages.iter_mut().find(|s| s.name == name)
    }

    pub fn d_index(&self) -> usize {
        self.d_index
    }

    pub fn d_spec(&self) -> &BlockDiagSpec {
        match &self.stages[self.d_index].kind {
            StageKind::BlockDiag(d) => d,
            _ => unreachable!("d_index points at the block-diagonal stage"),
        }
    }

    /// Vector lengths between stages, input first.
    pub fn dims_chain(&self) -> Vec<usize> {
        std::iter::once(DIM).chain(self.stages.iter().map(Stage::out_dim)).collect()
    }

    pub fn precompute<S: Ring>(&self, b: &DiracNumber<S>) -> BlockValues<S> {
        self.d_spec().precompute(&b.coeffs)
    }

    pub fn apply<S: Ring>(&self, vals: &BlockValues<S>, a: &DiracNumber<S>) -> DiracNumber<S> {
        let y = self.apply_hooked(vals, &a.coeffs, &mut |_| {}, &mut |_| {});
        DiracNumber::new(y.try_into().expect("pipeline output has 16 entries"))
    }

    /// Runs the stages; `stage_hook(i)` after each stage, `block_hook(j)`
    /// after each block of the diagonal stage.
    pub fn apply_hooked<S: Ring>(
        &self,
        vals: &BlockValues<S>,
        x: &[S],
        stage_hook: &mut dyn FnMut(usize),
        block_hook: &mut dyn FnMut(usize),
    ) -> Vec<S> {
        let mut v = x.to_vec();
        for (i, s) in self.stages.iter().enumerate() {
            v = match &s.kind {
                StageKind::BlockDiag(d) => d.apply_hooked(vals, &v, block_hook),
                _ => s.apply_const(&v),
            };
            stage_hook(i);
        }
        v
    }

    pub fn run<S: Ring>(&self, a: &DiracNumber<S>, b: &DiracNumber<S>) -> DiracNumber<S> {
        self.apply(&self.precompute(b), a)
    }

    /// The whole pipeline as a 16×16 matrix of linear forms in `b`.
    pub fn symbolic_matrix(&self) -> Mat<LinearForm> {
        let b: Vec<LinearForm> = (0..DIM).map(|i| lf_from_b(i).expect("in range")).collect();
        let vals = self.d_spec().precompute(&b);
        let mut m = Mat::zeros(DIM, DIM);
        for n in 0..DIM {
            let e: Vec<LinearForm> = (0..DIM)
                .map(|k| if k == n { LinearForm::one() } else { LinearForm::zero() })
                .collect();
            let col = self.apply_hooked(&vals, &e, &mut |_| {}, &mut |_| {});
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, n, v);
            }
        }
        m
    }
}
