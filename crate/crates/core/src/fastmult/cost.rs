//! Operation counts measured with the counting ring.

use crate::algebra::{mul_schoolbook, DiracNumber, MultTable, DIM};
use crate::exactnum::{Counter, CountingScalar, OpCounts};

use super::pipeline::{Level, Pipeline};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCost {
    pub name: String,
    /// Building the block's entries from `b`, including shared sums first
    /// used by this block.
    pub precompute: OpCounts,
    /// The block product.
    pub apply: OpCounts,
}

impl BlockCost {
    pub fn total(&self) -> OpCounts {
        self.precompute + self.apply
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageCost {
    pub name: String,
    pub block_diag: bool,
    pub counts: OpCounts,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostReport {
    pub level: Level,
    pub precompute: OpCounts,
    pub apply: OpCounts,
    pub blocks: Vec<BlockCost>,
    pub stages: Vec<StageCost>,
}

impl CostReport {
    pub fn total(&self) -> OpCounts {
        self.precompute + self.apply
    }

    /// Precompute plus the block products.
    pub fn block_diag_total(&self) -> OpCounts {
        self.blocks.iter().fold(OpCounts::default(), |acc, b| acc + b.total())
    }

    /// Everything outside the block-diagonal stage.
    pub fn structural(&self) -> OpCounts {
        self.stages
            .iter()
            .filter(|s| !s.block_diag)
            .fold(OpCounts::default(), |acc, s| acc + s.counts)
    }

    pub fn block(&self, name: &str) -> Option<&BlockCost> {
        self.blocks.iter().find(|b| b.name == name)
    }
}

/// Fixed generic test inputs; counts do not depend on them.
fn inputs(c: &Counter) -> (DiracNumber<CountingScalar>, DiracNumber<CountingScalar>) {
    let a = DiracNumber::new(std::array::from_fn(|i| c.input(3 * i as i64 - 11)));
    let b = DiracNumber::new(std::array::from_fn(|i| c.input(5 - 2 * i as i64)));
    (a, b)
}

pub fn measure_costs(p: &Pipeline) -> CostReport {
    let c = Counter::new();
    let (a, b) = inputs(&c);
    let spec = p.d_spec();

    let mut marks = Vec::new();
    let vals = spec.precompute_hooked(&b.coeffs, true, &mut |_| marks.push(c.report()));
    let precompute = c.report();
    let block_pre: Vec<OpCounts> = deltas(OpCounts::default(), &marks);

    c.reset();
    let mut stage_marks = Vec::new();
    let mut block_marks = Vec::new();
    let mut d_start = None;
    let d_index = p.d_index();
    {
        let c2 = c.clone();
        let mut stage_hook = |i: usize| {
            stage_marks.push(c2.report());
            if i + 1 == d_index {
                d_start = Some(c2.report());
            }
        };
        let mut block_hook = |_| block_marks.push(c.report());
        let _ = p.apply_hooked(&vals, &a.coeffs, &mut stage_hook, &mut block_hook);
    }
    let apply = c.report();
    let d_start = d_start.unwrap_or_default();
    let block_apply = deltas(d_start, &block_marks);

    let blocks = spec
        .blocks()
        .iter()
        .zip(block_pre)
        .zip(block_apply)
        .map(|((blk, pre), app)| BlockCost {
            name: blk.name.clone(),
            precompute: pre,
            apply: app,
        })
        .collect();
    let stages = p
        .stages()
        .iter()
        .zip(deltas(OpCounts::default(), &stage_marks))
        .map(|(s, counts)| StageCost {
            name: s.name.clone(),
            block_diag: s.is_block_diag(),
            counts,
        })
        .collect();
    CostReport {
        level: p.level(),
        precompute,
        apply,
        blocks,
        stages,
    }
}

fn deltas(start: OpCounts, marks: &[OpCounts]) -> Vec<OpCounts> {
    let mut prev = start;
    marks
        .iter()
        .map(|&m| {
            let d = m - prev;
            prev = m;
            d
        })
        .collect()
}

/// Counts of one schoolbook product.
pub fn schoolbook_cost() -> OpCounts {
    let c = Counter::new();
    let (a, b) = inputs(&c);
    let _ = mul_schoolbook(&a, &b, &MultTable::from_generators());
    debug_assert_eq!(c.report().nontrivial_mults, (DIM * DIM) as u64);
    c.report()
}
