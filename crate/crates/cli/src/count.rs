//! `dirac count`.

use std::fmt::Write;

use dirac_core::exactnum::OpCounts;
use dirac_core::fastmult::{measure_costs, schoolbook_cost, AssetSource, Level, Pipeline};

use crate::CliError;

/// Multiplications of the earlier published algorithm this one is compared
/// with; quoted, not measured.
pub const PRIOR_ALGORITHM_MULTS: u64 = 128;

fn line(c: &OpCounts) -> String {
    format!(
        "mul={} add={} neg={} shift={}",
        c.nontrivial_mults, c.additions, c.negations, c.shifts
    )
}

pub fn run(source: &AssetSource) -> Result<String, CliError> {
    let mut out = String::new();
    let school = schoolbook_cost();
    let _ = writeln!(out, "schoolbook: mul={} add={}", school.nontrivial_mults, school.additions);
    let mut fast = None;
    for lv in Level::ALL {
        let c = measure_costs(&Pipeline::assemble_from(lv, source)?);
        let _ = writeln!(out, "level {lv}: {}", line(&c.total()));
        if lv == Level::Three {
            fast = Some(c);
        }
    }
    let c = fast.expect("level 3 measured");
    let total = c.total();
    let _ = writeln!(out, "fast: mul={} add={}", total.nontrivial_mults, total.additions);
    let _ = writeln!(out, "  precompute (per b): {}", line(&c.precompute));
    let _ = writeln!(out, "  apply (per a): {}", line(&c.apply));
    let _ = writeln!(out, "  block diagonal: {}", line(&c.block_diag_total()));
    let _ = writeln!(out, "  structural stages: {}", line(&c.structural()));
    for b in &c.blocks {
        let t = b.total();
        let _ = writeln!(out, "    {:<5} mul={:<3} add={}", b.name, t.nontrivial_mults, t.additions);
    }
    let _ = writeln!(
        out,
        "savings vs schoolbook: {} multiplications",
        school.nontrivial_mults as i64 - total.nontrivial_mults as i64
    );
    let _ = writeln!(
        out,
        "savings vs the prior {PRIOR_ALGORITHM_MULTS}-multiplication algorithm: {} multiplications (quoted figure)",
        PRIOR_ALGORITHM_MULTS as i64 - total.nontrivial_mults as i64
    );
    let f = total.nontrivial_mults + total.additions;
    let s = school.nontrivial_mults + school.additions;
    let _ = writeln!(out, "total ops fast={f}, schoolbook={s}, ratio≈{:.2}", f as f64 / s as f64);
    Ok(out)
}
