//! `dirac verify`.

use std::fmt::Write;

use dirac_core::algebra::{mul_schoolbook, DiracNumber, MultTable};
use dirac_core::exactnum::DyadicRational;
use dirac_core::fastmult::{verify_pipeline, AssetSource, Level, Pipeline};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

pub const BOUND: i64 = 1 << 20;

pub fn random_pair(r: &mut ChaCha8Rng) -> (DiracNumber<DyadicRational>, DiracNumber<DyadicRational>) {
    let mut x = || DiracNumber::new(std::array::from_fn(|_| DyadicRational::from_int(r.gen_range(-BOUND..=BOUND))));
    (x(), x())
}

/// Returns the report and whether every check passed.
pub fn run(levels: &[Level], seed: u64, iters: usize, source: &AssetSource) -> Result<(String, bool), CliError> {
    let mut out = String::new();
    let t = MultTable::from_generators();
    let assoc = t.associativity_failures().len();
    let mut ok = assoc == 0;
    let _ = writeln!(out, "associativity: {}/4096 basis triples hold", 4096 - assoc);
    for &lv in levels {
        let _ = writeln!(out, "level {lv}:");
        let p = match Pipeline::assemble_from(lv, source) {
            Ok(p) => p,
            Err(e) => {
                let _ = writeln!(out, "  assets: {e}");
                ok = false;
                continue;
            }
        };
        let r = verify_pipeline(&p);
        let _ = writeln!(out, "  {r}");
        if !r.is_ok() {
            ok = false;
            if let Some(m) = r.mismatches.first() {
                let _ = writeln!(out, "  first mismatch: {m}");
            }
            let _ = writeln!(out, "  suspect stages: {}", suspects(&p, source).join(", "));
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bad = (0..iters)
            .filter(|_| {
                let (a, b) = random_pair(&mut rng);
                p.run(&a, &b) != mul_schoolbook(&a, &b, &t)
            })
            .count();
        ok &= bad == 0;
        let _ = writeln!(out, "  oracle: {}/{iters} random pairs agree (seed {seed})", iters - bad);
        let _ = writeln!(out, "  verdict: {}", if bad == 0 { "PASS" } else { "FAIL" });
    }
    Ok((out, ok))
}

/// Stages whose asset differs from the builtin copy, narrowed to those
/// whose builtin copy alone repairs the pipeline when there are any.
fn suspects(p: &Pipeline, source: &AssetSource) -> Vec<String> {
    let differing: Vec<String> = source
        .stages_differing_from_builtin()
        .into_iter()
        .filter(|s| p.stage(s).is_some())
        .collect();
    if differing.is_empty() {
        return vec!["none differ from the builtin assets".to_string()];
    }
    let repairing: Vec<String> = differing
        .iter()
        .filter(|name| {
            let Ok(b) = Pipeline::assemble_from(p.level(), &AssetSource::Builtin) else {
                return false;
            };
            let mut q = p.clone();
            match (q.stage_mut(name), b.stage(name)) {
                (Some(slot), Some(good)) => *slot = good.clone(),
                _ => return false,
            }
            verify_pipeline(&q).is_ok()
        })
        .cloned()
        .collect();
    if repairing.is_empty() {
        differing
    } else {
        repairing
    }
}
