//! `dirac bench`. Timings are informational.

use std::fmt::Write;
use std::hint::black_box;
use std::time::Instant;

use dirac_core::algebra::{mul_schoolbook, DiracNumber, MultTable};
use dirac_core::exactnum::{Counter, CountingScalar};
use dirac_core::fastmult::{FastOperator, VerifiedPipeline};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BATCHES: usize = 10;

fn stats(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Mean and standard deviation of ns per product over the batches.
fn time(batches: &[Vec<DiracNumber<f64>>], f: &dyn Fn(&DiracNumber<f64>) -> DiracNumber<f64>) -> (f64, f64) {
    let per: Vec<f64> = batches
        .iter()
        .map(|batch| {
            let start = Instant::now();
            for a in batch {
                black_box(f(black_box(a)));
            }
            start.elapsed().as_nanos() as f64 / batch.len() as f64
        })
        .collect();
    stats(&per)
}

/// The `a` inputs for each batch and one fixed `b`.
pub fn inputs(iters: usize, seed: u64) -> (Vec<Vec<DiracNumber<f64>>>, DiracNumber<f64>) {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut x = || DiracNumber::new(std::array::from_fn(|_| r.gen_range(-1.0..1.0)));
    let batches = (0..BATCHES).map(|_| (0..iters).map(|_| x()).collect()).collect();
    (batches, x())
}

fn checksum(batches: &[Vec<DiracNumber<f64>>]) -> u64 {
    batches
        .iter()
        .flatten()
        .flat_map(|a| a.coeffs.iter())
        .fold(0u64, |h, v| h.rotate_left(5) ^ v.to_bits())
}

pub fn run(iters: usize, seed: u64, p: &VerifiedPipeline) -> String {
    let t = MultTable::from_generators();
    let (batches, b) = inputs(iters, seed);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "inputs: seed {seed}, {BATCHES} batches of {iters}, checksum {:016x}",
        checksum(&batches)
    );
    let op = FastOperator::new(p, &b);
    let rows: [(&str, (f64, f64)); 3] = [
        ("schoolbook", time(&batches, &|a| mul_schoolbook(a, &b, &t))),
        ("fast", time(&batches, &|a| p.run(a, &b))),
        ("fast amortized", time(&batches, &|a| op.apply(a))),
    ];
    let _ = writeln!(out, "{:<16} {:>12} {:>12}", "method", "mean ns", "std ns");
    for (name, (mean, std)) in rows {
        let _ = writeln!(out, "{name:<16} {mean:>12.1} {std:>12.1}");
    }

    let c = Counter::new();
    let data = |x: &DiracNumber<f64>| DiracNumber::new(std::array::from_fn(|i| c.input(x[i] as i64)));
    let (ca, cb): (DiracNumber<CountingScalar>, _) = (data(&batches[0][0]), data(&b));
    let _ = p.run(&ca, &cb);
    let full = c.report();
    let cop = FastOperator::new(p, &cb);
    c.reset();
    let _ = cop.apply(&ca);
    let apply = c.report();
    let _ = writeln!(
        out,
        "counting: full product mul={} add={}; amortized apply mul={} add={} ({} fewer additions after the first)",
        full.nontrivial_mults,
        full.additions,
        apply.nontrivial_mults,
        apply.additions,
        full.additions - apply.additions
    );
    out
}
