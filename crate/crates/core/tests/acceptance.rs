//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is always printed; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dirac_core::algebra::{mul_schoolbook, MultTable, SignedBasis};
use dirac_core::exactnum::DyadicRational;
use dirac_core::fastmult::{builtin_pipeline, measure_costs, mul_fast, schoolbook_cost, verify_pipeline, Level};
use dirac_core::linalg::{template_ab, template_ab_factored, template_ef, template_ef_factored, Mat};
use dirac_core::slpgen::{flatten, interpret};

const SYMBOLIC_LIMIT: Duration = Duration::from_secs(5);
const ORACLE_LIMIT: Duration = Duration::from_secs(10);
const ORACLE_PAIRS: usize = 10_000;
const SLP_PAIRS: usize = 1_000;
const TRIPLES: usize = 100;
const TEMPLATE_PAIRS: usize = 100;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn symbolic() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for lv in Level::ALL {
        let r = verify_pipeline(builtin_pipeline(lv));
        ok &= r.is_ok() && r.all_single_b;
        parts.push(format!("level {lv} {}/256", r.matched()));
    }
    let t = start.elapsed();
    outcome(ok && t < SYMBOLIC_LIMIT, format!("{} ({:.2?}, limit 5 s)", parts.join(", "), t))
}

fn oracle() -> Outcome {
    let t = MultTable::from_generators();
    let start = Instant::now();
    let bad = common::pairs(0xD1AC, ORACLE_PAIRS)
        .iter()
        .filter(|(a, b)| mul_fast(a, b, Level::Three) != mul_schoolbook(a, b, &t))
        .count();
    let el = start.elapsed();
    outcome(
        bad == 0 && el < ORACLE_LIMIT,
        format!("{bad} mismatches in {ORACLE_PAIRS} pairs ({el:.2?}, limit 10 s)"),
    )
}

fn counts() -> Outcome {
    let fast = measure_costs(builtin_pipeline(Level::Three)).total();
    let school = schoolbook_cost();
    let pass = fast.nontrivial_mults == 88
        && fast.additions == 256
        && school.nontrivial_mults == 256
        && school.additions == 240;
    outcome(
        pass,
        format!(
            "fast mul={} add={} (want 88/256), schoolbook mul={} add={} (want 256/240)",
            fast.nontrivial_mults, fast.additions, school.nontrivial_mults, school.additions
        ),
    )
}

fn sub_counts() -> Outcome {
    let c = measure_costs(builtin_pipeline(Level::Three));
    let add = |n: &str| c.block(n).map_or(u64::MAX, |b| b.total().additions);
    let want = [
        ("S4_0", 44),
        ("S4_1", 28),
        ("S4_2", 28),
        ("S4_3", 28),
        ("S2_0", 14),
        ("S2_1", 6),
        ("S2_2", 6),
        ("S2_3", 6),
        ("F2", 2),
    ];
    let mut wrong: Vec<String> = want
        .iter()
        .filter(|(n, w)| add(n) != *w)
        .map(|(n, w)| format!("{n} {} != {w}", add(n)))
        .collect();
    let s: u64 = ["s0", "s1", "s2", "s3"].iter().map(|n| add(n)).sum();
    if s != 4 {
        wrong.push(format!("s0..s3 {s} != 4"));
    }
    let d = c.block_diag_total();
    if (d.nontrivial_mults, d.additions) != (88, 166) {
        wrong.push(format!("D30 {}/{} != 88/166", d.nontrivial_mults, d.additions));
    }
    let st = c.structural().additions;
    if st != 90 {
        wrong.push(format!("structural {st} != 90"));
    }
    let detail = format!(
        "blocks 44/28x3/14/6x3/4/2, D30 {}/{}, structural {st}",
        d.nontrivial_mults, d.additions
    );
    if wrong.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("{detail}; mismatched: {}", wrong.join(", ")))
    }
}

fn algebra() -> Outcome {
    let t = MultTable::from_generators();
    let assoc = t.associativity_failures().len();
    let unit = (0..16).all(|q| t.get(0, q) == SignedBasis::pos(q as u8) && t.get(q, 0) == SignedBasis::pos(q as u8));
    let squares = t.square_signs()[1..5] == [1, -1, -1, -1];
    let anti = (1..5).all(|p| (1..5).all(|q| p == q || t.get(p, q) == t.get(q, p).negated()));
    let mut r = common::rng(5);
    let elem = (0..TRIPLES)
        .filter(|_| {
            let (a, b, c) = (common::dyadic_dirac(&mut r), common::dyadic_dirac(&mut r), common::dyadic_dirac(&mut r));
            let left = mul_schoolbook(&mul_schoolbook(&a, &b, &t), &c, &t);
            left != mul_schoolbook(&a, &mul_schoolbook(&b, &c, &t), &t)
        })
        .count();
    outcome(
        assoc == 0 && unit && squares && anti && elem == 0,
        format!(
            "{assoc}/4096 basis triples fail, unit {unit}, squares {squares}, anti-commutation {anti}, {elem}/{TRIPLES} element triples fail"
        ),
    )
}

fn random_block(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> Mat<DyadicRational> {
    Mat::new(n, n, (0..n * n).map(|_| common::dyadic(r)).collect()).unwrap()
}

fn templates() -> Outcome {
    let mut r = common::rng(6);
    let mut bad = 0;
    for n in [1, 2, 4] {
        for _ in 0..TEMPLATE_PAIRS {
            let (x, y) = (random_block(&mut r, n), random_block(&mut r, n));
            bad += usize::from(template_ab(&x, &y).unwrap() != template_ab_factored(&x, &y).unwrap());
            bad += usize::from(template_ef(&x, &y).unwrap() != template_ef_factored(&x, &y).unwrap());
        }
    }
    outcome(bad == 0, format!("{bad} failures over {TEMPLATE_PAIRS} pairs at sizes 1, 2, 4 for both templates"))
}

fn slp() -> Outcome {
    let p = flatten(builtin_pipeline(Level::Three), true);
    let h = p.histogram();
    let bad = common::pairs(0x51, SLP_PAIRS)
        .iter()
        .filter(|(a, b)| interpret(&p, &a.coeffs, &b.coeffs).unwrap() != mul_fast(a, b, Level::Three).coeffs.to_vec())
        .count();
    outcome(
        h.mul == 88 && h.add_sub() == 256 && bad == 0,
        format!("mul={} add+sub={} (want 88/256), {bad}/{SLP_PAIRS} interpretation mismatches", h.mul, h.add_sub()),
    )
}

fn savings() -> Outcome {
    let fast = measure_costs(builtin_pipeline(Level::Three)).total();
    let school = schoolbook_cost();
    let delta = school.nontrivial_mults as i64 - fast.nontrivial_mults as i64;
    let f = fast.nontrivial_mults + fast.additions;
    let s = school.nontrivial_mults + school.additions;
    outcome(
        delta == 168 && (f, s) == (344, 496),
        format!(
            "multiplication delta {delta} (want 168), total ops {f}/{s} = {:.4} (want 344/496 = {:.4})",
            f as f64 / s as f64,
            344.0 / 496.0
        ),
    )
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("symbolic factorization identity", symbolic),
        ("oracle equivalence", oracle),
        ("operation counts", counts),
        ("block sub-counts", sub_counts),
        ("algebra soundness", algebra),
        ("template identities", templates),
        ("SLP agreement", slp),
        ("savings arithmetic", savings),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.pass);
        println!("{} {}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("EXCLUDED 9. hardware figures and wall-clock speedups: not reproducible here; `dirac bench` is informational");
    println!("acceptance: {} passed, {failed} failed, 1 excluded", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
