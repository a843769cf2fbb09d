mod common;

use dirac_core::algebra::{mul_schoolbook, MultTable};
use dirac_core::fastmult::{builtin_pipeline, mul_fast, precompute_apply, FastOperator, Level};

#[test]
fn ten_thousand_integer_pairs_all_levels() {
    let t = MultTable::from_generators();
    for (i, (a, b)) in common::pairs(20240601, 10_000).iter().enumerate() {
        let want = mul_schoolbook(a, b, &t);
        for lv in Level::ALL {
            assert_eq!(mul_fast(a, b, lv), want, "pair {i}, level {lv}");
        }
    }
}

#[test]
fn dyadic_inputs_are_exact() {
    let t = MultTable::from_generators();
    let mut r = common::rng(7);
    for _ in 0..500 {
        let (a, b) = (common::dyadic_dirac(&mut r), common::dyadic_dirac(&mut r));
        assert_eq!(mul_fast(&a, &b, Level::Three), mul_schoolbook(&a, &b, &t));
    }
}

#[test]
fn floats_within_tolerance() {
    let t = MultTable::from_generators();
    let mut r = common::rng(99);
    for _ in 0..2000 {
        let (a, b) = (common::float_dirac(&mut r), common::float_dirac(&mut r));
        let (x, y) = (mul_fast(&a, &b, Level::Three), mul_schoolbook(&a, &b, &t));
        for k in 0..16 {
            assert!((x[k] - y[k]).abs() <= 1e-12, "{k}: {} vs {}", x[k], y[k]);
        }
    }
}

#[test]
fn unit_b_is_identity() {
    let mut r = common::rng(3);
    let a = common::int_dirac(&mut r);
    for lv in Level::ALL {
        assert_eq!(mul_fast(&a, &common::unit_b(), lv), a);
    }
}

#[test]
fn one_precompute_serves_many_products() {
    let t = MultTable::from_generators();
    let mut r = common::rng(11);
    let b = common::int_dirac(&mut r);
    let op = precompute_apply(&b);
    let op2 = FastOperator::new(builtin_pipeline(Level::Two), &b);
    for _ in 0..50 {
        let a = common::int_dirac(&mut r);
        let want = mul_schoolbook(&a, &b, &t);
        assert_eq!(op.apply(&a), want);
        assert_eq!(op2.apply(&a), want);
    }
}
