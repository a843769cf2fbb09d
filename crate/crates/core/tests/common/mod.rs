#![allow(dead_code)]

use dirac_core::algebra::DiracNumber;
use dirac_core::exactnum::DyadicRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BOUND: i64 = 1 << 20;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_dirac(r: &mut ChaCha8Rng) -> DiracNumber<DyadicRational> {
    DiracNumber::new(std::array::from_fn(|_| DyadicRational::from_int(r.gen_range(-BOUND..=BOUND))))
}

pub fn dyadic(r: &mut ChaCha8Rng) -> DyadicRational {
    DyadicRational::new(r.gen_range(-BOUND..=BOUND), r.gen_range(0..8))
}

pub fn dyadic_dirac(r: &mut ChaCha8Rng) -> DiracNumber<DyadicRational> {
    DiracNumber::new(std::array::from_fn(|_| dyadic(r)))
}

pub fn float_dirac(r: &mut ChaCha8Rng) -> DiracNumber<f64> {
    DiracNumber::new(std::array::from_fn(|_| r.gen_range(-1.0..1.0)))
}

pub fn pairs(seed: u64, n: usize) -> Vec<(DiracNumber<DyadicRational>, DiracNumber<DyadicRational>)> {
    let mut r = rng(seed);
    (0..n).map(|_| (int_dirac(&mut r), int_dirac(&mut r))).collect()
}

pub fn unit_b<S: dirac_core::exactnum::Ring>() -> DiracNumber<S> {
    DiracNumber::unit()
}
