use dirac_core::algebra::{mul_schoolbook, DiracNumber, MultTable};
use dirac_core::exactnum::{lf_from_b, Counter, CountingScalar, DyadicRational, LinearForm, Ring};
use dirac_core::fastmult::{mul_fast, Level};
use dirac_core::linalg::{
    dirsum, kron, template_ab, template_ab_factored, template_ef, template_ef_factored, Mat, SignedPermutation,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn dy() -> impl Strategy<Value = DyadicRational> {
    (-(1i64 << 40)..(1i64 << 40), 0u32..24).prop_map(|(n, e)| DyadicRational::new(n, e))
}

fn small_dy() -> impl Strategy<Value = DyadicRational> {
    (-64i64..64, 0u32..3).prop_map(|(n, e)| DyadicRational::new(n, e))
}

fn ratio(d: &DyadicRational) -> BigRational {
    BigRational::new(d.numerator().clone(), BigInt::from(1) << d.exponent())
}

fn mat(n: usize, m: usize) -> impl Strategy<Value = Mat<DyadicRational>> {
    proptest::collection::vec(small_dy(), n * m).prop_map(move |v| Mat::new(n, m, v).unwrap())
}

fn dirac() -> impl Strategy<Value = DiracNumber<DyadicRational>> {
    proptest::collection::vec(-1000i64..1000, 16)
        .prop_map(|v| DiracNumber::new(std::array::from_fn(|i| DyadicRational::from_int(v[i]))))
}

fn perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(prop::bool::ANY, n)).prop_map(
        |(order, s)| SignedPermutation::new(order, s.iter().map(|&b| if b { 1 } else { -1 }).collect()).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn dyadic_agrees_with_rationals(a in dy(), b in dy(), k in -30i32..30) {
        prop_assert_eq!(ratio(&(a.clone() + b.clone())), ratio(&a) + ratio(&b));
        prop_assert_eq!(ratio(&(a.clone() - b.clone())), ratio(&a) - ratio(&b));
        prop_assert_eq!(ratio(&(a.clone() * b.clone())), ratio(&a) * ratio(&b));
        prop_assert_eq!(ratio(&-a.clone()), -ratio(&a));
        let two = BigRational::from_integer(BigInt::from(2));
        let scale = if k >= 0 { num_traits::pow(two, k as usize) } else { num_traits::pow(two, (-k) as usize).recip() };
        prop_assert_eq!(ratio(&a.shift(k)), ratio(&a) * scale);
        prop_assert_eq!(a.to_string().parse::<DyadicRational>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn linear_forms_evaluate_homomorphically(
        c in proptest::collection::vec(small_dy(), 34),
        b in proptest::collection::vec(dy(), 16),
        k in small_dy(),
    ) {
        let form = |cs: &[DyadicRational]| {
            (0..16).fold(LinearForm::constant(cs[16].clone()), |acc, m| {
                acc + LinearForm::constant(cs[m].clone()) * lf_from_b(m).unwrap()
            })
        };
        let (f, g) = (form(&c[..17]), form(&c[17..]));
        let b: [DyadicRational; 16] = std::array::from_fn(|i| b[i].clone());
        prop_assert_eq!((f.clone() + g.clone()).eval(&b), f.eval(&b) + g.eval(&b));
        prop_assert_eq!((f.clone() - g.clone()).eval(&b), f.eval(&b) - g.eval(&b));
        prop_assert_eq!((LinearForm::constant(k.clone()) * f.clone()).eval(&b), k * f.eval(&b));
        prop_assert_eq!(f.shift(-1).eval(&b), f.eval(&b).halve());
    }

    #[test]
    fn counting_never_changes_values(a in dirac(), b in dirac()) {
        let c = Counter::new();
        let ca = DiracNumber::new(std::array::from_fn(|i| c.input(a[i].clone())));
        let cb = DiracNumber::new(std::array::from_fn(|i| c.input(b[i].clone())));
        let want = mul_fast(&a, &b, Level::Three);
        let got = mul_fast(&ca, &cb, Level::Three);
        for i in 0..16 {
            prop_assert_eq!(got[i].value(), &want[i]);
        }
        let t = MultTable::from_generators();
        let school = mul_schoolbook(&ca, &cb, &t);
        prop_assert!((0..16).all(|i| school[i].value() == &want[i]));
    }

    #[test]
    fn bilinear(a in dirac(), a2 in dirac(), b in dirac(), b2 in dirac(), k in small_dy()) {
        let f = |x: &DiracNumber<DyadicRational>, y: &DiracNumber<DyadicRational>| mul_fast(x, y, Level::Three);
        let ka = a2.scale(&k);
        prop_assert_eq!(f(&(a.clone() + ka.clone()), &b), f(&a, &b) + f(&a2, &b).scale(&k));
        prop_assert_eq!(f(&a, &(b.clone() + b2.scale(&k))), f(&a, &b) + f(&a, &b2).scale(&k));
    }

    #[test]
    fn kron_mixed_product(a in mat(2, 3), b in mat(2, 2), c in mat(3, 2), d in mat(2, 1)) {
        let left = kron(&a, &b).matmul(&kron(&c, &d)).unwrap();
        let right = kron(&a.matmul(&c).unwrap(), &b.matmul(&d).unwrap());
        prop_assert_eq!(left, right);
        prop_assert_eq!(kron(&a, &b).transpose(), kron(&a.transpose(), &b.transpose()));
    }

    #[test]
    fn dirsum_is_blockwise(a in mat(2, 2), b in mat(3, 3), c in mat(2, 2), d in mat(3, 3)) {
        let left = dirsum(&[a.clone(), b.clone()]).unwrap().matmul(&dirsum(&[c.clone(), d.clone()]).unwrap()).unwrap();
        let right = dirsum(&[a.matmul(&c).unwrap(), b.matmul(&d).unwrap()]).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(kron(&Mat::<DyadicRational>::identity(2), &a), dirsum(&[a.clone(), a]).unwrap());
    }

    #[test]
    fn templates_factor_exactly(n in prop::sample::select(vec![1usize, 2, 4]), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut block = || Mat::new(n, n, (0..n * n).map(|_| DyadicRational::new(r.gen_range(-99i64..99), r.gen_range(0..3))).collect()).unwrap();
        let (x, y) = (block(), block());
        prop_assert_eq!(template_ab(&x, &y).unwrap(), template_ab_factored(&x, &y).unwrap());
        prop_assert_eq!(template_ef(&x, &y).unwrap(), template_ef_factored(&x, &y).unwrap());
    }

    #[test]
    fn signed_permutations_compose(p in perm(7), q in perm(7), x in proptest::collection::vec(small_dy(), 7)) {
        let pq = p.compose(&q).unwrap();
        prop_assert_eq!(pq.apply(&x), p.apply(&q.apply(&x)));
        prop_assert_eq!(p.inverse().apply(&p.apply(&x)), x.clone());
        let m: Mat<DyadicRational> = p.to_matrix();
        prop_assert_eq!(m.mul_vec(&x).unwrap(), p.apply(&x));
    }
}

#[test]
fn power_of_two_factors_are_not_multiplications() {
    for k in 0..=20i32 {
        for sign in [1i64, -1] {
            for e in [k, -k] {
                let c = Counter::new();
                let x = c.input(7);
                let f = CountingScalar::constant(DyadicRational::from_int(sign).shift(e));
                let y = x * f;
                let r = c.report();
                assert_eq!(r.nontrivial_mults, 0, "k={e} sign={sign}");
                assert_eq!(r.shifts, u64::from(e != 0));
                assert_eq!(r.negations, u64::from(sign < 0));
                assert_eq!(y.value(), &DyadicRational::from_int(7 * sign).shift(e));
            }
            let c = Counter::new();
            let _ = c.input(7) * CountingScalar::constant(DyadicRational::from_int(3 * sign).shift(k));
            assert_eq!(c.report().nontrivial_mults, 1);
        }
    }
}
