use fibonomial::cobweb;
use fibonomial::lgv::{self, PathMatrix, DEFAULT_SYSTEM_CAP};
use fibonomial::{build_cobweb, fnomial_product, triangle, FSequence, Method, SequenceKind};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn kinds() -> impl Strategy<Value = SequenceKind> {
    prop_oneof![
        Just(SequenceKind::Fibonacci),
        Just(SequenceKind::Natural),
        (2u32..6).prop_map(SequenceKind::Gaussian),
    ]
}

fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::one();
    }
    let mut det = BigInt::zero();
    for (j, a) in m[0].iter().enumerate() {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = a * cofactor_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_recurrence(kind in kinds(), n in 0usize..=24) {
        let s = FSequence::new(kind);
        let p = triangle(&s, n, Method::Product).unwrap();
        let r = triangle(&s, n, Method::Recurrence).unwrap();
        prop_assert_eq!(p.rows, r.rows);
    }

    #[test]
    fn symmetric_with_unit_boundary(kind in kinds(), n in 0usize..40, k in 0usize..40) {
        let s = FSequence::new(kind);
        let k = k.min(n);
        let a = fnomial_product(&s, n, k as i64).unwrap();
        prop_assert_eq!(&a, &fnomial_product(&s, n, (n - k) as i64).unwrap());
        prop_assert!(!a.is_zero());
        prop_assert!(fnomial_product(&s, n, 0).unwrap().is_one());
        prop_assert!(fnomial_product(&s, n, -1).unwrap().is_zero());
        prop_assert!(fnomial_product(&s, n, n as i64 + 1).unwrap().is_zero());
    }

    #[test]
    fn constant_one_triangle_is_all_ones(n in 0usize..30) {
        let t = triangle(&FSequence::new(SequenceKind::ConstantOne), n, Method::Product).unwrap();
        prop_assert!(t.rows.iter().flatten().all(|v| v.is_one()));
    }

    #[test]
    fn chain_layers_multiply(kind in kinds(), k in 0usize..5, extra in 1usize..4) {
        let n = (k + extra).min(6);
        prop_assume!(k < n);
        let s = FSequence::new(kind);
        let p = build_cobweb(&s, n).unwrap();
        let closed = cobweb::count_max_chains_layer(&p, k, n).unwrap();
        let direct: BigUint = (k + 1..=n).map(|i| s.term(i)).product();
        prop_assert_eq!(&closed, &direct);
        if closed <= BigUint::from(200_000u32) {
            let dfs = cobweb::enumerate_max_chains(&p, k, n, 1_000_000).unwrap().value;
            prop_assert_eq!(dfs, BigInt::from(closed));
        }
    }
}

#[test]
fn determinant_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..100 {
        let r = rng.random_range(1..=4);
        let entries: Vec<Vec<BigInt>> = (0..r)
            .map(|_| (0..r).map(|_| BigInt::from(rng.random_range(0..1_000_000u64))).collect())
            .collect();
        let want = cofactor_det(&entries);
        let got = lgv::lgv_determinant(&PathMatrix { entries });
        assert_eq!(got, want, "case {case}");
    }
}

#[test]
fn determinant_handles_zero_pivots() {
    let m = |rows: &[&[i64]]| PathMatrix {
        entries: rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
    };
    assert_eq!(lgv::lgv_determinant(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    assert_eq!(lgv::lgv_determinant(&m(&[&[0, 0], &[1, 0]])), BigInt::zero());
    assert_eq!(lgv::lgv_determinant(&m(&[&[0, 2, 1], &[3, 0, 0], &[0, 0, 5]])), BigInt::from(-30));
}

#[test]
fn cassini_sign_alternates() {
    for m in 2..=20usize {
        let d = lgv::build_fib_dag(m + 1, &[0, 1], &[m, m + 1]).unwrap();
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let det = lgv::lgv_determinant(&lgv::path_matrix(&d));
        assert_eq!(det, BigInt::from(sign), "m = {m}");
        if m <= 12 {
            let report = lgv::lgv_verify(&d, DEFAULT_SYSTEM_CAP).unwrap();
            assert_eq!(report.signed_sum, det, "m = {m}");
        }
    }
}

#[test]
fn fibonacci_dag_paths_are_fibonacci_numbers() {
    let s = FSequence::new(SequenceKind::Fibonacci);
    let d = lgv::build_fib_dag(60, &[0], &[60]).unwrap();
    for m in 0..=60 {
        assert_eq!(lgv::count_paths(&d, 0, m).unwrap(), BigInt::from(s.term(m + 1)));
    }
}

#[test]
fn grid_paths_are_binomials() {
    let d = lgv::build_grid_dag(6, 6, &[(0, 0)], &[(6, 6)]).unwrap();
    let natural = FSequence::new(SequenceKind::Natural);
    for x in 0..=6 {
        for y in 0..=6 {
            let v = lgv::grid_vertex(6, (x, y));
            let want = fnomial_product(&natural, x + y, x as i64).unwrap();
            assert_eq!(lgv::count_paths(&d, 0, v).unwrap(), BigInt::from(want));
        }
    }
}

#[test]
fn mobius_convolution_holds() {
    for kind in [SequenceKind::Fibonacci, SequenceKind::Natural, SequenceKind::Gaussian(2)] {
        let p = build_cobweb(&FSequence::new(kind), 5).unwrap();
        let mu = cobweb::mobius_table(&p).unwrap();
        assert_eq!(mu.convolution_failure(), None, "{kind}");
    }
}
