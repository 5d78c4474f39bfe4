use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use satgenus::exactalg::{char_poly, inertia, pencil_det, seifert_det, signature_of_symmetric};
use satgenus::oracles::{bareiss_pencil_det, faddeev_leverrier, inertia_by_elimination};
use satgenus::samples::{random_knot, random_symmetric_rational};
use satgenus::{IntMatrix, LaurentPoly};

fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, range: i64) -> IntMatrix {
    IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-range..=range)))
}

fn random_symmetric_int(rng: &mut ChaCha8Rng, n: usize, range: i64) -> IntMatrix {
    let a = random_int_matrix(rng, n, range);
    a.add(&a.transpose())
}

#[test]
fn pencil_det_matches_bareiss() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let n = rng.gen_range(0..=7);
        let a = random_int_matrix(&mut rng, n, 3);
        let b = random_int_matrix(&mut rng, n, 3);
        assert_eq!(pencil_det(&a, &b), bareiss_pencil_det(&a, &b), "{a} {b}");
    }
}

#[test]
fn seifert_det_matches_bareiss_on_random_knots() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let (v, _) = random_knot(&mut rng, 6);
        let m = v.matrix();
        assert_eq!(seifert_det(m), bareiss_pencil_det(m, &m.transpose().neg()));
    }
}

#[test]
fn char_poly_matches_faddeev_leverrier() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..150 {
        let n = rng.gen_range(1..=8);
        let m = random_int_matrix(&mut rng, n, 5);
        assert_eq!(char_poly(&m), faddeev_leverrier(&m), "{m}");
    }
}

#[test]
fn inertia_matches_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        // low rank and repeated eigenvalues are common with tiny entries
        let m = random_symmetric_int(&mut rng, n, 1);
        assert_eq!(inertia(&m).unwrap(), inertia_by_elimination(&m.to_rational()), "{m}");
    }
    for _ in 0..300 {
        let m = random_symmetric_rational(&mut rng, 6);
        let (p, q, _) = inertia_by_elimination(&m);
        assert_eq!(signature_of_symmetric(&m).unwrap(), p as i64 - q as i64);
    }
}

#[test]
fn large_entries() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let big = BigInt::from(10).pow(30);
    for _ in 0..20 {
        let n = rng.gen_range(1..=6);
        let m = random_int_matrix(&mut rng, n, 50).map(|x| x * &big);
        assert_eq!(char_poly(&m), faddeev_leverrier(&m));
        let s = m.add(&m.transpose());
        assert_eq!(inertia(&s).unwrap(), inertia_by_elimination(&s.to_rational()));
    }
}

proptest! {
    #[test]
    fn laurent_product_is_commutative_and_evaluates(
        a in proptest::collection::vec(-5i64..5, 0..6),
        b in proptest::collection::vec(-5i64..5, 0..6),
        la in -3i64..3,
        lb in -3i64..3,
    ) {
        let p = LaurentPoly::from_i64(la, &a);
        let q = LaurentPoly::from_i64(lb, &b);
        prop_assert_eq!(&p * &q, &q * &p);
        let x = num_rational::BigRational::new(3.into(), 2.into());
        let lhs = (&p * &q).eval(&x).unwrap();
        prop_assert_eq!(lhs, p.eval(&x).unwrap() * q.eval(&x).unwrap());
    }

    #[test]
    fn alexander_is_congruence_invariant(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (v, cert) = random_knot(&mut rng, 6);
        let w = v.congruence(&cert.basis_change).unwrap();
        prop_assert_eq!(v.alexander(), w.alexander());
        prop_assert!(v.alexander().is_symmetric_up_to_units());
    }
}
