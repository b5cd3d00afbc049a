mod common;

use common::*;
use grassembed_core::linalg::{
    column_span_normal_form, determinant_division_free, determinant_fraction_free, spans_equal,
};
use grassembed_core::{Error, Matrix, Ring, RingValue};
use proptest::prelude::*;

fn square_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (ring_strategy(), 1usize..=3).prop_flat_map(|(r, n)| {
        (matrix_strategy(r.clone(), n, n), matrix_strategy(r, n, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_is_multiplicative((a, b) in square_pair()) {
        let r = a.ring().clone();
        let lhs = a.matmul(&b).unwrap().determinant().unwrap();
        let rhs = r.mul(&a.determinant().unwrap(), &b.determinant().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_matches_cofactor_expansion((_r, m) in ring_and_square(4)) {
        let expected = cofactor_det(&m);
        prop_assert_eq!(&m.determinant().unwrap(), &expected);
        prop_assert_eq!(&determinant_division_free(&m).unwrap(), &expected);
        if m.ring().is_integral_domain() {
            prop_assert_eq!(&determinant_fraction_free(&m).unwrap(), &expected);
        }
    }

    #[test]
    fn transpose_preserves_determinant((_r, m) in ring_and_square(4)) {
        prop_assert_eq!(m.determinant().unwrap(), m.transpose().determinant().unwrap());
    }

    #[test]
    fn inverse_is_two_sided((_r, m) in ring_and_square(3)) {
        match m.inverse() {
            Ok(inv) => {
                let id = Matrix::identity(m.ring(), m.rows()).unwrap();
                prop_assert_eq!(m.matmul(&inv).unwrap(), id.clone());
                prop_assert_eq!(inv.matmul(&m).unwrap(), id);
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NotAUnit);
                prop_assert!(!m.ring().is_unit(&m.determinant().unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_span_preserving(
        (m, g) in (prop::sample::select(vec![2u64, 3]), any::<bool>(), 1usize..=4)
            .prop_flat_map(|(p, dual, n)| {
                let r = if dual { Ring::dual_numbers(p).unwrap() } else { Ring::prime_field(p).unwrap() };
                (1..=n).prop_flat_map(move |k| (matrix_strategy(r.clone(), n, k), matrix_strategy(r.clone(), k, k)))
            })
    ) {
        if let Ok(nf) = column_span_normal_form(&m) {
            prop_assert_eq!(column_span_normal_form(&nf).unwrap(), nf.clone());
            prop_assert_eq!(brute_span(&nf), brute_span(&m));
            // any change of basis gives the same normal form
            if g.is_invertible().unwrap() {
                prop_assert_eq!(column_span_normal_form(&m.matmul(&g).unwrap()).unwrap(), nf);
            }
        } else {
            // rejected only when the span is not free of full rank
            let q = m.ring().size().unwrap() as usize;
            prop_assert!(brute_span(&m).len() < q.pow(m.cols() as u32));
        }
    }
}

#[test]
fn matmul_examples() {
    let z = Ring::integer();
    let i2 = Matrix::identity(&z, 2).unwrap();
    assert_eq!(i2.matmul(&i2).unwrap(), i2);
    let f2 = Ring::prime_field(2).unwrap();
    let u = Matrix::from_i64(&f2, &[&[1, 1], &[0, 1]]).unwrap();
    assert_eq!(u.matmul(&u).unwrap(), Matrix::identity(&f2, 2).unwrap());
    let a = Matrix::from_i64(&z, &[&[1, 2], &[3, 4]]).unwrap();
    let swap = Matrix::from_i64(&z, &[&[0, 1], &[1, 0]]).unwrap();
    assert_eq!(a.matmul(&swap).unwrap(), Matrix::from_i64(&z, &[&[2, 1], &[4, 3]]).unwrap());
    assert!(matches!(a.matmul(&Matrix::identity(&z, 3).unwrap()), Err(Error::DimensionMismatch(_))));
    assert_eq!(a.matmul(&Matrix::identity(&f2, 2).unwrap()), Err(Error::RingMismatch));
}

#[test]
fn determinant_examples() {
    for r in rings() {
        for n in 1..5 {
            assert!(r.is_one(&Matrix::identity(&r, n).unwrap().determinant().unwrap()));
        }
    }
    let d2 = Ring::dual_numbers(2).unwrap();
    let e = d2.epsilon().unwrap();
    let m = Matrix::from_rows(d2.clone(), vec![vec![d2.one(), e.clone()], vec![e, d2.one()]]).unwrap();
    assert_eq!(m.determinant().unwrap(), d2.one());
    let z = Ring::integer();
    let t = Matrix::from_i64(&z, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 3]]).unwrap();
    assert_eq!(t.determinant().unwrap(), z.from_i64(6));
    assert_eq!(cofactor_det(&t), z.from_i64(6));
    assert!(matches!(Matrix::from_i64(&z, &[&[1, 2]]).unwrap().determinant(), Err(Error::NotSquare { .. })));
}

#[test]
fn minor_examples() {
    let z = Ring::integer();
    let m = Matrix::from_i64(&z, &[&[1, 2], &[3, 4]]).unwrap();
    assert_eq!(m.minor(&[0, 1], &[0, 1]).unwrap(), m.determinant().unwrap());
    assert_eq!(m.minor(&[1], &[0]).unwrap(), z.from_i64(3));
    assert_eq!(m.minor(&[0, 1], &[0, 1]).unwrap(), z.from_i64(-2));
    assert!(m.minor(&[0, 1], &[0]).is_err());
}

#[test]
fn normal_form_examples() {
    let f3 = Ring::prime_field(3).unwrap();
    let e12 = Matrix::from_i64(&f3, &[&[1, 0], &[0, 1], &[0, 0]]).unwrap();
    assert_eq!(column_span_normal_form(&e12).unwrap(), e12);
    let f5 = Ring::prime_field(5).unwrap();
    assert_eq!(
        column_span_normal_form(&Matrix::from_i64(&f5, &[&[2], &[4]]).unwrap()).unwrap(),
        Matrix::from_i64(&f5, &[&[1], &[2]]).unwrap()
    );
    let d2 = Ring::dual_numbers(2).unwrap();
    let v2 = Matrix::from_rows(d2.clone(), vec![vec![d2.one()], vec![d2.epsilon().unwrap()]]).unwrap();
    assert_eq!(column_span_normal_form(&v2).unwrap(), v2);
}

#[test]
fn spans_equal_examples() {
    let f5 = Ring::prime_field(5).unwrap();
    let e1 = Matrix::from_i64(&f5, &[&[1], &[0]]).unwrap();
    assert!(spans_equal(&e1, &Matrix::from_i64(&f5, &[&[2], &[0]]).unwrap()).unwrap());
    let d2 = Ring::dual_numbers(2).unwrap();
    let v1 = Matrix::from_rows(d2.clone(), vec![vec![d2.one()], vec![d2.zero()]]).unwrap();
    let v2 = Matrix::from_rows(d2.clone(), vec![vec![d2.one()], vec![RingValue::Dual(0, 1)]]).unwrap();
    assert!(!spans_equal(&v1, &v2).unwrap());
    let f2 = Ring::prime_field(2).unwrap();
    let a = Matrix::from_i64(&f2, &[&[1, 0], &[0, 1]]).unwrap();
    let b = Matrix::from_i64(&f2, &[&[1, 0], &[1, 1]]).unwrap();
    assert!(spans_equal(&a, &b).unwrap());
}

/// spans_equal against span enumeration, over all full-rank pairs with
/// n ≤ 3 over F_2 and n ≤ 2 over F_3 and F_2[ε].
#[test]
fn spans_equal_matches_enumeration() {
    let cases = [
        (Ring::prime_field(2).unwrap(), 3),
        (Ring::prime_field(3).unwrap(), 2),
        (Ring::dual_numbers(2).unwrap(), 2),
    ];
    for (ring, max_n) in cases {
        let q = ring.size().unwrap() as usize;
        for n in 1..=max_n {
            for k in 1..=n {
                let free: Vec<_> = every_matrix(&ring, n, k)
                    .into_iter()
                    .map(|m| {
                        let s = brute_span(&m);
                        (m, s)
                    })
                    .filter(|(_, s)| s.len() == q.pow(k as u32))
                    .collect();
                for (a, sa) in &free {
                    for (b, sb) in &free {
                        assert_eq!(spans_equal(a, b).unwrap(), sa == sb, "{a} vs {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn spans_equal_matches_enumeration_f3_n4_sampled() {
    use rand::{Rng, SeedableRng};
    let f3 = Ring::prime_field(3).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let pool: Vec<_> = (0..300)
        .map(|_| {
            let k = rng.gen_range(1..=3);
            let entries = (0..4 * k).map(|_| RingValue::Residue(rng.gen_range(0..2))).collect();
            Matrix::new(f3.clone(), 4, k, entries).unwrap()
        })
        .filter_map(|m| {
            let s = brute_span(&m);
            (s.len() == 3usize.pow(m.cols() as u32)).then_some((m, s))
        })
        .collect();
    for (a, sa) in &pool {
        for (b, sb) in &pool {
            if a.cols() == b.cols() {
                assert_eq!(spans_equal(a, b).unwrap(), sa == sb);
            }
        }
    }
}
