mod common;

use std::collections::BTreeSet;

use common::*;
use grassembed_core::grassmann::{
    embed, pluecker_coordinates, points_equal, sym_embed, target_labels, tensor_embed,
    tensor_power_embed, wedge_embed, EmbeddingKind,
};
use grassembed_core::verify::{expected_point_count, grassmannian_points};
use grassembed_core::{Error, GrassmannPoint, Matrix, Ring, RingValue};

fn col(ring: &Ring, v: &[RingValue]) -> Matrix {
    Matrix::new(ring.clone(), v.len(), 1, v.to_vec()).unwrap()
}

#[test]
fn point_construction() {
    let f2 = Ring::prime_field(2).unwrap();
    let m = Matrix::from_i64(&f2, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]).unwrap();
    let p = GrassmannPoint::new(&f2, 4, 2, &m).unwrap();
    assert_eq!(p.basis(), &m);
    assert_eq!((p.ambient_dim(), p.rank()), (4, 2));

    let f5 = Ring::prime_field(5).unwrap();
    let a = GrassmannPoint::new(&f5, 2, 1, &Matrix::from_i64(&f5, &[&[2], &[0]]).unwrap()).unwrap();
    assert_eq!(a, GrassmannPoint::coordinate(&f5, 2, &[0]).unwrap());

    let d2 = Ring::dual_numbers(2).unwrap();
    let v2 = GrassmannPoint::new(&d2, 2, 1, &col(&d2, &[d2.one(), d2.epsilon().unwrap()])).unwrap();
    let v1 = GrassmannPoint::coordinate(&d2, 2, &[0]).unwrap();
    assert!(!points_equal(&v1, &v2).unwrap());

    assert!(GrassmannPoint::new(&f5, 3, 1, &Matrix::from_i64(&f5, &[&[2], &[0]]).unwrap()).is_err());
    let rank_deficient = Matrix::from_i64(&f5, &[&[1, 2], &[2, 4]]).unwrap();
    assert_eq!(GrassmannPoint::new(&f5, 2, 2, &rank_deficient), Err(Error::NotFree));
    assert_eq!(points_equal(&v1, &a), Err(Error::RingMismatch));
}

#[test]
fn tensor_embedding_examples() {
    let f2 = Ring::prime_field(2).unwrap();
    let e1 = GrassmannPoint::coordinate(&f2, 2, &[0]).unwrap();
    let e2 = GrassmannPoint::coordinate(&f2, 2, &[1]).unwrap();
    let t = tensor_embed(&[e1.clone(), e2]).unwrap();
    // e₁ ⊗ e₂ has tensor index (0, 1), the second basis vector
    assert_eq!(t, GrassmannPoint::coordinate(&f2, 4, &[1]).unwrap());
    let labels = target_labels(EmbeddingKind::Tensor, &[2, 2], 2);
    assert_eq!(labels[1].as_list(), vec![0, 1]);

    let full2 = GrassmannPoint::coordinate(&f2, 2, &[0, 1]).unwrap();
    let full3 = GrassmannPoint::coordinate(&f2, 3, &[0, 1, 2]).unwrap();
    assert_eq!(tensor_embed(&[full2, full3]).unwrap(), GrassmannPoint::coordinate(&f2, 6, &[0, 1, 2, 3, 4, 5]).unwrap());

    let pts = grassmannian_points(&f2, 2, 1).unwrap();
    let mut images = BTreeSet::new();
    for a in &pts {
        for b in &pts {
            images.insert(tensor_embed(&[a.clone(), b.clone()]).unwrap());
        }
    }
    assert_eq!(images.len(), 9);
    assert_eq!(tensor_embed(&[]), Err(Error::EmptyProduct));
}

#[test]
fn tensor_power_examples() {
    let f2 = Ring::prime_field(2).unwrap();
    let pts = grassmannian_points(&f2, 2, 1).unwrap();
    for p in &pts {
        assert_eq!(&tensor_power_embed(p, 1).unwrap(), p);
    }
    let e1 = GrassmannPoint::coordinate(&f2, 2, &[0]).unwrap();
    assert_eq!(tensor_power_embed(&e1, 2).unwrap(), GrassmannPoint::coordinate(&f2, 4, &[0]).unwrap());
    let images: BTreeSet<_> = pts.iter().map(|p| tensor_power_embed(p, 2).unwrap()).collect();
    assert_eq!(images.len(), 3);
    assert!(images.iter().all(|i| (i.ambient_dim(), i.rank()) == (4, 1)));
}

#[test]
fn wedge_embedding_examples() {
    let f2 = Ring::prime_field(2).unwrap();
    let p = GrassmannPoint::coordinate(&f2, 4, &[0, 1]).unwrap();
    let coords: Vec<RingValue> = pluecker_coordinates(&p).unwrap().into_iter().map(|(_, v)| v).collect();
    assert_eq!(coords, vec![f2.one(), f2.zero(), f2.zero(), f2.zero(), f2.zero(), f2.zero()]);

    let full = GrassmannPoint::coordinate(&f2, 3, &[0, 1, 2]).unwrap();
    let w = wedge_embed(&full, 3).unwrap();
    assert_eq!((w.ambient_dim(), w.rank()), (1, 1));

    let pts = grassmannian_points(&f2, 4, 2).unwrap();
    let images: BTreeSet<_> = pts.iter().map(|p| wedge_embed(p, 2).unwrap()).collect();
    assert_eq!((pts.len(), images.len()), (35, 35));
    assert!(matches!(wedge_embed(&p, 3), Err(Error::PowerOutOfRange { .. })));
}

#[test]
fn sym_embedding_examples() {
    let f3 = Ring::prime_field(3).unwrap();
    let full = GrassmannPoint::coordinate(&f3, 2, &[0, 1]).unwrap();
    let s = sym_embed(&full, 3).unwrap();
    assert_eq!((s.ambient_dim(), s.rank()), (4, 4));

    let e1 = GrassmannPoint::coordinate(&f3, 2, &[0]).unwrap();
    // e₁² is the first sym basis vector, exponent vector (2, 0)
    assert_eq!(sym_embed(&e1, 2).unwrap(), GrassmannPoint::coordinate(&f3, 3, &[0]).unwrap());

    let d2 = Ring::dual_numbers(2).unwrap();
    let v1 = GrassmannPoint::coordinate(&d2, 2, &[0]).unwrap();
    let v2 = GrassmannPoint::from_matrix(&col(&d2, &[d2.one(), d2.epsilon().unwrap()])).unwrap();
    assert_ne!(v1, v2);
    assert_eq!(sym_embed(&v1, 2).unwrap(), sym_embed(&v2, 2).unwrap());
}

#[test]
fn power_one_is_the_identity_on_points() {
    for ring in [Ring::prime_field(2).unwrap(), Ring::prime_field(3).unwrap(), Ring::dual_numbers(2).unwrap()] {
        for (n, m) in [(2, 1), (3, 1), (3, 2)] {
            for p in grassmannian_points(&ring, n, m).unwrap() {
                for kind in [EmbeddingKind::Wedge, EmbeddingKind::Sym, EmbeddingKind::TensorPower] {
                    assert_eq!(embed(kind, &p, 1).unwrap(), p);
                }
            }
        }
    }
}

/// Enumerated points against distinct free spans of every matrix.
#[test]
fn enumeration_matches_brute_force_spans() {
    let cases = [
        (Ring::prime_field(2).unwrap(), 2, 1),
        (Ring::prime_field(2).unwrap(), 3, 2),
        (Ring::prime_field(2).unwrap(), 4, 2),
        (Ring::prime_field(3).unwrap(), 3, 1),
        (Ring::prime_field(3).unwrap(), 4, 2),
        (Ring::dual_numbers(2).unwrap(), 2, 1),
        (Ring::dual_numbers(2).unwrap(), 3, 1),
        (Ring::dual_numbers(2).unwrap(), 3, 2),
        (Ring::dual_numbers(3).unwrap(), 2, 1),
    ];
    for (ring, n, m) in cases {
        let pts = grassmannian_points(&ring, n, m).unwrap();
        let spans: BTreeSet<_> = pts.iter().map(|p| brute_span(p.basis())).collect();
        assert_eq!(spans.len(), pts.len(), "duplicates in Gr({n},{m}) over {ring}");
        assert_eq!(spans, brute_points(&ring, n, m), "Gr({n},{m}) over {ring}");
        assert_eq!(expected_point_count(&ring, n, m), Some(pts.len() as u64));
        if let Some(p) = ring.modulus().filter(|_| ring.is_field()) {
            assert_eq!(gaussian_oracle(n as u32, m as u32, p as u128), pts.len() as u128);
        }
    }
}

#[test]
fn every_point_is_in_normal_form_and_has_the_right_rank() {
    for ring in [Ring::prime_field(3).unwrap(), Ring::dual_numbers(2).unwrap()] {
        for p in grassmannian_points(&ring, 3, 2).unwrap() {
            assert_eq!(GrassmannPoint::from_matrix(p.basis()).unwrap(), p);
            for r in 1..=2 {
                let w = wedge_embed(&p, r).unwrap();
                assert_eq!(w.rank(), if r == 1 { 2 } else { 1 });
                let s = sym_embed(&p, r + 1).unwrap();
                assert_eq!(s.rank(), r + 2);
            }
        }
    }
}
