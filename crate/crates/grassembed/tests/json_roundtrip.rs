use std::collections::BTreeMap;
use std::time::Duration;

use grassembed::json::*;
use grassembed_core::grassmann::{target_labels, wedge_embed, EmbeddingKind};
use grassembed_core::rings::{Monomial, Poly};
use grassembed_core::verify::grassmannian_points;
use grassembed_core::{CheckReport, Matrix, Ring, RingKind, RingValue, Verdict, Witness};
use num_bigint::BigInt;
use proptest::prelude::*;
use serde_json::json;

fn ring_strategy() -> impl Strategy<Value = Ring> {
    prop::sample::select(vec![
        Ring::integer(),
        Ring::rational(),
        Ring::prime_field(7).unwrap(),
        Ring::prime_field(4_294_967_291).unwrap(),
        Ring::dual_numbers(3).unwrap(),
        Ring::polynomial(["x", "y", "z"]).unwrap(),
    ])
}

fn value_strategy(ring: &Ring) -> BoxedStrategy<RingValue> {
    let r = ring.clone();
    match ring.kind().clone() {
        RingKind::Integer => any::<i128>().prop_map(|v| RingValue::Int(BigInt::from(v))).boxed(),
        RingKind::Rational => (any::<i64>(), 1i64..10_000)
            .prop_map(move |(a, b)| {
                r.mul(&r.from_i64(a), &r.inverse(&r.from_i64(b)).unwrap()).unwrap()
            })
            .boxed(),
        RingKind::PrimeField { p } => (0..p).prop_map(RingValue::Residue).boxed(),
        RingKind::DualNumbers { p } => (0..p, 0..p).prop_map(|(a, b)| RingValue::Dual(a, b)).boxed(),
        RingKind::PolyOverInt { variables } => {
            let k = variables.len();
            prop::collection::vec((any::<i128>(), prop::collection::vec(0u32..4, k)), 0..4)
                .prop_map(|t| {
                    RingValue::Poly(Poly::from_terms(t.into_iter().map(|(c, e)| (Monomial::new(e), BigInt::from(c)))))
                })
                .boxed()
        }
    }
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (ring_strategy(), 1usize..4, 1usize..4).prop_flat_map(|(r, a, b)| {
        prop::collection::vec(value_strategy(&r), a * b)
            .prop_map(move |e| Matrix::new(r.clone(), a, b, e).unwrap())
    })
}

proptest! {
    #[test]
    fn values_round_trip((r, v) in ring_strategy().prop_flat_map(|r| (Just(r.clone()), value_strategy(&r)))) {
        let text = value_to_json(&v).to_string();
        let back = value_from_json(&r, &serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn matrices_round_trip(m in matrix_strategy()) {
        let text = matrix_to_json(&m).to_string();
        prop_assert_eq!(matrix_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), m);
    }

    #[test]
    fn reports_round_trip(m in matrix_strategy(), cases in any::<u32>(), ms in 0u32..100_000, k in any::<i32>()) {
        let mut parameters = BTreeMap::new();
        parameters.insert("k".to_string(), k as i64);
        let report = CheckReport {
            name: "demo".into(),
            ring: m.ring().clone(),
            parameters,
            cases_checked: cases as u64,
            failures: vec![Witness::new("w", vec![m.clone(), m])],
            elapsed: Duration::from_micros(ms as u64),
            verdict: Verdict::Fail,
        };
        let back = report_from_json(&serde_json::from_str(&report_to_json(&report).to_string()).unwrap()).unwrap();
        prop_assert_eq!(&back.failures, &report.failures);
        prop_assert_eq!(&back.parameters, &report.parameters);
        prop_assert_eq!((back.verdict, back.cases_checked, &back.ring, &back.name), (report.verdict, report.cases_checked, &report.ring, &report.name));
        let drift = back.elapsed.as_secs_f64() - report.elapsed.as_secs_f64();
        prop_assert!(drift.abs() < 1e-9);
    }
}

#[test]
fn every_enumerated_point_round_trips() {
    for ring in [Ring::prime_field(3).unwrap(), Ring::dual_numbers(2).unwrap()] {
        for p in grassmannian_points(&ring, 3, 2).unwrap() {
            let v = point_to_json(&p, None);
            assert_eq!(point_from_json(&serde_json::from_str(&v.to_string()).unwrap()).unwrap(), p);
            let img = wedge_embed(&p, 2).unwrap();
            let labels = target_labels(EmbeddingKind::Wedge, &[3], 2);
            let v = point_to_json(&img, Some(&labels));
            assert_eq!(v["labels"], json!([[0, 1], [0, 2], [1, 2]]));
            assert_eq!(point_from_json(&v).unwrap(), img);
        }
    }
}

#[test]
fn documented_encodings() {
    assert_eq!(ring_to_json(&Ring::prime_field(5).unwrap()), json!({"kind": "PrimeField", "p": 5}));
    assert_eq!(value_to_json(&RingValue::Residue(3)), json!(3));
    assert_eq!(value_to_json(&RingValue::Dual(1, 1)), json!([1, 1]));
    let zx = Ring::polynomial(["x", "y"]).unwrap();
    let f = zx.sub(&zx.var(0).unwrap(), &zx.from_i64(2)).unwrap();
    assert_eq!(value_to_json(&f), json!([[-2, [0, 0]], [1, [1, 0]]]));
    let q = Ring::rational();
    assert_eq!(value_from_json(&q, &json!("-4/6")).unwrap(), q.mul(&q.from_i64(-2), &q.inverse(&q.from_i64(3)).unwrap()).unwrap());
    let big = BigInt::from(10).pow(30);
    assert_eq!(value_to_json(&RingValue::Int(big.clone())), json!(big.to_string()));
}

#[test]
fn malformed_inputs_are_rejected() {
    let f5 = Ring::prime_field(5).unwrap();
    assert!(ring_from_json(&json!({"kind": "PrimeField", "p": 6})).is_err());
    assert!(ring_from_json(&json!({"kind": "Octonions"})).is_err());
    assert!(value_from_json(&f5, &json!([1, 2])).is_err());
    assert!(value_from_json(&Ring::rational(), &json!("1/0")).is_err());
    assert!(matrix_from_json(&json!({"ring": {"kind": "Integer"}, "rows": 2, "cols": 1, "entries": [[1]]})).is_err());
    assert!(matrix_from_json(&json!({"ring": {"kind": "Integer"}, "rows": 1, "cols": 2, "entries": [[1]]})).is_err());
    // rank-deficient basis
    let bad = json!({"ring": {"kind": "PrimeField", "p": 5}, "n": 2, "m": 2, "basis": {"rows": 2, "cols": 2, "entries": [[1, 2], [2, 4]]}});
    assert!(point_from_json(&bad).is_err());
    assert!(points_from_str("{not json").is_err());
}
