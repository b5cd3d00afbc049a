//! Test-side oracles. They use only ring arithmetic and brute force, never
//! the library's elimination, power or enumeration routines.
#![allow(dead_code)]

use std::collections::BTreeSet;

use grassembed_core::rings::{Monomial, Poly};
use grassembed_core::{Matrix, Ring, RingValue};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub fn add(r: &Ring, a: &RingValue, b: &RingValue) -> RingValue {
    r.add(a, b).unwrap()
}

pub fn mul(r: &Ring, a: &RingValue, b: &RingValue) -> RingValue {
    r.mul(a, b).unwrap()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &Matrix) -> RingValue {
    let r = m.ring();
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = r.zero();
    for j in 0..n {
        let rows: Vec<Vec<RingValue>> = (1..n)
            .map(|i| (0..n).filter(|&k| k != j).map(|k| m.get(i, k).clone()).collect())
            .collect();
        let sub = Matrix::from_rows(r.clone(), rows).unwrap();
        let term = mul(r, m.get(0, j), &cofactor_det(&sub));
        acc = if j % 2 == 0 { add(r, &acc, &term) } else { r.sub(&acc, &term).unwrap() };
    }
    acc
}

/// Strictly increasing `k`-subsets of `0..n` in lex order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>());
        }
    }
    out.sort();
    out
}

/// Non-decreasing `k`-tuples of `0..n` in lex order.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn sub_by(m: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
    let r = m.ring();
    Matrix::from_rows(
        r.clone(),
        rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect(),
    )
    .unwrap()
}

pub fn brute_compound(m: &Matrix, k: usize) -> Matrix {
    let rs = subsets(m.rows(), k);
    let cs = subsets(m.cols(), k);
    Matrix::from_rows(
        m.ring().clone(),
        rs.iter().map(|i| cs.iter().map(|j| cofactor_det(&sub_by(m, i, j))).collect()).collect(),
    )
    .unwrap()
}

/// Entry `(I, J)`: coefficient of `x^I` in `∏_k (Σ_i m[i][J_k] x_i)`,
/// summed over all row tuples whose multiset is `I`.
pub fn brute_sym_power(m: &Matrix, k: usize) -> Matrix {
    let r = m.ring();
    let (n, c) = (m.rows(), m.cols());
    let rows = multisets(n, k);
    let cols = multisets(c, k);
    let mut tuples = vec![Vec::new()];
    for _ in 0..k {
        tuples = tuples
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    let mut out = vec![vec![r.zero(); cols.len()]; rows.len()];
    for (b, jj) in cols.iter().enumerate() {
        for t in &tuples {
            let mut key = t.clone();
            key.sort();
            let a = rows.binary_search(&key).unwrap();
            let mut prod = r.one();
            for (&i, &j) in t.iter().zip(jj) {
                prod = mul(r, &prod, m.get(i, j));
            }
            out[a][b] = add(r, &out[a][b], &prod);
        }
    }
    Matrix::from_rows(r.clone(), out).unwrap()
}

pub fn brute_kron(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.ring();
    let mut rows = Vec::new();
    for i in 0..a.rows() {
        for k in 0..b.rows() {
            let mut row = Vec::new();
            for j in 0..a.cols() {
                for l in 0..b.cols() {
                    row.push(mul(r, a.get(i, j), b.get(k, l)));
                }
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(r.clone(), rows).unwrap()
}

/// Every element of the column span, listed by trying all coefficient
/// vectors.
pub fn brute_span(m: &Matrix) -> BTreeSet<Vec<RingValue>> {
    let r = m.ring();
    let elems: Vec<RingValue> = r.elements().unwrap().collect();
    let k = m.cols();
    let mut out = BTreeSet::new();
    let mut digits = vec![0usize; k];
    loop {
        let v: Vec<RingValue> = (0..m.rows())
            .map(|i| {
                let mut acc = r.zero();
                for (j, &d) in digits.iter().enumerate() {
                    acc = add(r, &acc, &mul(r, &elems[d], m.get(i, j)));
                }
                acc
            })
            .collect();
        out.insert(v);
        let mut t = 0;
        while t < k {
            digits[t] += 1;
            if digits[t] < elems.len() {
                break;
            }
            digits[t] = 0;
            t += 1;
        }
        if t == k {
            return out;
        }
    }
}

/// Every `rows × cols` matrix over a finite ring.
pub fn every_matrix(ring: &Ring, rows: usize, cols: usize) -> Vec<Matrix> {
    let elems: Vec<RingValue> = ring.elements().unwrap().collect();
    let mut out = Vec::new();
    let len = rows * cols;
    let mut digits = vec![0usize; len];
    loop {
        let entries = digits.iter().map(|&d| elems[d].clone()).collect();
        out.push(Matrix::new(ring.clone(), rows, cols, entries).unwrap());
        let mut t = 0;
        while t < len {
            digits[t] += 1;
            if digits[t] < elems.len() {
                break;
            }
            digits[t] = 0;
            t += 1;
        }
        if t == len {
            return out;
        }
    }
}

/// Distinct spans of `n × m` matrices whose span has `|R|^m` elements,
/// i.e. is free of rank `m` (over `F_p[ε]` free submodules are summands).
pub fn brute_points(ring: &Ring, n: usize, m: usize) -> BTreeSet<BTreeSet<Vec<RingValue>>> {
    let q = ring.size().unwrap() as usize;
    every_matrix(ring, n, m)
        .iter()
        .map(brute_span)
        .filter(|s| s.len() == q.pow(m as u32))
        .collect()
}

/// `|Gr(n, m)(F_q)|` as ordered bases of `m`-subspaces over ordered bases
/// of `F_q^m`.
pub fn gaussian_oracle(n: u32, m: u32, q: u128) -> u128 {
    let num: u128 = (0..m).map(|i| q.pow(n) - q.pow(i)).product();
    let den: u128 = (0..m).map(|i| q.pow(m) - q.pow(i)).product();
    num / den
}

pub fn rings() -> Vec<Ring> {
    vec![
        Ring::integer(),
        Ring::rational(),
        Ring::prime_field(2).unwrap(),
        Ring::prime_field(5).unwrap(),
        Ring::prime_field(4_294_967_291).unwrap(),
        Ring::dual_numbers(2).unwrap(),
        Ring::dual_numbers(3).unwrap(),
        Ring::dual_numbers(4_294_967_291).unwrap(),
        Ring::polynomial(["x", "y"]).unwrap(),
    ]
}

pub fn ring_strategy() -> impl Strategy<Value = Ring> {
    prop::sample::select(rings())
}

pub fn value_strategy(ring: &Ring) -> BoxedStrategy<RingValue> {
    use grassembed_core::RingKind;
    match ring.kind().clone() {
        RingKind::Integer => prop_oneof![
            (-20i64..20).prop_map(|v| RingValue::Int(BigInt::from(v))),
            any::<i128>().prop_map(|v| RingValue::Int(BigInt::from(v))),
        ]
        .boxed(),
        RingKind::Rational => (any::<i64>(), 1i64..1000, any::<bool>())
            .prop_map(|(a, b, neg)| {
                let d = if neg { -b } else { b };
                RingValue::Rat(BigRational::new(a.into(), d.into()))
            })
            .boxed(),
        RingKind::PrimeField { p } => (0..p).prop_map(RingValue::Residue).boxed(),
        RingKind::DualNumbers { p } => (0..p, 0..p).prop_map(|(a, b)| RingValue::Dual(a, b)).boxed(),
        RingKind::PolyOverInt { variables } => {
            let k = variables.len();
            prop::collection::vec((-6i64..6, prop::collection::vec(0u32..3, k)), 0..5)
                .prop_map(|terms| {
                    RingValue::Poly(Poly::from_terms(
                        terms.into_iter().map(|(c, e)| (Monomial::new(e), BigInt::from(c))),
                    ))
                })
                .boxed()
        }
    }
}

pub fn matrix_strategy(ring: Ring, rows: usize, cols: usize) -> BoxedStrategy<Matrix> {
    prop::collection::vec(value_strategy(&ring), rows * cols)
        .prop_map(move |e| Matrix::new(ring.clone(), rows, cols, e).unwrap())
        .boxed()
}

pub fn ring_and_square(max: usize) -> impl Strategy<Value = (Ring, Matrix)> {
    (ring_strategy(), 1..=max).prop_flat_map(|(r, n)| (Just(r.clone()), matrix_strategy(r, n, n)))
}
