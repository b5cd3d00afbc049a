//! JSON encodings of rings, values, matrices, points and reports.
//!
//! ```text
//! ring    {"kind":"PrimeField","p":5}  {"kind":"PolyOverInt","variables":["x","y"]}
//! value   3 | "123456789012345678901234" | "-2/3" | [a, b] (a + b e) | [[coeff, [exps]], ...]
//! matrix  {"ring":..., "rows":2, "cols":2, "entries":[[...], [...]]}
//! point   {"ring":..., "n":4, "m":2, "basis":matrix, "labels":[[0,1], ...]}
//! ```

use std::collections::BTreeMap;
use std::time::Duration;

use grassembed_core::multilinear::BasisLabel;
use grassembed_core::rings::{Monomial, Poly};
use grassembed_core::{CheckReport, GrassmannPoint, Matrix, Ring, RingKind, RingValue, Verdict, Witness};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Algebra(#[from] grassembed_core::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn schema<T>(msg: impl Into<String>) -> Result<T> {
    Err(FormatError::Schema(msg.into()))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| FormatError::Schema(format!("missing field \"{key}\"")))
}

fn usize_field(obj: &Value, key: &str) -> Result<usize> {
    field(obj, key)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| FormatError::Schema(format!("\"{key}\" must be a nonnegative integer")))
}

fn bigint_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => match (num.as_i64(), num.as_u64()) {
            (Some(i), _) => Ok(BigInt::from(i)),
            (_, Some(u)) => Ok(BigInt::from(u)),
            _ => schema(format!("{num} is not an integer")),
        },
        Value::String(s) => s.trim().parse().map_err(|_| FormatError::Schema(format!("\"{s}\" is not an integer"))),
        other => schema(format!("expected an integer, got {other}")),
    }
}

pub fn ring_to_json(ring: &Ring) -> Value {
    match ring.kind() {
        RingKind::Integer => json!({"kind": "Integer"}),
        RingKind::Rational => json!({"kind": "Rational"}),
        RingKind::PrimeField { p } => json!({"kind": "PrimeField", "p": p}),
        RingKind::DualNumbers { p } => json!({"kind": "DualNumbers", "p": p}),
        RingKind::PolyOverInt { variables } => json!({"kind": "PolyOverInt", "variables": variables.to_vec()}),
    }
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| FormatError::Schema("\"kind\" must be a string".into()))?;
    let p = || field(v, "p")?.as_u64().ok_or_else(|| FormatError::Schema("\"p\" must be a positive integer".into()));
    Ok(match kind {
        "Integer" => Ring::integer(),
        "Rational" => Ring::rational(),
        "PrimeField" => Ring::prime_field(p()?)?,
        "DualNumbers" => Ring::dual_numbers(p()?)?,
        "PolyOverInt" => {
            let vars = field(v, "variables")?
                .as_array()
                .ok_or_else(|| FormatError::Schema("\"variables\" must be a list".into()))?
                .iter()
                .map(|x| x.as_str().map(String::from).ok_or_else(|| FormatError::Schema("variable names must be strings".into())))
                .collect::<Result<Vec<_>>>()?;
            Ring::polynomial(vars)?
        }
        other => return schema(format!("unknown ring kind \"{other}\"")),
    })
}

pub fn value_to_json(value: &RingValue) -> Value {
    match value {
        RingValue::Int(n) => bigint_to_json(n),
        RingValue::Rat(q) if q.denom().is_one() => bigint_to_json(q.numer()),
        RingValue::Rat(q) => json!(format!("{}/{}", q.numer(), q.denom())),
        RingValue::Residue(a) => json!(a),
        RingValue::Dual(a, b) => json!([a, b]),
        RingValue::Poly(f) => Value::Array(
            f.terms()
                .map(|(m, c)| json!([bigint_to_json(c), m.exponents().to_vec()]))
                .collect(),
        ),
    }
}

/// Parses a value and maps it into `ring`. Integers are accepted for every
/// ring and reduced through `ℤ → ring`.
pub fn value_from_json(ring: &Ring, v: &Value) -> Result<RingValue> {
    match (ring.kind(), v) {
        (RingKind::Rational, Value::String(s)) if s.contains('/') => {
            let (a, b) = s.split_once('/').unwrap_or_default();
            let num = bigint_from_json(&json!(a))?;
            let den = bigint_from_json(&json!(b))?;
            let inv = ring.inverse(&ring.from_bigint(&den)).map_err(|_| FormatError::Schema(format!("zero denominator in \"{s}\"")))?;
            Ok(ring.mul(&ring.from_bigint(&num), &inv)?)
        }
        (RingKind::DualNumbers { .. }, Value::Array(parts)) => {
            let [a, b] = parts.as_slice() else {
                return schema("a dual number is a pair [a, b]");
            };
            let eps = ring.epsilon()?;
            let b = ring.mul(&ring.from_bigint(&bigint_from_json(b)?), &eps)?;
            Ok(ring.add(&ring.from_bigint(&bigint_from_json(a)?), &b)?)
        }
        (RingKind::PolyOverInt { variables }, Value::Array(terms)) => {
            let mut out = Vec::with_capacity(terms.len());
            for t in terms {
                let Some([c, e]) = t.as_array().map(Vec::as_slice) else {
                    return schema("a polynomial term is [coeff, [exponents]]");
                };
                let exps = e
                    .as_array()
                    .filter(|e| e.len() == variables.len())
                    .ok_or_else(|| FormatError::Schema(format!("a monomial needs {} exponents", variables.len())))?
                    .iter()
                    .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()))
                    .collect::<Option<Vec<u32>>>()
                    .ok_or_else(|| FormatError::Schema("exponents must be small nonnegative integers".into()))?;
                out.push((Monomial::new(exps), bigint_from_json(c)?));
            }
            Ok(RingValue::Poly(Poly::from_terms(out)))
        }
        (_, Value::Number(_) | Value::String(_)) => Ok(ring.from_bigint(&bigint_from_json(v)?)),
        (_, other) => schema(format!("cannot read {other} as an element of {ring}")),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let entries: Vec<Value> = (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(value_to_json).collect())).collect();
    json!({"ring": ring_to_json(m.ring()), "rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let ring = ring_from_json(field(v, "ring")?)?;
    matrix_body_from_json(&ring, v)
}

fn matrix_body_from_json(ring: &Ring, v: &Value) -> Result<Matrix> {
    let rows = usize_field(v, "rows")?;
    let cols = usize_field(v, "cols")?;
    let grid = field(v, "entries")?.as_array().ok_or_else(|| FormatError::Schema("\"entries\" must be a list of rows".into()))?;
    if grid.len() != rows {
        return schema(format!("\"rows\" is {rows} but {} rows were given", grid.len()));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in grid {
        let row = row.as_array().filter(|r| r.len() == cols).ok_or_else(|| FormatError::Schema(format!("every row needs {cols} entries")))?;
        for x in row {
            entries.push(value_from_json(ring, x)?);
        }
    }
    if rows == 0 || cols == 0 {
        return schema("matrices need at least one row and one column");
    }
    Ok(Matrix::new(ring.clone(), rows, cols, entries)?)
}

pub fn label_to_json(label: &BasisLabel) -> Value {
    json!(label.as_list())
}

/// Point JSON. `labels`, when given, name the rows of the basis.
pub fn point_to_json(p: &GrassmannPoint, labels: Option<&[BasisLabel]>) -> Value {
    let mut obj = json!({
        "ring": ring_to_json(p.ring()),
        "n": p.ambient_dim(),
        "m": p.rank(),
        "basis": matrix_to_json(p.basis()),
    });
    if let Some(labels) = labels {
        obj["labels"] = Value::Array(labels.iter().map(label_to_json).collect());
    }
    obj
}

/// Reads a point; the basis may be any spanning matrix of the right
/// shape and is brought into normal form. A missing `"ring"` inside the
/// basis defaults to the point's ring.
pub fn point_from_json(v: &Value) -> Result<GrassmannPoint> {
    let ring = ring_from_json(field(v, "ring")?)?;
    let n = usize_field(v, "n")?;
    let m = usize_field(v, "m")?;
    let basis_json = field(v, "basis")?;
    let basis = match basis_json.get("ring") {
        Some(r) if ring_from_json(r)? != ring => return schema("basis ring differs from the point's ring"),
        _ => matrix_body_from_json(&ring, basis_json)?,
    };
    Ok(GrassmannPoint::new(&ring, n, m, &basis)?)
}

pub fn report_to_json(r: &CheckReport) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|w| json!({"description": w.description, "matrices": w.matrices.iter().map(matrix_to_json).collect::<Vec<_>>()}))
        .collect();
    json!({
        "name": r.name,
        "ring": ring_to_json(&r.ring),
        "parameters": r.parameters,
        "cases_checked": r.cases_checked,
        "failures": failures,
        "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
        "verdict": r.verdict.as_str(),
    })
}

pub fn report_from_json(v: &Value) -> Result<CheckReport> {
    let name = field(v, "name")?.as_str().ok_or_else(|| FormatError::Schema("\"name\" must be a string".into()))?;
    let ring = ring_from_json(field(v, "ring")?)?;
    let mut parameters = BTreeMap::new();
    for (k, x) in field(v, "parameters")?.as_object().ok_or_else(|| FormatError::Schema("\"parameters\" must be an object".into()))? {
        let x = x.as_i64().ok_or_else(|| FormatError::Schema(format!("parameter {k} must be an integer")))?;
        parameters.insert(k.clone(), x);
    }
    let cases_checked = field(v, "cases_checked")?.as_u64().ok_or_else(|| FormatError::Schema("\"cases_checked\" must be a count".into()))?;
    let mut failures = Vec::new();
    for w in field(v, "failures")?.as_array().ok_or_else(|| FormatError::Schema("\"failures\" must be a list".into()))? {
        let description = field(w, "description")?.as_str().unwrap_or_default().to_string();
        let matrices = field(w, "matrices")?
            .as_array()
            .ok_or_else(|| FormatError::Schema("witness matrices must be a list".into()))?
            .iter()
            .map(matrix_from_json)
            .collect::<Result<Vec<_>>>()?;
        failures.push(Witness { description, matrices });
    }
    let elapsed_ms = field(v, "elapsed_ms")?.as_f64().filter(|t| *t >= 0.0).ok_or_else(|| FormatError::Schema("\"elapsed_ms\" must be a nonnegative number".into()))?;
    let verdict = field(v, "verdict")?
        .as_str()
        .and_then(Verdict::parse)
        .ok_or_else(|| FormatError::Schema("unknown verdict".into()))?;
    Ok(CheckReport {
        name: name.to_string(),
        ring,
        parameters,
        cases_checked,
        failures,
        elapsed: Duration::from_secs_f64(elapsed_ms / 1e3),
        verdict,
    })
}

/// Parses a document holding one point or a list of points.
pub fn points_from_str(text: &str) -> Result<Vec<GrassmannPoint>> {
    let v: Value = serde_json::from_str(text)?;
    match &v {
        Value::Array(items) => items.iter().map(point_from_json).collect(),
        _ => Ok(vec![point_from_json(&v)?]),
    }
}

/// Parses a document holding one matrix or a list of matrices.
pub fn matrices_from_str(text: &str) -> Result<Vec<Matrix>> {
    let v: Value = serde_json::from_str(text)?;
    match &v {
        Value::Array(items) => items.iter().map(matrix_from_json).collect(),
        _ => Ok(vec![matrix_from_json(&v)?]),
    }
}

