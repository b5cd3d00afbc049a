//! Exact checks of the determinant formulas for tensor, symmetric and
//! exterior powers:
//!
//! * `det(M₁ ⊗ … ⊗ M_r) = ∏ det(M_i)^{(∏_j n_j) / n_i}`
//! * `det(Sym^d M) = det(M)^{C(n+d−1, d−1)}`
//! * `det(∧^d M) = det(M)^{C(n−1, d−1)}`

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::powers::{compound, kronecker, sym_power};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{params, CheckReport, Expectation, Timer, Witness};
use crate::rings::{Ring, RingValue};

/// Generic variables allowed in a symbolic check unless explicitly lifted.
pub const SYMBOLIC_VARIABLE_LIMIT: usize = 9;

fn require_square(m: &Matrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare { rows: m.rows(), cols: m.cols() })
    }
}

fn conclude(
    name: &str,
    ring: &Ring,
    parameters: alloc::collections::BTreeMap<String, i64>,
    lhs: RingValue,
    rhs: RingValue,
    inputs: &[Matrix],
    timer: Timer,
) -> CheckReport {
    let found = if lhs == rhs {
        Vec::new()
    } else {
        alloc::vec![Witness::new(
            format!("lhs {} != rhs {}", ring.show(&lhs), ring.show(&rhs)),
            inputs.to_vec(),
        )]
    };
    CheckReport::conclude(name, ring.clone(), parameters, 1, found, Expectation::Holds)
        .with_elapsed(timer.elapsed())
}

/// Compares `det(M₁ ⊗ … ⊗ M_r)` with `∏ det(M_i)^{(∏_j n_j)/n_i}`.
pub fn check_det_tensor_identity(ms: &[Matrix]) -> Result<CheckReport> {
    let timer = Timer::start();
    let kron = kronecker(ms)?;
    for m in ms {
        require_square(m)?;
    }
    let ring = ms[0].ring();
    let total: u64 = ms.iter().map(|m| m.rows() as u64).product();
    let lhs = kron.determinant()?;
    let mut rhs = ring.one();
    for m in ms {
        let e = total / m.rows() as u64;
        rhs = ring.mul_unchecked(&rhs, &ring.pow_unchecked(&m.determinant()?, e));
    }
    let mut p = params([("factors", ms.len() as i64)]);
    for (i, m) in ms.iter().enumerate() {
        p.insert(format!("n{}", i + 1), m.rows() as i64);
    }
    Ok(conclude("det-tensor-identity", ring, p, lhs, rhs, ms, timer))
}

/// Compares `det(Sym^d M)` with `det(M)^{C(n+d−1, d−1)}`.
pub fn check_det_sym_identity(m: &Matrix, d: usize) -> Result<CheckReport> {
    let timer = Timer::start();
    require_square(m)?;
    let n = m.rows() as u64;
    let lhs = sym_power(m, d)?.determinant()?;
    let e = binomial(n + d as u64 - 1, d as u64 - 1);
    let rhs = m.ring().pow_unchecked(&m.determinant()?, e);
    let p = params([("n", n as i64), ("d", d as i64)]);
    Ok(conclude("det-sym-identity", m.ring(), p, lhs, rhs, core::slice::from_ref(m), timer))
}

/// Compares `det(∧^d M)` with `det(M)^{C(n−1, d−1)}`.
pub fn check_det_wedge_identity(m: &Matrix, d: usize) -> Result<CheckReport> {
    let timer = Timer::start();
    require_square(m)?;
    let n = m.rows() as u64;
    let lhs = compound(m, d)?.determinant()?;
    let e = binomial(n - 1, d as u64 - 1);
    let rhs = m.ring().pow_unchecked(&m.determinant()?, e);
    let p = params([("n", n as i64), ("d", d as i64)]);
    Ok(conclude("det-wedge-identity", m.ring(), p, lhs, rhs, core::slice::from_ref(m), timer))
}

/// Generic square matrices `N_i = (X_{ijk})` of the given sizes over
/// `ℤ[X_{ijk}]`. Variables are named `x{i}_{j}{k}` (1-based).
pub fn generic_matrices(sizes: &[usize]) -> Result<(Ring, Vec<Matrix>)> {
    generic_matrices_with_limit(sizes, SYMBOLIC_VARIABLE_LIMIT)
}

/// As [`generic_matrices`], with an explicit cap on the number of variables.
pub fn generic_matrices_with_limit(sizes: &[usize], limit: usize) -> Result<(Ring, Vec<Matrix>)> {
    let count: usize = sizes.iter().map(|n| n * n).sum();
    if count > limit {
        return Err(Error::InvalidParameters(format!(
            "{count} generic variables exceed the limit of {limit}"
        )));
    }
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidParameters("generic matrices need positive sizes".into()));
    }
    let mut names = Vec::with_capacity(count);
    for (i, &n) in sizes.iter().enumerate() {
        for j in 0..n {
            for k in 0..n {
                names.push(format!("x{}_{}{}", i + 1, j + 1, k + 1));
            }
        }
    }
    let ring = Ring::polynomial(names)?;
    let mut next = 0;
    let mut out = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            entries.push(ring.var(next)?);
            next += 1;
        }
        out.push(Matrix::new(ring.clone(), n, n, entries)?);
    }
    Ok((ring, out))
}
