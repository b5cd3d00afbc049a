//! A matrix is invertible iff its tensor, exterior or symmetric power is.
//!
//! The base matrix is tested through its determinant, the power matrix
//! through column elimination, so the two sides are computed independently.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::par_map;
use super::random::{all_matrices, random_matrix};
use crate::error::{Error, Result};
use crate::linalg::{column_span_normal_form, Matrix};
use crate::multilinear::{compound, kronecker, sym_power};
use crate::report::{params, CheckReport, Expectation, Timer, Witness};
use crate::rings::Ring;

/// Invertibility of a square matrix over a field or dual numbers by
/// elimination.
fn eliminates_to_identity(m: &Matrix) -> Result<bool> {
    match column_span_normal_form(m) {
        Ok(_) => Ok(true),
        Err(Error::NotFree) => Ok(false),
        Err(e) => Err(e),
    }
}

fn require_local_finite(ring: &Ring) -> Result<()> {
    if ring.size().is_none() {
        return Err(Error::InfiniteRing);
    }
    if !ring.is_local() {
        return Err(Error::UnsupportedRing("a field or dual numbers"));
    }
    Ok(())
}

fn mismatch(what: &str, base: bool, power: bool, inputs: Vec<Matrix>) -> Witness {
    Witness::new(format!("{what}: base invertible = {base}, power invertible = {power}"), inputs)
}

/// `M₁ ⊗ M₂` invertible iff both factors are, over all pairs of
/// `n₁ × n₁` and `n₂ × n₂` matrices.
pub fn verify_tensor_invertibility(ring: &Ring, n1: usize, n2: usize) -> Result<CheckReport> {
    let timer = Timer::start();
    require_local_finite(ring)?;
    let left = all_matrices(ring, n1, n1)?;
    let right = all_matrices(ring, n2, n2)?;
    let right_inv = right.iter().map(Matrix::is_invertible).collect::<Result<Vec<_>>>()?;
    let rows = par_map(&left, |a| -> Result<Vec<Witness>> {
        let a_inv = a.is_invertible()?;
        let mut found = Vec::new();
        for (b, &b_inv) in right.iter().zip(&right_inv) {
            let power = eliminates_to_identity(&kronecker(&[a.clone(), b.clone()])?)?;
            if power != (a_inv && b_inv) {
                found.push(mismatch("kronecker", a_inv && b_inv, power, alloc::vec![a.clone(), b.clone()]));
            }
        }
        Ok(found)
    });
    let mut found = Vec::new();
    for r in rows {
        found.extend(r?);
    }
    let p = params([("n1", n1 as i64), ("n2", n2 as i64)]);
    let cases = (left.len() * right.len()) as u64;
    Ok(CheckReport::conclude("tensor-invertibility", ring.clone(), p, cases, found, Expectation::Holds)
        .with_elapsed(timer.elapsed()))
}

/// `∧^d M` invertible iff `M` is, over all `n × n` matrices and all
/// `1 ≤ d ≤ n`.
pub fn verify_wedge_invertibility(ring: &Ring, n: usize) -> Result<CheckReport> {
    let timer = Timer::start();
    require_local_finite(ring)?;
    let all = all_matrices(ring, n, n)?;
    let rows = par_map(&all, |m| -> Result<Vec<Witness>> {
        let base = m.is_invertible()?;
        let mut found = Vec::new();
        for d in 1..=n {
            let power = eliminates_to_identity(&compound(m, d)?)?;
            if power != base {
                found.push(mismatch(&format!("wedge^{d}"), base, power, alloc::vec![m.clone()]));
            }
        }
        Ok(found)
    });
    let mut found = Vec::new();
    for r in rows {
        found.extend(r?);
    }
    let cases = (all.len() * n) as u64;
    Ok(CheckReport::conclude("wedge-invertibility", ring.clone(), params([("n", n as i64)]), cases, found, Expectation::Holds)
        .with_elapsed(timer.elapsed()))
}

/// `Sym^d M` invertible iff `M` is, for `1 ≤ d ≤ max_degree`. Exhaustive
/// over all `n × n` matrices when `samples` is `None`, otherwise over that
/// many seeded random matrices.
pub fn verify_sym_invertibility(
    ring: &Ring,
    n: usize,
    max_degree: usize,
    samples: Option<(usize, u64)>,
) -> Result<CheckReport> {
    let timer = Timer::start();
    require_local_finite(ring)?;
    if max_degree == 0 {
        return Err(Error::PowerOutOfRange { power: 0, reason: "need d >= 1" });
    }
    let inputs = match samples {
        None => all_matrices(ring, n, n)?,
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v = Vec::with_capacity(count);
            for _ in 0..count {
                // rejection-free mix: a quarter of the samples get a repeated row
                let mut m = random_matrix(ring, n, n, &mut rng)?;
                if n > 1 && rng.gen_bool(0.25) {
                    let mut rows = m.row_vecs();
                    rows[n - 1] = rows[0].clone();
                    m = Matrix::from_rows(ring.clone(), rows)?;
                }
                v.push(m);
            }
            v
        }
    };
    let rows = par_map(&inputs, |m| -> Result<Vec<Witness>> {
        let base = m.is_invertible()?;
        let mut found = Vec::new();
        for d in 1..=max_degree {
            let power = eliminates_to_identity(&sym_power(m, d)?)?;
            if power != base {
                found.push(mismatch(&format!("sym^{d}"), base, power, alloc::vec![m.clone()]));
            }
        }
        Ok(found)
    });
    let mut found = Vec::new();
    for r in rows {
        found.extend(r?);
    }
    let mut p = params([("n", n as i64), ("max_degree", max_degree as i64)]);
    if let Some((count, seed)) = samples {
        p.insert("samples".into(), count as i64);
        p.insert("seed".into(), seed as i64);
    }
    let cases = (inputs.len() * max_degree) as u64;
    Ok(CheckReport::conclude("sym-invertibility", ring.clone(), p, cases, found, Expectation::Holds)
        .with_elapsed(timer.elapsed()))
}
