use alloc::vec::Vec;

use super::Matrix;
use crate::error::{Error, Result};
use crate::rings::RingValue;

/// Bareiss fraction-free elimination. Every division is exact, so this is
/// valid over any integral domain; it refuses rings with zero divisors.
pub fn determinant_fraction_free(m: &Matrix) -> Result<RingValue> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let ring = m.ring();
    if !ring.is_integral_domain() {
        return Err(Error::UnsupportedRing("an integral domain"));
    }
    let n = m.rows();
    let mut a = m.row_vecs();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n.saturating_sub(1) {
        if ring.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub_unchecked(
                    &ring.mul_unchecked(&a[i][j], &a[k][k]),
                    &ring.mul_unchecked(&a[i][k], &a[k][j]),
                );
                a[i][j] = ring.div_exact_unchecked(&t, &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { ring.neg_unchecked(&det) } else { det })
}

/// Division-free determinant by Bird's iteration, `O(n⁴)` ring operations.
///
/// Starting from `X = A`, repeat `n − 1` times `X ← μ(X)·A`, where `μ(X)`
/// keeps the strict upper triangle of `X`, zeroes the lower triangle and
/// replaces the diagonal entry `i` by `−(X_{i+1,i+1} + … + X_{n,n})`. Then
/// `det A = (−1)^{n−1} X_{1,1}`. Uses only ring addition and multiplication,
/// so it is valid over every commutative ring.
pub fn determinant_division_free(m: &Matrix) -> Result<RingValue> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let ring = m.ring();
    let n = m.rows();
    let a = m.row_vecs();
    let mut x = a.clone();
    let mut mu: Vec<Vec<RingValue>> = alloc::vec![alloc::vec![ring.zero(); n]; n];
    for _ in 1..n {
        let mut suffix = ring.zero();
        for i in (0..n).rev() {
            mu[i][i] = ring.neg_unchecked(&suffix);
            suffix = ring.add_unchecked(&suffix, &x[i][i]);
            for j in i + 1..n {
                mu[i][j] = x[i][j].clone();
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut acc = ring.zero();
                for k in i..n {
                    if ring.is_zero(&mu[i][k]) {
                        continue;
                    }
                    acc = ring.add_unchecked(&acc, &ring.mul_unchecked(&mu[i][k], &a[k][j]));
                }
                x[i][j] = acc;
            }
        }
    }
    let top = x[0][0].clone();
    Ok(if n.is_multiple_of(2) { ring.neg_unchecked(&top) } else { top })
}
