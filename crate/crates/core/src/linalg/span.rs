//! Canonical bases of column spans over local rings.
//!
//! A column span that is free of rank `k` and a direct summand has a unit
//! `k × k` minor. The set of row sets carrying a unit minor is unchanged by
//! right multiplication with an invertible matrix, so the lexicographically
//! first such set `I` is an invariant of the span, and `A · (A_I)⁻¹` is a
//! canonical basis: it is the identity on the rows `I`.

use alloc::vec::Vec;

use super::Matrix;
use crate::combinatorics::combinations;
use crate::error::{Error, Result};

/// The canonical basis of the column span of `m`.
///
/// Over a field this is the reduced column echelon form. The ring must be a
/// field or dual numbers; spans without a unit maximal minor are rejected
/// with [`Error::NotFree`].
pub fn column_span_normal_form(m: &Matrix) -> Result<Matrix> {
    let ring = m.ring();
    if !ring.is_local() {
        return Err(Error::UnsupportedRing("a field or dual numbers"));
    }
    let (n, k) = (m.rows(), m.cols());
    if k > n {
        return Err(Error::NotFree);
    }
    let mut cols: Vec<Vec<_>> = (0..k).map(|j| m.column(j)).collect();
    let mut pivot_of: Vec<Option<usize>> = alloc::vec![None; k];
    let mut order = Vec::with_capacity(k);

    // Greedy Gauss-Jordan on columns. Over a local ring a minor is a unit
    // iff it is nonzero modulo the maximal ideal, so the greedy choice of
    // unit pivots walks the lexicographically first unit-minor row set.
    for row in 0..n {
        if order.len() == k {
            break;
        }
        let Some(c) = (0..k).find(|&c| pivot_of[c].is_none() && ring.is_unit_unchecked(&cols[c][row]))
        else {
            continue;
        };
        let s = ring.inverse_unchecked(&cols[c][row])?;
        for x in cols[c].iter_mut() {
            *x = ring.mul_unchecked(x, &s);
        }
        let pivot_col = cols[c].clone();
        for (other, col) in cols.iter_mut().enumerate() {
            if other == c || ring.is_zero(&col[row]) {
                continue;
            }
            let f = col[row].clone();
            for (x, p) in col.iter_mut().zip(&pivot_col) {
                *x = ring.sub_unchecked(x, &ring.mul_unchecked(&f, p));
            }
        }
        pivot_of[c] = Some(row);
        order.push(c);
    }
    if order.len() < k {
        return Err(Error::NotFree);
    }
    Ok(Matrix::from_fn(ring, n, k, |i, j| cols[order[j]][i].clone()))
}

/// The lexicographically first row set whose maximal minor is a unit,
/// found by testing every row set. Exponential; meant as a cross-check.
pub fn lex_first_unit_minor_rows(m: &Matrix) -> Result<Option<Vec<usize>>> {
    let all_cols: Vec<usize> = (0..m.cols()).collect();
    for rows in combinations(m.rows(), m.cols()) {
        let d = m.minor(&rows, &all_cols)?;
        if m.ring().is_unit_unchecked(&d) {
            return Ok(Some(rows));
        }
    }
    Ok(None)
}

/// Whether two matrices have the same column span, decided by comparing
/// normal forms.
pub fn spans_equal(a: &Matrix, b: &Matrix) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "spans in dimensions {} and {}",
            a.rows(),
            b.rows()
        )));
    }
    let na = column_span_normal_form(a)?;
    let nb = column_span_normal_form(b)?;
    Ok(na == nb)
}
