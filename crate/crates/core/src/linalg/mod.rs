//! Dense matrices over a runtime [`Ring`].

mod det;
mod span;

pub use det::{determinant_division_free, determinant_fraction_free};
pub use span::{column_span_normal_form, lex_first_unit_minor_rows, spans_equal};

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rings::{Ring, RingValue};

/// A dense, row-major matrix whose entries all belong to `ring`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<RingValue>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, checking dimensions and ring
    /// membership.
    pub fn new(ring: Ring, rows: usize, cols: usize, entries: Vec<RingValue>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!("empty matrix {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if !entries.iter().all(|e| ring.contains(e)) {
            return Err(Error::RingMismatch);
        }
        Ok(Matrix { ring, rows, cols, entries })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<RingValue>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer literal rows mapped into `ring` through `ℤ → ring`.
    pub fn from_i64(ring: &Ring, rows: &[&[i64]]) -> Result<Self> {
        let values = rows
            .iter()
            .map(|row| row.iter().map(|&x| ring.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(ring.clone(), values)
    }

    pub(crate) fn from_fn(
        ring: &Ring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> RingValue,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        debug_assert!(entries.iter().all(|e| ring.contains(e)));
        Matrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn identity(ring: &Ring, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("empty identity".into()));
        }
        let (zero, one) = (ring.zero(), ring.one());
        Ok(Matrix::from_fn(ring, n, n, |i, j| if i == j { one.clone() } else { zero.clone() }))
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Result<Self> {
        Matrix::new(ring.clone(), rows, cols, alloc::vec![ring.zero(); rows * cols])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingValue {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[RingValue] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[RingValue] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<RingValue>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<RingValue> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::DimensionMismatch("empty selection".into()));
        }
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(Error::DimensionMismatch("selection index out of range".into()));
        }
        Ok(Matrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        }))
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        Ok(Matrix::from_fn(ring, self.rows, other.cols, |i, j| {
            let mut acc = ring.zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                acc = ring.add_unchecked(&acc, &ring.mul_unchecked(a, other.get(k, j)));
            }
            acc
        }))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.ring.add_unchecked(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn scale(&self, c: &RingValue) -> Result<Matrix> {
        if !self.ring.contains(c) {
            return Err(Error::RingMismatch);
        }
        Ok(Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.ring.mul_unchecked(c, self.get(i, j))
        }))
    }

    /// Exact determinant. Uses fraction-free elimination over integral
    /// domains and a division-free scheme otherwise.
    pub fn determinant(&self) -> Result<RingValue> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.ring.is_integral_domain() {
            determinant_fraction_free(self)
        } else {
            determinant_division_free(self)
        }
    }

    /// Determinant of the submatrix on `rows × cols`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<RingValue> {
        if rows.len() != cols.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows vs {} columns selected",
                rows.len(),
                cols.len()
            )));
        }
        self.submatrix(rows, cols)?.determinant()
    }

    /// True when the determinant is a unit of the ring.
    pub fn is_invertible(&self) -> Result<bool> {
        let d = self.determinant()?;
        Ok(self.ring.is_unit_unchecked(&d))
    }

    /// Inverse of a square matrix with unit determinant.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.ring.is_local() {
            return self.inverse_gauss_jordan();
        }
        // adjugate / det
        let det = self.determinant()?;
        let inv_det = self.ring.inverse_unchecked(&det)?;
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::from_fn(&self.ring, 1, 1, |_, _| inv_det.clone()));
        }
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // (i, j) entry of the inverse is the (j, i) cofactor
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let mut c = self.minor(&rows, &cols)?;
                if (i + j) % 2 == 1 {
                    c = self.ring.neg_unchecked(&c);
                }
                out.push(self.ring.mul_unchecked(&c, &inv_det));
            }
        }
        Matrix::new(self.ring.clone(), n, n, out)
    }

    /// Gauss-Jordan with unit pivots; correct over local rings, where a
    /// column of an invertible matrix always contains a unit.
    fn inverse_gauss_jordan(&self) -> Result<Matrix> {
        let ring = &self.ring;
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut inv = Matrix::identity(ring, n)?.row_vecs();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| ring.is_unit_unchecked(&a[r][col]))
                .ok_or(Error::NotAUnit)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let s = ring.inverse_unchecked(&a[col][col])?;
            for j in 0..n {
                a[col][j] = ring.mul_unchecked(&a[col][j], &s);
                inv[col][j] = ring.mul_unchecked(&inv[col][j], &s);
            }
            for r in 0..n {
                if r == col || ring.is_zero(&a[r][col]) {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = ring.mul_unchecked(&f, &a[col][j]);
                    a[r][j] = ring.sub_unchecked(&a[r][j], &t);
                    let t = ring.mul_unchecked(&f, &inv[col][j]);
                    inv[r][j] = ring.sub_unchecked(&inv[r][j], &t);
                }
            }
        }
        Matrix::from_rows(ring.clone(), inv)
    }

    /// Applies an entrywise map into another ring (e.g. evaluation of a
    /// generic matrix).
    pub fn map_into(
        &self,
        target: &Ring,
        mut f: impl FnMut(&RingValue) -> Result<RingValue>,
    ) -> Result<Matrix> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Matrix::new(target.clone(), self.rows, self.cols, entries)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.ring.show(self.get(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
