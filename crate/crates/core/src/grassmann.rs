//! Points of Grassmannians over a ring and the embeddings induced by
//! tensor products, tensor powers, exterior powers and symmetric powers.
//!
//! A point of `Gr(n, m)` over `R` is a rank-`m` free direct summand of
//! `R^n`, stored as the canonical basis of its column span (see
//! [`column_span_normal_form`]). Two points are equal iff their spans are.

use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::{column_span_normal_form, Matrix};
use crate::multilinear::{
    compound, kronecker, sym_basis, sym_power, tensor_basis, wedge_basis, BasisLabel, WedgeIndex,
};
use crate::rings::{Ring, RingValue};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassmannPoint {
    basis: Matrix,
}

/// The four embeddings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddingKind {
    /// `(V₁, …, V_r) ↦ V₁ ⊗ … ⊗ V_r`
    Tensor,
    /// `V ↦ V^{⊗r}`
    TensorPower,
    /// `V ↦ ∧^r V`
    Wedge,
    /// `V ↦ Sym^r V`
    Sym,
}

impl GrassmannPoint {
    /// The point spanned by the columns of `columns`.
    pub fn from_matrix(columns: &Matrix) -> Result<Self> {
        Ok(GrassmannPoint { basis: column_span_normal_form(columns)? })
    }

    /// As [`from_matrix`](Self::from_matrix), checking the expected shape.
    pub fn new(ring: &Ring, n: usize, m: usize, columns: &Matrix) -> Result<Self> {
        if columns.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if (columns.rows(), columns.cols()) != (n, m) || m > n {
            return Err(Error::DimensionMismatch(alloc::format!(
                "expected an {n}x{m} basis, got {}x{}",
                columns.rows(),
                columns.cols()
            )));
        }
        GrassmannPoint::from_matrix(columns)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ring: &Ring, n: usize, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() || indices.iter().any(|&i| i >= n) {
            return Err(Error::InvalidParameters("coordinate indices out of range".into()));
        }
        let cols = Matrix::from_fn(ring, n, indices.len(), |i, j| {
            if indices[j] == i { ring.one() } else { ring.zero() }
        });
        GrassmannPoint::from_matrix(&cols)
    }

    pub fn ring(&self) -> &Ring {
        self.basis.ring()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis: identity on the lexicographically first unit-minor rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
}

fn check_common(ps: &[GrassmannPoint]) -> Result<&Ring> {
    let first = ps.first().ok_or(Error::EmptyProduct)?;
    if ps.iter().any(|p| p.ring() != first.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(first.ring())
}

/// `(V₁, …, V_r) ↦ V₁ ⊗ … ⊗ V_r` in `Gr(∏ n_i, ∏ m_i)`.
pub fn tensor_embed(ps: &[GrassmannPoint]) -> Result<GrassmannPoint> {
    check_common(ps)?;
    let bases: Vec<Matrix> = ps.iter().map(|p| p.basis.clone()).collect();
    let image = GrassmannPoint::from_matrix(&kronecker(&bases)?)?;
    let n: usize = ps.iter().map(GrassmannPoint::ambient_dim).product();
    let m: usize = ps.iter().map(GrassmannPoint::rank).product();
    assert_eq!((image.ambient_dim(), image.rank()), (n, m), "tensor embedding rank formula");
    Ok(image)
}

/// `V ↦ V^{⊗r}`, the tensor embedding composed with the diagonal.
pub fn tensor_power_embed(p: &GrassmannPoint, r: usize) -> Result<GrassmannPoint> {
    if r == 0 {
        return Err(Error::PowerOutOfRange { power: r, reason: "need r >= 1" });
    }
    tensor_embed(&vec![p.clone(); r])
}

/// `V ↦ ∧^r V` in `Gr(C(n, r), C(m, r))`; for `r = m` these are the
/// Plücker coordinates.
pub fn wedge_embed(p: &GrassmannPoint, r: usize) -> Result<GrassmannPoint> {
    if r == 0 || r > p.rank() {
        return Err(Error::PowerOutOfRange { power: r, reason: "need 1 <= r <= m" });
    }
    let image = GrassmannPoint::from_matrix(&compound(&p.basis, r)?)?;
    let (n, m, r) = (p.ambient_dim() as u64, p.rank() as u64, r as u64);
    assert_eq!(
        (image.ambient_dim() as u64, image.rank() as u64),
        (binomial(n, r), binomial(m, r)),
        "wedge embedding rank formula"
    );
    Ok(image)
}

/// `V ↦ Sym^r V` in `Gr(C(n+r−1, r), C(m+r−1, r))`.
///
/// Fails with [`Error::DegenerateImage`] if the image is not a free direct
/// summand.
pub fn sym_embed(p: &GrassmannPoint, r: usize) -> Result<GrassmannPoint> {
    if r == 0 {
        return Err(Error::PowerOutOfRange { power: r, reason: "need r >= 1" });
    }
    let image = match GrassmannPoint::from_matrix(&sym_power(&p.basis, r)?) {
        Err(Error::NotFree) => return Err(Error::DegenerateImage),
        other => other?,
    };
    let (n, m, r) = (p.ambient_dim() as u64, p.rank() as u64, r as u64);
    assert_eq!(
        (image.ambient_dim() as u64, image.rank() as u64),
        (binomial(n + r - 1, r), binomial(m + r - 1, r)),
        "sym embedding rank formula"
    );
    Ok(image)
}

/// Applies one of the single-point embeddings.
pub fn embed(kind: EmbeddingKind, p: &GrassmannPoint, r: usize) -> Result<GrassmannPoint> {
    match kind {
        EmbeddingKind::Tensor => tensor_embed(core::slice::from_ref(p)),
        EmbeddingKind::TensorPower => tensor_power_embed(p, r),
        EmbeddingKind::Wedge => wedge_embed(p, r),
        EmbeddingKind::Sym => sym_embed(p, r),
    }
}

/// Span equality of two points of the same Grassmannian.
pub fn points_equal(a: &GrassmannPoint, b: &GrassmannPoint) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    if (a.ambient_dim(), a.rank()) != (b.ambient_dim(), b.rank()) {
        return Err(Error::DimensionMismatch(alloc::format!(
            "Gr({}, {}) vs Gr({}, {})",
            a.ambient_dim(),
            a.rank(),
            b.ambient_dim(),
            b.rank()
        )));
    }
    Ok(a.basis == b.basis)
}

/// Normalised Plücker vector of a point, labelled by wedge indices in lex
/// order.
pub fn pluecker_coordinates(p: &GrassmannPoint) -> Result<Vec<(WedgeIndex, RingValue)>> {
    let image = wedge_embed(p, p.rank())?;
    Ok(wedge_basis(p.ambient_dim(), p.rank())
        .into_iter()
        .zip(image.basis.column(0))
        .collect())
}

/// Labels of the ambient basis after an embedding. `dims` are the ambient
/// dimensions of the source point(s).
pub fn target_labels(kind: EmbeddingKind, dims: &[usize], r: usize) -> Vec<BasisLabel> {
    match kind {
        EmbeddingKind::Tensor => tensor_basis(dims).into_iter().map(BasisLabel::Tensor).collect(),
        EmbeddingKind::TensorPower => tensor_basis(&vec![dims[0]; r])
            .into_iter()
            .map(BasisLabel::Tensor)
            .collect(),
        EmbeddingKind::Wedge => wedge_basis(dims[0], r).into_iter().map(BasisLabel::Wedge).collect(),
        EmbeddingKind::Sym => sym_basis(dims[0], r).into_iter().map(BasisLabel::Sym).collect(),
    }
}
