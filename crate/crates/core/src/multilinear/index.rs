//! Multi-indices labelling the standard bases of `∧^r`, `Sym^r` and `⊗`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::combinatorics::combinations;
use crate::error::{Error, Result};

/// A strictly increasing `r`-tuple: the basis vector `e_{i₁} ∧ … ∧ e_{i_r}`.
/// Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeIndex(Vec<usize>);

impl WedgeIndex {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameters("wedge index must be strictly increasing".into()));
        }
        if entries.iter().any(|&i| i >= n) {
            return Err(Error::InvalidParameters("wedge index out of range".into()));
        }
        Ok(WedgeIndex(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

/// Exponent vector of the monomial `e₁^{k₁} ⋯ e_n^{k_n}` in `Sym^r`.
///
/// Ordered graded-lex: by total degree, then so that `e₁^r` comes first,
/// i.e. descending on exponent vectors. Equivalently, ascending lex on the
/// sorted multiset of factor indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymIndex(Vec<u32>);

impl SymIndex {
    pub fn new(exponents: Vec<u32>, degree: u32) -> Result<Self> {
        if exponents.iter().sum::<u32>() != degree {
            return Err(Error::InvalidParameters("exponents do not sum to the degree".into()));
        }
        Ok(SymIndex(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The factor indices with multiplicity, ascending.
    pub fn multiset(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| core::iter::repeat_n(i, e as usize))
            .collect()
    }
}

impl Ord for SymIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for SymIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An `r`-tuple `(i₁, …, i_r)` labelling `e_{i₁} ⊗ … ⊗ e_{i_r}`. Ordered
/// lexicographically, which is the row order of the Kronecker product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorIndex(Vec<usize>);

impl TensorIndex {
    pub fn new(factors: Vec<usize>, dims: &[usize]) -> Result<Self> {
        if factors.len() != dims.len() || factors.iter().zip(dims).any(|(i, n)| i >= n) {
            return Err(Error::InvalidParameters("tensor index out of range".into()));
        }
        Ok(TensorIndex(factors))
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }
}

/// A basis label of any of the three kinds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    Plain(usize),
    Wedge(WedgeIndex),
    Sym(SymIndex),
    Tensor(TensorIndex),
}

impl BasisLabel {
    /// The label as an integer list: tuple entries for wedge and tensor
    /// indices, exponents for symmetric indices.
    pub fn as_list(&self) -> Vec<usize> {
        match self {
            BasisLabel::Plain(i) => alloc::vec![*i],
            BasisLabel::Wedge(w) => w.0.clone(),
            BasisLabel::Sym(s) => s.0.iter().map(|&e| e as usize).collect(),
            BasisLabel::Tensor(t) => t.0.clone(),
        }
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Plain(i) => write!(f, "{i}"),
            BasisLabel::Wedge(w) => write_list(f, &w.0),
            BasisLabel::Sym(s) => write_list(f, &s.0),
            BasisLabel::Tensor(t) => write_list(f, &t.0),
        }
    }
}

/// Basis of `∧^r` of a rank-`n` module, lex order.
pub fn wedge_basis(n: usize, r: usize) -> Vec<WedgeIndex> {
    combinations(n, r).map(WedgeIndex).collect()
}

/// Basis of `Sym^r` of a rank-`n` module, graded-lex order (`e₁^r` first).
pub fn sym_basis(n: usize, r: usize) -> Vec<SymIndex> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<SymIndex>) {
        if slots == 1 {
            prefix.push(left);
            out.push(SymIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut Vec::with_capacity(n), r as u32, n, &mut out);
    }
    out
}

/// Basis of `W₁ ⊗ … ⊗ W_k` with `rank W_i = dims[i]`, lex order.
pub fn tensor_basis(dims: &[usize]) -> Vec<TensorIndex> {
    let mut out = alloc::vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..d).map(move |i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(TensorIndex).collect()
}
