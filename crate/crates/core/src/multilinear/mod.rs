//! Tensor, exterior and symmetric powers of matrices.

mod identities;
mod index;
mod powers;

pub use identities::{
    check_det_sym_identity, check_det_tensor_identity, check_det_wedge_identity, generic_matrices,
    generic_matrices_with_limit, SYMBOLIC_VARIABLE_LIMIT,
};
pub use index::{sym_basis, tensor_basis, wedge_basis, BasisLabel, SymIndex, TensorIndex, WedgeIndex};
pub use powers::{compound, kronecker, multinomial, sym_power};
