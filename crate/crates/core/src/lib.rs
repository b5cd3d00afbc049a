//! Exact tensor, exterior and symmetric powers of matrices over commutative
//! rings, the Grassmannian embeddings they induce, and exhaustive checkers
//! for their determinant identities and injectivity properties.
//!
//! The crate is `no_std` (it needs `alloc`). The default `std` feature only
//! adds wall-clock timing to reports; `parallel` fans verification work out
//! over rayon.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod combinatorics;
pub mod error;
pub mod grassmann;
pub mod linalg;
pub mod multilinear;
pub mod report;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
pub use grassmann::GrassmannPoint;
pub use linalg::Matrix;
pub use report::{CheckReport, Expectation, Verdict, Witness};
pub use rings::{Ring, RingKind, RingValue};
