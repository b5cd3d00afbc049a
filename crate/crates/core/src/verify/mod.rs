//! Exhaustive and seeded randomized checkers producing [`CheckReport`]s.
//!
//! Exhaustive checkers enumerate every point of a Grassmannian over a
//! finite ring, so they are bounded by a desk-scale envelope (`p ∈ {2, 3}`,
//! `n ≤ 4`, `r ≤ 3`, two tensor factors) unless
//! [`EnumerationSpec::allow_large`] is set.
//!
//! [`CheckReport`]: crate::report::CheckReport

mod corollaries;
mod counterexample;
mod det_identities;
mod enumerate;
mod functoriality;
mod injectivity;
mod lemmas;
pub mod random;

pub use corollaries::{
    verify_sym_invertibility, verify_tensor_invertibility, verify_wedge_invertibility,
};
pub use counterexample::run_counterexample;
pub use det_identities::{verify_det_identities, DetIdentityConfig};
pub use enumerate::{
    enumerate_grassmannian, expected_point_count, grassmannian_points, verify_point_count,
};
pub use functoriality::verify_functoriality;
pub use injectivity::verify_embedding_injectivity;
pub use lemmas::{
    sym_lemma_hypothesis_holds, verify_sym_image_lemma, verify_tensor_image_lemma,
    verify_tensor_image_lemma_sampled, verify_wedge_image_lemma,
};

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rings::Ring;

pub const ENVELOPE_PRIMES: [u64; 2] = [2, 3];
pub const ENVELOPE_MAX_N: usize = 4;
pub const ENVELOPE_MAX_R: usize = 3;
pub const ENVELOPE_MAX_FACTORS: usize = 2;

/// Parameters of an exhaustive run: a finite ring, a Grassmannian
/// `Gr(n, m)`, a power `r`, and for tensor checks the per-factor
/// `(n_i, m_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub ring: Ring,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub factors: Vec<(usize, usize)>,
    pub allow_large: bool,
}

impl EnumerationSpec {
    pub fn grassmannian(ring: Ring, n: usize, m: usize) -> Self {
        EnumerationSpec { ring, n, m, r: 1, factors: Vec::new(), allow_large: false }
    }

    pub fn tensor(ring: Ring, factors: Vec<(usize, usize)>) -> Self {
        let (n, m) = factors.first().copied().unwrap_or((0, 0));
        EnumerationSpec { ring, n, m, r: factors.len(), factors, allow_large: false }
    }

    pub fn with_power(mut self, r: usize) -> Self {
        self.r = r;
        self
    }

    /// Lifts the desk-scale envelope.
    pub fn allow_large(mut self) -> Self {
        self.allow_large = true;
        self
    }

    fn check_ring(&self) -> Result<()> {
        let p = self.ring.modulus().ok_or(Error::InfiniteRing)?;
        if !self.allow_large && !ENVELOPE_PRIMES.contains(&p) {
            return Err(Error::InvalidParameters(format!(
                "p = {p} is outside the desk-scale envelope (p in {{2, 3}})"
            )));
        }
        Ok(())
    }

    fn check_dims(&self, n: usize, m: usize) -> Result<()> {
        if m == 0 || m > n {
            return Err(Error::InvalidParameters(format!("need 1 <= m <= n, got n = {n}, m = {m}")));
        }
        if !self.allow_large && n > ENVELOPE_MAX_N {
            return Err(Error::InvalidParameters(format!(
                "n = {n} exceeds the desk-scale envelope (n <= {ENVELOPE_MAX_N})"
            )));
        }
        Ok(())
    }

    fn check_power(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::PowerOutOfRange { power: 0, reason: "need r >= 1" });
        }
        if !self.allow_large && self.r > ENVELOPE_MAX_R {
            return Err(Error::InvalidParameters(format!(
                "r = {} exceeds the desk-scale envelope (r <= {ENVELOPE_MAX_R})",
                self.r
            )));
        }
        Ok(())
    }

    pub(crate) fn validate_single(&self) -> Result<()> {
        self.check_ring()?;
        self.check_dims(self.n, self.m)?;
        self.check_power()
    }

    pub(crate) fn validate_tensor(&self, exhaustive: bool) -> Result<()> {
        self.check_ring()?;
        if self.factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        if exhaustive && !self.allow_large && self.factors.len() > ENVELOPE_MAX_FACTORS {
            return Err(Error::InvalidParameters(format!(
                "{} tensor factors exceed the desk-scale envelope ({ENVELOPE_MAX_FACTORS})",
                self.factors.len()
            )));
        }
        for &(n, m) in &self.factors {
            self.check_dims(n, m)?;
        }
        Ok(())
    }
}

/// Order-preserving map, parallel when the `parallel` feature is enabled.
pub(crate) fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}
