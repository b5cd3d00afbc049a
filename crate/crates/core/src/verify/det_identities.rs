use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random::{random_diagonal, random_matrix};
use crate::error::{Error, Result};
use crate::multilinear::{
    check_det_sym_identity, check_det_tensor_identity, check_det_wedge_identity, generic_matrices,
};
use crate::report::{params, CheckReport, Expectation, Timer};
use crate::rings::Ring;

/// Which determinant identities [`verify_det_identities`] exercises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetIdentityConfig {
    pub ring: Ring,
    pub trials: usize,
    pub seed: u64,
    /// `(n₁, n₂)` sizes of random tensor pairs.
    pub tensor_sizes: Vec<(usize, usize)>,
    /// `(n, d)` pairs for symmetric and exterior powers; the exterior check
    /// is skipped when `d > n`.
    pub power_sizes: Vec<(usize, usize)>,
    /// Also run the generic-matrix identities over `ℤ[X]`.
    pub symbolic: bool,
}

impl Default for DetIdentityConfig {
    fn default() -> Self {
        DetIdentityConfig {
            ring: Ring::integer(),
            trials: 100,
            seed: 0,
            tensor_sizes: alloc::vec![(2, 2), (2, 3), (3, 3)],
            power_sizes: alloc::vec![(2, 2), (3, 2), (3, 3), (4, 2)],
            symbolic: true,
        }
    }
}

/// Runs the three determinant identities on `trials` random matrices per
/// size, on one diagonal matrix per size, and optionally on generic
/// `2 × 2` and `3 × 3` matrices. Aggregated into one report.
pub fn verify_det_identities(config: &DetIdentityConfig) -> Result<CheckReport> {
    let timer = Timer::start();
    let ring = &config.ring;
    if config.power_sizes.iter().any(|&(n, d)| n == 0 || d == 0)
        || config.tensor_sizes.iter().any(|&(a, b)| a == 0 || b == 0)
    {
        return Err(Error::InvalidParameters("sizes and degrees must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut parts = Vec::new();
    for trial in 0..=config.trials {
        // the extra round uses diagonal matrices
        let diagonal = trial == config.trials;
        let mut draw = |n: usize| {
            if diagonal {
                random_diagonal(ring, n, &mut rng)
            } else {
                random_matrix(ring, n, n, &mut rng)
            }
        };
        for &(a, b) in &config.tensor_sizes {
            let pair = [draw(a)?, draw(b)?];
            parts.push(check_det_tensor_identity(&pair)?);
        }
        for &(n, d) in &config.power_sizes {
            let m = draw(n)?;
            parts.push(check_det_sym_identity(&m, d)?);
            if d <= n {
                parts.push(check_det_wedge_identity(&m, d)?);
            }
        }
    }
    if config.symbolic {
        let (_, pair) = generic_matrices(&[2, 2])?;
        parts.push(check_det_tensor_identity(&pair)?);
        for n in [2, 3] {
            let (_, ms) = generic_matrices(&[n])?;
            parts.push(check_det_sym_identity(&ms[0], 2)?);
            parts.push(check_det_wedge_identity(&ms[0], 2)?);
        }
    }
    let p = params([
        ("trials", config.trials as i64),
        ("seed", config.seed as i64),
        ("symbolic", config.symbolic as i64),
    ]);
    let mut report =
        CheckReport::conclude("det-identities", ring.clone(), p, 0, Vec::new(), Expectation::Holds);
    for part in parts {
        report.absorb(part);
    }
    Ok(report.with_elapsed(timer.elapsed()))
}
