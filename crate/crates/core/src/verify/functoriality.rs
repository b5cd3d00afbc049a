use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random::random_matrix;
use crate::error::{Error, Result};
use crate::multilinear::{compound, kronecker, sym_power};
use crate::report::{params, CheckReport, Expectation, Timer, Witness};
use crate::rings::Ring;

/// Highest symmetric power exercised per pair.
pub const FUNCTORIALITY_MAX_SYM_DEGREE: usize = 3;

/// On `trials` seeded random pairs `A: p × q`, `B: q × s` with sizes in
/// `1..=max_size`, checks
/// `∧^r(AB) = ∧^r A · ∧^r B` for `r ≤ min(p, q, s)`,
/// `Sym^r(AB) = Sym^r A · Sym^r B` for `r ≤ 3`, and
/// `(A ⊗ C)(B ⊗ D) = AB ⊗ CD` for a second random `2 × 2` pair.
pub fn verify_functoriality(ring: &Ring, trials: usize, max_size: usize, seed: u64) -> Result<CheckReport> {
    let timer = Timer::start();
    if max_size == 0 {
        return Err(Error::InvalidParameters("max_size must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Vec::new();
    let mut cases = 0u64;
    for _ in 0..trials {
        let (p, q, s) = (
            rng.gen_range(1..=max_size),
            rng.gen_range(1..=max_size),
            rng.gen_range(1..=max_size),
        );
        let a = random_matrix(ring, p, q, &mut rng)?;
        let b = random_matrix(ring, q, s, &mut rng)?;
        let ab = a.matmul(&b)?;
        for r in 1..=p.min(q).min(s) {
            cases += 1;
            if compound(&ab, r)? != compound(&a, r)?.matmul(&compound(&b, r)?)? {
                found.push(Witness::new(format!("compound r={r}"), alloc::vec![a.clone(), b.clone()]));
            }
        }
        for r in 1..=FUNCTORIALITY_MAX_SYM_DEGREE {
            cases += 1;
            if sym_power(&ab, r)? != sym_power(&a, r)?.matmul(&sym_power(&b, r)?)? {
                found.push(Witness::new(format!("sym r={r}"), alloc::vec![a.clone(), b.clone()]));
            }
        }
        let c = random_matrix(ring, 2, 2, &mut rng)?;
        let d = random_matrix(ring, 2, 2, &mut rng)?;
        let lhs = kronecker(&[a.clone(), c.clone()])?.matmul(&kronecker(&[b.clone(), d.clone()])?)?;
        let rhs = kronecker(&[ab, c.matmul(&d)?])?;
        cases += 1;
        if lhs != rhs {
            found.push(Witness::new("kronecker mixed product", alloc::vec![a, b, c, d]));
        }
    }
    let prm = params([("trials", trials as i64), ("max_size", max_size as i64), ("seed", seed as i64)]);
    Ok(CheckReport::conclude("functoriality", ring.clone(), prm, cases, found, Expectation::Holds)
        .with_elapsed(timer.elapsed()))
}
