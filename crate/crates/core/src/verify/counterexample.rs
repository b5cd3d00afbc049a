use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grassmann::{sym_embed, GrassmannPoint};
use crate::linalg::Matrix;
use crate::report::{params, CheckReport, Expectation, Timer, Witness};
use crate::rings::Ring;

/// Over `F_p[ε]` with `p | r`, the lines `V₁ = span(e₁)` and
/// `V₂ = span(e₁ + εe₂)` differ but `Sym^r V₁ = Sym^r V₂`, because
/// `(e₁ + εe₂)^p = e₁^p` once `p ε = ε² = 0`.
///
/// The report has verdict `expected-failure-observed` with `[V₁, V₂]` as
/// witness when both facts are confirmed, and `fail` otherwise.
pub fn run_counterexample(p: u64, r: usize, n: usize) -> Result<CheckReport> {
    let timer = Timer::start();
    let ring = Ring::dual_numbers(p)?;
    if r == 0 || !(r as u64).is_multiple_of(p) {
        return Err(Error::InvalidParameters(format!("need p | r with r >= 1, got p = {p}, r = {r}")));
    }
    if n < 2 {
        return Err(Error::InvalidParameters(format!("need n >= 2, got {n}")));
    }
    let v1 = GrassmannPoint::coordinate(&ring, n, &[0])?;
    let mut col = alloc::vec![ring.zero(); n];
    col[0] = ring.one();
    col[1] = ring.epsilon()?;
    let v2 = GrassmannPoint::from_matrix(&Matrix::new(ring.clone(), n, 1, col)?)?;
    let s1 = sym_embed(&v1, r)?;
    let s2 = sym_embed(&v2, r)?;
    let found = if v1 != v2 && s1 == s2 {
        alloc::vec![Witness::new(
            "span(e1) != span(e1 + e*e2) but their symmetric powers agree",
            alloc::vec![v1.basis().clone(), v2.basis().clone()],
        )]
    } else {
        Vec::new()
    };
    let prm = params([("p", p as i64), ("r", r as i64), ("n", n as i64)]);
    Ok(CheckReport::conclude("counterexample", ring, prm, 1, found, Expectation::Violated)
        .with_elapsed(timer.elapsed()))
}
