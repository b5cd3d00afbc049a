use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::grassmannian_points;
use super::{par_map, EnumerationSpec};
use crate::error::{Error, Result};
use crate::grassmann::{sym_embed, tensor_embed, wedge_embed, GrassmannPoint};
use crate::linalg::Matrix;
use crate::report::{params, CheckReport, Expectation, Timer, Witness};
use crate::rings::{Ring, RingKind};

/// Checks `image(a) == image(b) ⇒ a == b` over all ordered pairs of
/// sources. Sources are tuples of points compared componentwise.
fn pairwise_implication(
    sources: &[Vec<GrassmannPoint>],
    images: &[GrassmannPoint],
) -> Vec<Witness> {
    let idx: Vec<usize> = (0..sources.len()).collect();
    let per_row = par_map(&idx, |&a| {
        let mut found = Vec::new();
        for b in 0..sources.len() {
            if images[a] == images[b] && sources[a] != sources[b] {
                let mats: Vec<Matrix> =
                    sources[a].iter().chain(&sources[b]).map(|p| p.basis().clone()).collect();
                found.push(Witness::new(
                    format!("source #{a} and #{b} differ but have equal images"),
                    mats,
                ));
            }
        }
        found
    });
    per_row.into_iter().flatten().collect()
}

fn tuples(per_factor: &[Vec<GrassmannPoint>]) -> Vec<Vec<GrassmannPoint>> {
    let mut out: Vec<Vec<GrassmannPoint>> = alloc::vec![Vec::new()];
    for pts in per_factor {
        let mut next = Vec::with_capacity(out.len() * pts.len());
        for prefix in &out {
            for p in pts {
                let mut t = prefix.clone();
                t.push(p.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn factor_params(spec: &EnumerationSpec) -> alloc::collections::BTreeMap<alloc::string::String, i64> {
    let mut p = params([("factors", spec.factors.len() as i64)]);
    for (i, &(n, m)) in spec.factors.iter().enumerate() {
        p.insert(format!("n{}", i + 1), n as i64);
        p.insert(format!("m{}", i + 1), m as i64);
    }
    p
}

/// `V₁ ⊗ V₂ = W₁ ⊗ W₂ ⇒ V_i = W_i`, exhaustively over all ordered pairs of
/// tuples. Exactly two factors; see [`verify_tensor_image_lemma_sampled`]
/// for more.
pub fn verify_tensor_image_lemma(spec: &EnumerationSpec) -> Result<CheckReport> {
    let timer = Timer::start();
    spec.validate_tensor(true)?;
    if spec.factors.len() != 2 {
        return Err(Error::InvalidParameters(format!(
            "the exhaustive tensor lemma takes two factors, got {}",
            spec.factors.len()
        )));
    }
    let per_factor = spec
        .factors
        .iter()
        .map(|&(n, m)| grassmannian_points(&spec.ring, n, m))
        .collect::<Result<Vec<_>>>()?;
    let sources = tuples(&per_factor);
    let images = par_map(&sources, |t| tensor_embed(t)).into_iter().collect::<Result<Vec<_>>>()?;
    let found = pairwise_implication(&sources, &images);
    let cases = (sources.len() * sources.len()) as u64;
    Ok(CheckReport::conclude(
        "tensor-image-lemma",
        spec.ring.clone(),
        factor_params(spec),
        cases,
        found,
        Expectation::Holds,
    )
    .with_elapsed(timer.elapsed()))
}

/// The tensor lemma for any number of factors on `samples` seeded random
/// pairs of tuples. Half of the pairs share all but one factor, so
/// near-collisions are exercised.
pub fn verify_tensor_image_lemma_sampled(
    spec: &EnumerationSpec,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    let timer = Timer::start();
    spec.validate_tensor(false)?;
    let per_factor = spec
        .factors
        .iter()
        .map(|&(n, m)| grassmannian_points(&spec.ring, n, m))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(samples);
    for i in 0..samples {
        let a: Vec<GrassmannPoint> =
            per_factor.iter().map(|pts| pts[rng.gen_range(0..pts.len())].clone()).collect();
        let mut b: Vec<GrassmannPoint> =
            per_factor.iter().map(|pts| pts[rng.gen_range(0..pts.len())].clone()).collect();
        if i % 2 == 0 {
            let keep = rng.gen_range(0..a.len());
            for (k, slot) in b.iter_mut().enumerate() {
                if k != keep {
                    *slot = a[k].clone();
                }
            }
        }
        pairs.push((a, b));
    }
    let results = par_map(&pairs, |(a, b)| -> Result<Option<Witness>> {
        let same_image = tensor_embed(a)? == tensor_embed(b)?;
        Ok((same_image && a != b).then(|| {
            Witness::new(
                "distinct tuples with equal tensor images",
                a.iter().chain(b).map(|p| p.basis().clone()).collect(),
            )
        }))
    });
    let mut found = Vec::new();
    for r in results {
        found.extend(r?);
    }
    let mut p = factor_params(spec);
    p.insert("seed".into(), seed as i64);
    Ok(CheckReport::conclude(
        "tensor-image-lemma-sampled",
        spec.ring.clone(),
        p,
        samples as u64,
        found,
        Expectation::Holds,
    )
    .with_elapsed(timer.elapsed()))
}

/// `∧^r V = ∧^r W ⇒ V = W` over all ordered pairs of points of `Gr(n, m)`.
pub fn verify_wedge_image_lemma(spec: &EnumerationSpec) -> Result<CheckReport> {
    let timer = Timer::start();
    spec.validate_single()?;
    if spec.r > spec.m {
        return Err(Error::PowerOutOfRange { power: spec.r, reason: "need 1 <= r <= m" });
    }
    let points = grassmannian_points(&spec.ring, spec.n, spec.m)?;
    let images =
        par_map(&points, |p| wedge_embed(p, spec.r)).into_iter().collect::<Result<Vec<_>>>()?;
    let sources: Vec<Vec<GrassmannPoint>> = points.into_iter().map(|p| alloc::vec![p]).collect();
    let found = pairwise_implication(&sources, &images);
    Ok(CheckReport::conclude(
        "wedge-image-lemma",
        spec.ring.clone(),
        params([("n", spec.n as i64), ("m", spec.m as i64), ("r", spec.r as i64)]),
        (sources.len() * sources.len()) as u64,
        found,
        Expectation::Holds,
    )
    .with_elapsed(timer.elapsed()))
}

/// The symmetric-power lemma applies when `m ≥ 2` or `r` is a unit of the
/// ring.
pub fn sym_lemma_hypothesis_holds(ring: &Ring, m: usize, r: usize) -> bool {
    if m >= 2 {
        return true;
    }
    match *ring.kind() {
        RingKind::PrimeField { p } | RingKind::DualNumbers { p } => !(r as u64).is_multiple_of(p),
        RingKind::Rational => r != 0,
        _ => r == 1,
    }
}

/// `Sym^r V = Sym^r W ⇒ V = W` over all ordered pairs of points of
/// `Gr(n, m)`. With `expect_failure` the verdict is
/// `expected-failure-observed` if a colliding pair exists and `fail`
/// otherwise.
pub fn verify_sym_image_lemma(spec: &EnumerationSpec, expect_failure: bool) -> Result<CheckReport> {
    let timer = Timer::start();
    spec.validate_single()?;
    let points = grassmannian_points(&spec.ring, spec.n, spec.m)?;
    let images =
        par_map(&points, |p| sym_embed(p, spec.r)).into_iter().collect::<Result<Vec<_>>>()?;
    let sources: Vec<Vec<GrassmannPoint>> = points.into_iter().map(|p| alloc::vec![p]).collect();
    let found = pairwise_implication(&sources, &images);
    let expectation = if expect_failure { Expectation::Violated } else { Expectation::Holds };
    let p = params([
        ("n", spec.n as i64),
        ("m", spec.m as i64),
        ("r", spec.r as i64),
        ("hypothesis", sym_lemma_hypothesis_holds(&spec.ring, spec.m, spec.r) as i64),
    ]);
    Ok(CheckReport::conclude(
        "sym-image-lemma",
        spec.ring.clone(),
        p,
        (sources.len() * sources.len()) as u64,
        found,
        expectation,
    )
    .with_elapsed(timer.elapsed()))
}
