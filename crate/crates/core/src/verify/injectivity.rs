use alloc::format;
use alloc::vec::Vec;

use super::enumerate::grassmannian_points;
use super::{par_map, EnumerationSpec};
use crate::error::{Error, Result};
use crate::grassmann::{embed, tensor_embed, EmbeddingKind, GrassmannPoint};
use crate::linalg::Matrix;
use crate::report::{params, CheckReport, Expectation, Timer, Witness};

fn kind_name(kind: EmbeddingKind) -> &'static str {
    match kind {
        EmbeddingKind::Tensor => "tensor",
        EmbeddingKind::TensorPower => "tensor-power",
        EmbeddingKind::Wedge => "wedge",
        EmbeddingKind::Sym => "sym",
    }
}

/// Enumerates all source points (tuples for [`EmbeddingKind::Tensor`]),
/// embeds them and checks the images are pairwise distinct. Each colliding
/// pair of sources is a witness.
pub fn verify_embedding_injectivity(
    spec: &EnumerationSpec,
    kind: EmbeddingKind,
    expect_failure: bool,
) -> Result<CheckReport> {
    let timer = Timer::start();
    let sources: Vec<Vec<GrassmannPoint>> = if kind == EmbeddingKind::Tensor {
        spec.validate_tensor(true)?;
        let mut out: Vec<Vec<GrassmannPoint>> = alloc::vec![Vec::new()];
        for &(n, m) in &spec.factors {
            let pts = grassmannian_points(&spec.ring, n, m)?;
            out = out
                .iter()
                .flat_map(|prefix| {
                    pts.iter().map(move |p| {
                        let mut t = prefix.clone();
                        t.push(p.clone());
                        t
                    })
                })
                .collect();
        }
        out
    } else {
        spec.validate_single()?;
        if kind == EmbeddingKind::Wedge && spec.r > spec.m {
            return Err(Error::PowerOutOfRange { power: spec.r, reason: "need 1 <= r <= m" });
        }
        grassmannian_points(&spec.ring, spec.n, spec.m)?
            .into_iter()
            .map(|p| alloc::vec![p])
            .collect()
    };
    let images = par_map(&sources, |t| {
        if kind == EmbeddingKind::Tensor {
            tensor_embed(t)
        } else {
            embed(kind, &t[0], spec.r)
        }
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let mut order: Vec<usize> = (0..images.len()).collect();
    order.sort_by(|&a, &b| images[a].cmp(&images[b]));
    let mut found = Vec::new();
    let mut distinct = usize::from(!order.is_empty());
    for w in order.windows(2) {
        let (a, b) = (w[0], w[1]);
        if images[a] != images[b] {
            distinct += 1;
            continue;
        }
        let mats: Vec<Matrix> = sources[a]
            .iter()
            .chain(&sources[b])
            .map(|p| p.basis().clone())
            .chain(core::iter::once(images[a].basis().clone()))
            .collect();
        found.push(Witness::new(format!("sources #{a} and #{b} share an image"), mats));
    }

    let mut p = params([
        ("n", spec.n as i64),
        ("m", spec.m as i64),
        ("r", spec.r as i64),
        ("points", sources.len() as i64),
        ("distinct_images", distinct as i64),
    ]);
    if kind == EmbeddingKind::Tensor {
        for (i, &(n, m)) in spec.factors.iter().enumerate() {
            p.insert(format!("n{}", i + 1), n as i64);
            p.insert(format!("m{}", i + 1), m as i64);
        }
    }
    let expectation = if expect_failure { Expectation::Violated } else { Expectation::Holds };
    Ok(CheckReport::conclude(
        format!("injectivity-{}", kind_name(kind)),
        spec.ring.clone(),
        p,
        sources.len() as u64,
        found,
        expectation,
    )
    .with_elapsed(timer.elapsed()))
}
