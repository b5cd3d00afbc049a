use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::EnumerationSpec;
use crate::combinatorics::{combinations, gaussian_binomial};
use crate::error::{Error, Result};
use crate::grassmann::GrassmannPoint;
use crate::linalg::Matrix;
use crate::report::{params, CheckReport, Expectation, Timer, Witness};
use crate::rings::{Ring, RingKind, RingValue};

/// Every point of `Gr(n, m)` over the spec's finite ring, exactly once.
pub fn enumerate_grassmannian(spec: &EnumerationSpec) -> Result<Vec<GrassmannPoint>> {
    spec.check_ring()?;
    spec.check_dims(spec.n, spec.m)?;
    grassmannian_points(&spec.ring, spec.n, spec.m)
}

/// Enumeration without the envelope check.
///
/// Each point has a basis that is the identity on some row set `I`; for
/// every `I` all fillings of the remaining rows are canonicalised and
/// deduplicated. Points come out grouped by their first candidate row set.
pub fn grassmannian_points(ring: &Ring, n: usize, m: usize) -> Result<Vec<GrassmannPoint>> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameters(format!("need 1 <= m <= n, got n = {n}, m = {m}")));
    }
    let elements: Vec<RingValue> = ring.elements()?.collect();
    let q = elements.len();
    let free = (n - m) * m;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for pivots in combinations(n, m) {
        let others: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let mut digits = alloc::vec![0usize; free];
        loop {
            let mut entries = alloc::vec![ring.zero(); n * m];
            for (j, &row) in pivots.iter().enumerate() {
                entries[row * m + j] = ring.one();
            }
            for (t, &d) in digits.iter().enumerate() {
                let (row, j) = (others[t / m], t % m);
                entries[row * m + j] = elements[d].clone();
            }
            let point = GrassmannPoint::from_matrix(&Matrix::new(ring.clone(), n, m, entries)?)?;
            if seen.insert(point.clone()) {
                out.push(point);
            }
            // odometer over the free entries
            let mut k = 0;
            while k < free {
                digits[k] += 1;
                if digits[k] < q {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == free {
                break;
            }
        }
    }
    Ok(out)
}

/// Closed-form point count: the Gaussian binomial over `F_q`, and
/// `|Gr(n, m)(F_p)| · p^{m(n−m)}` over `F_p[ε]`.
pub fn expected_point_count(ring: &Ring, n: usize, m: usize) -> Option<u64> {
    let g = |p: u64| gaussian_binomial(n as u32, m as u32, p);
    match *ring.kind() {
        RingKind::PrimeField { p } => Some(g(p)),
        RingKind::DualNumbers { p } => Some(g(p) * p.pow((m * (n - m)) as u32)),
        _ => None,
    }
}

/// Compares the enumerated point count with the closed form.
pub fn verify_point_count(spec: &EnumerationSpec) -> Result<CheckReport> {
    let timer = Timer::start();
    let points = enumerate_grassmannian(spec)?;
    let expected = expected_point_count(&spec.ring, spec.n, spec.m).ok_or(Error::InfiniteRing)?;
    let found = if points.len() as u64 == expected {
        Vec::new()
    } else {
        alloc::vec![Witness::new(
            format!("enumerated {} points, formula gives {expected}", points.len()),
            Vec::new(),
        )]
    };
    let p = params([
        ("n", spec.n as i64),
        ("m", spec.m as i64),
        ("points", points.len() as i64),
        ("expected", expected as i64),
    ]);
    Ok(CheckReport::conclude("point-count", spec.ring.clone(), p, 1, found, Expectation::Holds)
        .with_elapsed(timer.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let f2 = Ring::prime_field(2).unwrap();
        assert_eq!(grassmannian_points(&f2, 2, 1).unwrap().len(), 3);
        assert_eq!(grassmannian_points(&f2, 4, 2).unwrap().len(), 35);
        let d2 = Ring::dual_numbers(2).unwrap();
        assert_eq!(grassmannian_points(&d2, 2, 1).unwrap().len(), 6);
        assert_eq!(expected_point_count(&d2, 2, 1), Some(6));
    }

    #[test]
    fn dual_line_order() {
        let d2 = Ring::dual_numbers(2).unwrap();
        let pts = grassmannian_points(&d2, 2, 1).unwrap();
        let firsts: Vec<_> = pts.iter().map(|p| p.basis().get(1, 0).clone()).take(4).collect();
        // the lines (1, x) come first, in element order
        assert_eq!(firsts, d2.elements().unwrap().collect::<Vec<_>>());
    }

    #[test]
    fn envelope() {
        let f5 = Ring::prime_field(5).unwrap();
        let spec = EnumerationSpec::grassmannian(f5, 2, 1);
        assert!(enumerate_grassmannian(&spec).is_err());
        assert_eq!(enumerate_grassmannian(&spec.allow_large()).unwrap().len(), 6);
        let z = EnumerationSpec::grassmannian(Ring::integer(), 2, 1);
        assert_eq!(enumerate_grassmannian(&z), Err(Error::InfiniteRing));
    }
}
