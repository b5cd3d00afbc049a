//! Seeded random ring elements and matrices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rings::{Ring, RingKind, RingValue};

/// Integer entries are drawn from `[-INTEGER_ENTRY_BOUND, INTEGER_ENTRY_BOUND]`.
pub const INTEGER_ENTRY_BOUND: i64 = 9;

/// A random element: uniform over a finite ring, small integers or
/// fractions otherwise, and for polynomials an affine form with small
/// coefficients.
pub fn random_value<R: Rng + ?Sized>(ring: &Ring, rng: &mut R) -> RingValue {
    let b = INTEGER_ENTRY_BOUND;
    match ring.kind() {
        RingKind::Integer => ring.from_i64(rng.gen_range(-b..=b)),
        RingKind::Rational => {
            let q = BigRational::new(BigInt::from(rng.gen_range(-b..=b)), BigInt::from(rng.gen_range(1..=5)));
            RingValue::Rat(q)
        }
        RingKind::PrimeField { p } => RingValue::Residue(rng.gen_range(0..*p)),
        RingKind::DualNumbers { p } => RingValue::Dual(rng.gen_range(0..*p), rng.gen_range(0..*p)),
        RingKind::PolyOverInt { variables } => {
            let mut acc = ring.from_i64(rng.gen_range(-3..=3));
            for i in 0..variables.len() {
                let c = ring.from_i64(rng.gen_range(-2..=2));
                let x = ring.var(i).expect("index below the variable count");
                acc = ring.add_unchecked(&acc, &ring.mul_unchecked(&c, &x));
            }
            acc
        }
    }
}

pub fn random_matrix<R: Rng + ?Sized>(ring: &Ring, rows: usize, cols: usize, rng: &mut R) -> Result<Matrix> {
    let entries = (0..rows * cols).map(|_| random_value(ring, rng)).collect();
    Matrix::new(ring.clone(), rows, cols, entries)
}

/// Random diagonal matrix with entries from [`random_value`].
pub fn random_diagonal<R: Rng + ?Sized>(ring: &Ring, n: usize, rng: &mut R) -> Result<Matrix> {
    let mut entries = alloc::vec![ring.zero(); n * n];
    for i in 0..n {
        entries[i * n + i] = random_value(ring, rng);
    }
    Matrix::new(ring.clone(), n, n, entries)
}

/// Every `rows × cols` matrix over a finite ring, in odometer order with
/// the last entry varying slowest.
pub fn all_matrices(ring: &Ring, rows: usize, cols: usize) -> Result<Vec<Matrix>> {
    let elements: Vec<RingValue> = ring.elements()?.collect();
    let len = rows * cols;
    let total = (elements.len() as u128).checked_pow(len as u32).filter(|&t| t <= 1 << 24);
    let Some(total) = total else {
        return Err(Error::InvalidParameters(alloc::format!(
            "{}^{len} matrices is too many to enumerate",
            elements.len()
        )));
    };
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = alloc::vec![0usize; len];
    loop {
        let entries = digits.iter().map(|&d| elements[d].clone()).collect();
        out.push(Matrix::new(ring.clone(), rows, cols, entries)?);
        let mut k = 0;
        while k < len {
            digits[k] += 1;
            if digits[k] < elements.len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k == len {
            return Ok(out);
        }
    }
}
