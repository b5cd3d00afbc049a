use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::index::{sym_basis, wedge_basis};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rings::{Ring, RingValue};

/// Multinomial coefficient `top! / ∏ parts!`, with the convention that it
/// vanishes as soon as one part is negative.
pub fn multinomial(top: u64, parts: &[i64]) -> Result<BigUint> {
    if parts.iter().any(|&k| k < 0) {
        return Ok(BigUint::zero());
    }
    let sum: i128 = parts.iter().map(|&k| i128::from(k)).sum();
    if sum != i128::from(top) {
        return Err(Error::MultinomialMismatch { top, sum });
    }
    // product of binomials C(k₁+…+k_i, k_i)
    let mut acc = BigUint::one();
    let mut running = 0u64;
    for &k in parts {
        let k = k as u64;
        for i in 1..=k {
            acc *= running + i;
            acc /= i;
        }
        running += k;
    }
    Ok(acc)
}

fn common_ring(ms: &[Matrix]) -> Result<&Ring> {
    let first = ms.first().ok_or(Error::EmptyProduct)?;
    if ms.iter().any(|m| m.ring() != first.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(first.ring())
}

fn kron2(a: &Matrix, b: &Matrix) -> Matrix {
    let ring = a.ring();
    let (br, bc) = (b.rows(), b.cols());
    Matrix::from_fn(ring, a.rows() * br, a.cols() * bc, |i, j| {
        let x = a.get(i / br, j / bc);
        if ring.is_zero(x) {
            return ring.zero();
        }
        ring.mul_unchecked(x, b.get(i % br, j % bc))
    })
}

/// Kronecker product `M₁ ⊗ … ⊗ M_k`, rows and columns indexed by
/// lexicographically ordered tensor indices.
pub fn kronecker(ms: &[Matrix]) -> Result<Matrix> {
    common_ring(ms)?;
    let mut acc = ms[0].clone();
    for m in &ms[1..] {
        acc = kron2(&acc, m);
    }
    Ok(acc)
}

/// The `r`-th compound matrix `∧^r M`: entry `(I, J)` is the minor of `M`
/// on rows `I` and columns `J`, both running over increasing tuples in lex
/// order.
pub fn compound(m: &Matrix, r: usize) -> Result<Matrix> {
    if r == 0 || r > m.rows().min(m.cols()) {
        return Err(Error::PowerOutOfRange { power: r, reason: "need 1 <= r <= min(rows, cols)" });
    }
    if r == 1 {
        return Ok(m.clone());
    }
    let rows = wedge_basis(m.rows(), r);
    let cols = wedge_basis(m.cols(), r);
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for i in &rows {
        for j in &cols {
            entries.push(m.minor(i.entries(), j.entries())?);
        }
    }
    Matrix::new(m.ring().clone(), rows.len(), cols.len(), entries)
}

/// Matrix of `Sym^r` of the map `M`, in monomial bases.
///
/// The column of the source monomial `e₁^{j₁}⋯e_m^{j_m}` is the expansion of
/// `∏_k (M e_k)^{j_k}`, with no divided-power normalisation, so multinomial
/// coefficients appear in the entries.
pub fn sym_power(m: &Matrix, r: usize) -> Result<Matrix> {
    if r == 0 {
        return Err(Error::PowerOutOfRange { power: r, reason: "need r >= 1" });
    }
    let ring = m.ring();
    let targets = sym_basis(m.rows(), r);
    let position: BTreeMap<&[u32], usize> = targets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.exponents(), i))
        .collect();
    let sources = sym_basis(m.cols(), r);
    let columns: Vec<Vec<RingValue>> = (0..m.cols()).map(|k| m.column(k)).collect();

    let mut out = alloc::vec![ring.zero(); targets.len() * sources.len()];
    for (j, source) in sources.iter().enumerate() {
        let mut form: BTreeMap<Vec<u32>, RingValue> = BTreeMap::new();
        form.insert(alloc::vec![0; m.rows()], ring.one());
        for (k, &e) in source.exponents().iter().enumerate() {
            for _ in 0..e {
                form = multiply_by_linear_form(ring, &form, &columns[k]);
            }
        }
        for (exps, c) in form {
            out[position[exps.as_slice()] * sources.len() + j] = c;
        }
    }
    Matrix::new(ring.clone(), targets.len(), sources.len(), out)
}

fn multiply_by_linear_form(
    ring: &Ring,
    form: &BTreeMap<Vec<u32>, RingValue>,
    linear: &[RingValue],
) -> BTreeMap<Vec<u32>, RingValue> {
    let mut out: BTreeMap<Vec<u32>, RingValue> = BTreeMap::new();
    for (exps, c) in form {
        for (i, a) in linear.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            let mut e = exps.clone();
            e[i] += 1;
            let t = ring.mul_unchecked(c, a);
            let slot = out.entry(e).or_insert_with(|| ring.zero());
            *slot = ring.add_unchecked(slot, &t);
        }
    }
    out.retain(|_, c| !ring.is_zero(c));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), BigUint::from(2u32));
        assert_eq!(multinomial(4, &[2, -1, 3]).unwrap(), BigUint::zero());
        // arrangements of the multiset {a,a,b,b,c}
        let mut words = alloc::collections::BTreeSet::new();
        let letters = ['a', 'a', 'b', 'b', 'c'];
        for perm in permutations(5) {
            let w: Vec<char> = perm.iter().map(|&i| letters[i]).collect();
            words.insert(w);
        }
        assert_eq!(words.len(), 30);
        assert_eq!(multinomial(5, &[2, 2, 1]).unwrap(), BigUint::from(30u32));
        assert!(matches!(multinomial(5, &[2, 2]), Err(Error::MultinomialMismatch { .. })));
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn kronecker_examples() {
        let q = Ring::rational();
        let i2 = Matrix::identity(&q, 2).unwrap();
        let i3 = Matrix::identity(&q, 3).unwrap();
        assert_eq!(kronecker(&[i2, i3]).unwrap(), Matrix::identity(&q, 6).unwrap());

        let a = Matrix::from_i64(&q, &[&[1, 1], &[0, 1]]).unwrap();
        let b = Matrix::from_i64(&q, &[&[2, 0], &[0, 3]]).unwrap();
        let k = kronecker(&[a, b]).unwrap();
        assert_eq!(
            k,
            Matrix::from_i64(&q, &[&[2, 0, 2, 0], &[0, 3, 0, 3], &[0, 0, 2, 0], &[0, 0, 0, 3]]).unwrap()
        );
        assert_eq!(k.determinant().unwrap(), q.from_i64(36));

        let z = Ring::integer();
        let x = Matrix::from_i64(&z, &[&[5]]).unwrap();
        let y = Matrix::from_i64(&z, &[&[-3]]).unwrap();
        assert_eq!(kronecker(&[x, y]).unwrap(), Matrix::from_i64(&z, &[&[-15]]).unwrap());
        assert_eq!(kronecker(&[]), Err(Error::EmptyProduct));
    }

    #[test]
    fn compound_examples() {
        let z = Ring::integer();
        let m = Matrix::from_i64(&z, &[&[1, 2, 0], &[3, -1, 4], &[2, 2, 5]]).unwrap();
        assert_eq!(compound(&m, 1).unwrap(), m);
        let i3 = Matrix::identity(&z, 3).unwrap();
        assert_eq!(compound(&i3, 2).unwrap(), i3);
        let top = compound(&m, 3).unwrap();
        assert_eq!((top.rows(), top.cols()), (1, 1));
        assert_eq!(top.get(0, 0), &m.determinant().unwrap());
        assert!(compound(&m, 0).is_err());
        assert!(compound(&m, 4).is_err());
        let rect = Matrix::from_i64(&z, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]).unwrap();
        let c = compound(&rect, 2).unwrap();
        assert_eq!((c.rows(), c.cols()), (6, 1));
        assert_eq!(c.column(0), [1, 0, 0, 0, 0, 0].map(|x| z.from_i64(x)).to_vec());
    }

    #[test]
    fn sym_power_examples() {
        let z = Ring::integer();
        let a = Matrix::from_i64(&z, &[&[3]]).unwrap();
        assert_eq!(sym_power(&a, 4).unwrap(), Matrix::from_i64(&z, &[&[81]]).unwrap());
        let m = Matrix::from_i64(&z, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(sym_power(&m, 1).unwrap(), m);

        let d = Ring::dual_numbers(2).unwrap();
        let v = Matrix::from_rows(d.clone(), vec![vec![d.one()], vec![d.epsilon().unwrap()]]).unwrap();
        let s = sym_power(&v, 2).unwrap();
        assert_eq!(s.column(0), vec![d.one(), d.zero(), d.zero()]);

        let m = Matrix::from_i64(&z, &[&[1, 1], &[2, 1]]).unwrap();
        let s = sym_power(&m, 2).unwrap();
        // columns: e1² ↦ (e1+2e2)², e1e2 ↦ (e1+2e2)(e1+e2), e2² ↦ (e1+e2)²
        assert_eq!(s, Matrix::from_i64(&z, &[&[1, 1, 1], &[4, 3, 2], &[4, 2, 1]]).unwrap());
        assert!(sym_power(&m, 0).is_err());
    }
}
