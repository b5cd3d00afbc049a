//! Small counting helpers shared by the index enumerators.

use alloc::vec::Vec;

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Gaussian binomial `[n choose m]_q`, the number of `m`-dimensional
/// subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, m: u32, q: u64) -> u64 {
    if m > n {
        return 0;
    }
    let q = u128::from(q);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..m {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    u64::try_from(num / den).expect("Gaussian binomial overflows u64")
}

/// Strictly increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
