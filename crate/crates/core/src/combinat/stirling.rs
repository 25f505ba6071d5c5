use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::table_cache_limit;

type Triangle = Vec<Vec<BigInt>>;

/// Grows `rows` so that row `k` exists; `step(k, j, prev)` yields entry
/// `(k, j)` from row `k−1`.
fn extend(rows: &mut Triangle, k: usize, step: fn(usize, usize, &[BigInt]) -> BigInt) {
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= k {
        let m = rows.len();
        let prev = &rows[m - 1];
        let row: Vec<BigInt> = (0..=m).map(|j| step(m, j, prev)).collect();
        rows.push(row);
    }
}

fn entry(prev: &[BigInt], j: usize) -> BigInt {
    prev.get(j).cloned().unwrap_or_default()
}

fn first_step(k: usize, j: usize, prev: &[BigInt]) -> BigInt {
    let left = if j == 0 { BigInt::zero() } else { entry(prev, j - 1) };
    left - BigInt::from(k - 1) * entry(prev, j)
}

// The factor on the second term is the block index j.
fn second_step(_k: usize, j: usize, prev: &[BigInt]) -> BigInt {
    let left = if j == 0 { BigInt::zero() } else { entry(prev, j - 1) };
    left + BigInt::from(j) * entry(prev, j)
}

fn lookup(
    cache: &'static OnceLock<RwLock<Triangle>>,
    k: usize,
    j: usize,
    step: fn(usize, usize, &[BigInt]) -> BigInt,
) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    let cache = cache.get_or_init(Default::default);
    if let Some(row) = cache.read().unwrap().get(k) {
        return row[j].clone();
    }
    if k > table_cache_limit() {
        let mut local = cache.read().unwrap().clone();
        extend(&mut local, k, step);
        return local[k][j].clone();
    }
    let mut rows = cache.write().unwrap();
    extend(&mut rows, k, step);
    rows[k][j].clone()
}

/// Signed Stirling number of the first kind: coefficient of `x^j` in the
/// falling factorial `x(x−1)…(x−k+1)`.
pub fn stirling_first(k: usize, j: usize) -> BigInt {
    static CACHE: OnceLock<RwLock<Triangle>> = OnceLock::new();
    lookup(&CACHE, k, j, first_step)
}

/// Stirling number of the second kind: number of partitions of a `k`-set
/// into `j` non-empty blocks.
pub fn stirling_second(k: usize, j: usize) -> BigInt {
    static CACHE: OnceLock<RwLock<Triangle>> = OnceLock::new();
    lookup(&CACHE, k, j, second_step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;
    use crate::rational::factorial;

    #[test]
    fn first_kind_examples() {
        assert_eq!(stirling_first(4, 4), BigInt::from(1));
        assert_eq!(stirling_first(4, 1), BigInt::from(-6));
        assert_eq!(stirling_first(4, 2), BigInt::from(11));
        assert_eq!(stirling_first(4, 0), BigInt::zero());
        assert_eq!(stirling_first(3, 5), BigInt::zero());
        for k in 1..=15usize {
            let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(stirling_first(k, 1), BigInt::from(sign) * factorial(k as u64 - 1));
        }
    }

    /// Counts set partitions of `{0..k}` into exactly `j` blocks by
    /// restricted-growth strings.
    fn count_set_partitions(k: usize, j: usize) -> u64 {
        fn go(i: usize, k: usize, used: usize, j: usize) -> u64 {
            if i == k {
                return (used == j) as u64;
            }
            (0..=used.min(j.saturating_sub(1)))
                .map(|b| go(i + 1, k, used.max(b + 1), j))
                .sum()
        }
        if k == 0 {
            return (j == 0) as u64;
        }
        go(0, k, 0, j)
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(stirling_second(5, 2), BigInt::from(15));
        assert_eq!(stirling_second(4, 2), BigInt::from(count_set_partitions(4, 2)));
        assert_eq!(count_set_partitions(4, 2), 7);
        for k in 1..=20usize {
            assert_eq!(stirling_second(k, k), BigInt::one());
            assert_eq!(stirling_second(k, 1), BigInt::one());
            assert_eq!(stirling_second(k, 2), (BigInt::one() << (k - 1)) - 1);
            assert_eq!(stirling_second(k, 0), BigInt::zero());
        }
        for k in 0..=8 {
            for j in 0..=k {
                assert_eq!(stirling_second(k, j), BigInt::from(count_set_partitions(k, j)), "({k},{j})");
            }
        }
    }

    #[test]
    fn falling_factorial_coefficients() {
        for k in 0..=10usize {
            let mut p = IntPoly::one();
            for i in 0..k {
                p = &p * &IntPoly::from_i64(&[-(i as i64), 1]);
            }
            for j in 0..=k {
                assert_eq!(p.coeff(j), stirling_first(k, j), "k={k} j={j}");
            }
        }
    }

    #[test]
    fn matrices_are_inverse() {
        for k in 1..=12usize {
            for j in 1..=12usize {
                let cs: BigInt = (1..=k).map(|t| stirling_first(k, t) * stirling_second(t, j)).sum();
                let sc: BigInt = (1..=k).map(|t| stirling_second(k, t) * stirling_first(t, j)).sum();
                let delta = BigInt::from((k == j) as i64);
                assert_eq!(cs, delta);
                assert_eq!(sc, delta);
            }
        }
    }
}
