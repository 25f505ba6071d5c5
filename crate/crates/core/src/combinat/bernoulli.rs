use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::table_cache_limit;
use crate::rational::{binomial, frac, from_bigint};

/// Extends `table` (holding `B_0..B_{len-1}`) up to index `n` using
/// `B_n = lead − Σ_{k<n} C(n,k) B_k / (n−k+1)`.
fn extend(table: &mut Vec<BigRational>, n: usize, lead: &BigRational) {
    while table.len() <= n {
        let m = table.len() as u64;
        let sum = table.iter().enumerate().fold(BigRational::zero(), |acc, (k, b)| {
            acc + from_bigint(binomial(m, k as u64)) * b / frac((m - k as u64 + 1) as i64, 1)
        });
        let value = if m == 0 { BigRational::one() } else { lead - sum };
        table.push(value);
    }
}

fn lookup(cache: &'static OnceLock<RwLock<Vec<BigRational>>>, n: usize, lead: BigRational) -> BigRational {
    let cache = cache.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(n) {
        return v.clone();
    }
    if n > table_cache_limit() {
        let mut local = cache.read().unwrap().clone();
        extend(&mut local, n, &lead);
        return local[n].clone();
    }
    let mut table = cache.write().unwrap();
    extend(&mut table, n, &lead);
    table[n].clone()
}

/// `B_n^+ = B_n(1)`, so `B_1^+ = 1/2`.
pub fn bernoulli_plus(n: usize) -> BigRational {
    static CACHE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    lookup(&CACHE, n, BigRational::one())
}

/// `B_n^- = B_n(0)`, so `B_1^- = −1/2`.
pub fn bernoulli_minus(n: usize) -> BigRational {
    static CACHE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    lookup(&CACHE, n, BigRational::zero())
}
