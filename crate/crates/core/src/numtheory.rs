//! Multiplicative arithmetic functions and Ramanujan sums.
//!
//! Integers are factored by trial division against a cached prime sieve.
//! Factorizations and Jordan totients are memoized behind read-mostly locks,
//! so every function here may be called concurrently.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::rational::frac;

/// Primes below this bound are sieved once; larger factors fall back to
/// odd trial division.
const SIEVE_LIMIT: u64 = 1 << 16;

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredInt {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInt {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Product of the distinct prime factors.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = SIEVE_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u64);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

fn factor_uncached(n: u64) -> FactoredInt {
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        push(p, &mut rest);
    }
    let mut p = SIEVE_LIMIT + 1;
    while rest > 1 && p.saturating_mul(p) <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    FactoredInt { value: n, factors }
}

/// Prime factorization of `n ≥ 1` (memoized).
pub fn factor(n: u64) -> Arc<FactoredInt> {
    assert!(n >= 1, "factor: n must be positive");
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<FactoredInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.read().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(factor_uncached(n));
    cache.write().unwrap().insert(n, f.clone());
    f
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n).factors() == [(n, 1)]
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factor(n).factors() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    let f = factor(n);
    if !f.is_squarefree() {
        return 0;
    }
    if f.factors().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `μ(t)` extended by zero to non-integral `t = num/den`.
pub fn mobius_ratio(num: u64, den: u64) -> i64 {
    if num % den == 0 {
        mobius(num / den)
    } else {
        0
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factor(n)
        .factors()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Dedekind's psi function `n ∏_{p|n} (1 + 1/p)`.
pub fn dedekind_psi(n: u64) -> u64 {
    factor(n)
        .factors()
        .iter()
        .map(|&(p, e)| (p + 1) * p.pow(e - 1))
        .product()
}

/// `p` if `n` is a power of the prime `p`, else `1`; this is `exp(Λ(n))`.
pub fn prime_power_value(n: u64) -> u64 {
    match factor(n).factors() {
        [(p, _)] => *p,
        _ => 1,
    }
}

/// Jordan's totient `J_k(n) = n^k ∏_{p|n} (1 − p^{−k})` (memoized).
pub fn jordan_totient(k: u32, n: u64) -> BigInt {
    assert!(k >= 1, "jordan_totient: k must be positive");
    static CACHE: OnceLock<RwLock<HashMap<(u32, u64), BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&(k, n)) {
        return v.clone();
    }
    let v = factor(n)
        .factors()
        .iter()
        .map(|&(p, e)| {
            let p = BigInt::from(p);
            let lower: BigInt = Pow::pow(&p, (e - 1) * k);
            let upper: BigInt = Pow::pow(&p, e * k);
            upper - lower
        })
        .fold(BigInt::one(), |acc, x| acc * x);
    cache.write().unwrap().insert((k, n), v.clone());
    v
}

/// Ramanujan sum `r_k(n) = Σ_{d | (n,k)} μ(n/d) d`; `k = 0` is allowed and
/// gives `φ(n)`.
pub fn ramanujan_sum(k: u64, n: u64) -> i64 {
    assert!(n >= 1, "ramanujan_sum: n must be positive");
    let g = gcd(n, k);
    divisors(g)
        .into_iter()
        .map(|d| mobius(n / d) * d as i64)
        .sum()
}

/// Ramanujan sum via `μ(n/(n,k)) φ(n) / φ(n/(n,k))`.
pub fn ramanujan_sum_holder(k: u64, n: u64) -> i64 {
    assert!(n >= 1, "ramanujan_sum_holder: n must be positive");
    let m = n / gcd(n, k);
    mobius(m) * (euler_phi(n) / euler_phi(m)) as i64
}

/// The multiplier relating `Φ_n(x)` to `Φ_{n α(n)}(−x)`: `2` for odd `n`,
/// `1/2` when `2 ∥ n`, `1` when `4 | n`.
pub fn alpha(n: u64) -> BigRational {
    assert!(n >= 1, "alpha: n must be positive");
    if n % 2 == 1 {
        frac(2, 1)
    } else if n % 4 == 2 {
        frac(1, 2)
    } else {
        frac(1, 1)
    }
}

/// The integer `n·α(n)`.
pub fn n_alpha(n: u64) -> u64 {
    if n % 2 == 1 {
        2 * n
    } else if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Euler totients of `0..=limit` (index 0 unused), shared and grown on demand.
pub fn totients_up_to(limit: usize) -> Arc<Vec<u64>> {
    static CACHE: OnceLock<RwLock<Arc<Vec<u64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(Arc::new(Vec::new())));
    {
        let cur = cache.read().unwrap();
        if cur.len() > limit {
            return cur.clone();
        }
    }
    let size = (limit + 1).max(1024);
    let mut phi: Vec<u64> = (0..size as u64).collect();
    for i in 2..size {
        if phi[i] == i as u64 {
            let mut j = i;
            while j < size {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    let table = Arc::new(phi);
    *cache.write().unwrap() = table.clone();
    table
}
