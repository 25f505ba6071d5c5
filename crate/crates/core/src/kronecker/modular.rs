//! Screening `Φ_d | f` by evaluation at a primitive `d`-th root of unity in
//! `𝔽_p` with `p ≡ 1 (mod d)`. A zero is necessary for divisibility.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::numtheory::factor;
use crate::poly::IntPoly;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A prime `p ≡ 1 (mod d)` near `2^60` and an element of order exactly `d`.
fn prime_and_root(d: u64) -> (u64, u64) {
    static CACHE: OnceLock<RwLock<HashMap<u64, (u64, u64)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&v) = cache.read().unwrap().get(&d) {
        return v;
    }
    let mut t = (1u64 << 60) / d;
    let p = loop {
        let candidate = d * t + 1;
        if is_prime_u64(candidate) {
            break candidate;
        }
        t += 1;
    };
    let primes: Vec<u64> = factor(d).primes().collect();
    let root = (2..)
        .map(|g| pow_mod(g, (p - 1) / d, p))
        .find(|&h| primes.iter().all(|&q| pow_mod(h, d / q, p) != 1))
        .expect("𝔽_p^× is cyclic");
    cache.write().unwrap().insert(d, (p, root));
    (p, root)
}

fn residue(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r.sign() == num_bigint::Sign::Minus { r + p } else { r };
    r.to_u64().expect("reduced modulo p")
}

/// `false` only if `f(ω) ≠ 0` in `𝔽_p` for a primitive `d`-th root `ω`,
/// which rules out `Φ_d | f`.
pub(crate) fn may_vanish_at_primitive_root(f: &IntPoly, d: u64) -> bool {
    let (p, w) = prime_and_root(d);
    let mut acc = 0u64;
    for c in f.coeffs().iter().rev() {
        acc = (mul_mod(acc, w, p) + residue(c, p)) % p;
    }
    acc == 0
}
