use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::numtheory::{divisors, euler_phi, factor, mobius};

/// The `n`-th cyclotomic polynomial (memoized).
///
/// Squarefree `n = m·p` uses the exact division `Φ_n(x) = Φ_m(x^p) / Φ_m(x)`;
/// other `n` reduce to the radical through `Φ_n(x) = Φ_{rad n}(x^{n / rad n})`.
pub fn cyclotomic(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic: n must be positive");
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let poly = Arc::new(build(n));
    cache.write().unwrap().insert(n, poly.clone());
    poly
}

fn build(n: u64) -> IntPoly {
    if n == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    let f = factor(n);
    let rad = f.radical();
    if rad != n {
        return cyclotomic(rad).compose_power((n / rad) as usize);
    }
    let p = f.factors().last().expect("n > 1").0;
    let m = n / p;
    if m == 1 {
        return IntPoly::new(vec![BigInt::one(); p as usize]);
    }
    let phi_m = cyclotomic(m);
    phi_m
        .compose_power(p as usize)
        .div_exact(&phi_m)
        .expect("cyclotomic polynomials are monic")
        .expect("Φ_m(x) divides Φ_m(x^p) for p ∤ m")
}

/// `Φ_n` from the product `∏_{d|n} (1 − x^d)^{μ(n/d)}`, expanded as a power
/// series to degree `φ(n)`; the sign is fixed so that `Φ_1 = x − 1`.
pub fn cyclotomic_mobius(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic_mobius: n must be positive");
    let len = euler_phi(n) as usize + 1;
    let mut series = vec![BigInt::zero(); len];
    series[0] = BigInt::one();
    for d in divisors(n) {
        let d_usize = d as usize;
        match mobius(n / d) {
            1 => {
                for i in (d_usize..len).rev() {
                    let prev = series[i - d_usize].clone();
                    series[i] -= prev;
                }
            }
            -1 => {
                for i in d_usize..len {
                    let prev = series[i - d_usize].clone();
                    series[i] += prev;
                }
            }
            _ => {}
        }
    }
    let poly = IntPoly::new(series);
    if n == 1 {
        -poly
    } else {
        poly
    }
}

/// `Ψ_n(x) = (x^n − 1) / Φ_n(x)`.
pub fn inverse_cyclotomic(n: u64) -> IntPoly {
    IntPoly::x_pow_minus_one(n as usize)
        .div_exact(&cyclotomic(n))
        .expect("monic")
        .expect("Φ_n divides x^n − 1")
}

/// The Coxeter polynomial `E_n(x) = x^n + x^{n−1} − Σ_{k=3}^{n−3} x^k + x + 1`
/// for `n ≥ 6`.
pub fn coxeter_poly(n: usize) -> crate::Result<IntPoly> {
    if n < 6 {
        return Err(crate::Error::Domain(format!("E_n needs n ≥ 6, got {n}")));
    }
    let mut c = vec![BigInt::zero(); n + 1];
    for k in 3..=n - 3 {
        c[k] = -BigInt::one();
    }
    for k in [0, 1, n - 1, n] {
        c[k] = BigInt::one();
    }
    Ok(IntPoly::new(c))
}
