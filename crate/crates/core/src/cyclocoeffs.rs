//! The coefficients `a_n(k)` of `Φ_n(x) = Σ_k a_n(k) x^k` by five routes:
//! reading off the polynomial, Möller's partition sum, the Ramanujan-sum
//! recurrence, complete Bell polynomials at `0`, and re-expansion of the
//! Taylor series at `1`.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::combinat::{bell_complete, bell_complete_all, partitions};
use crate::cycloderiv::log_deriv_phi_at_one;
use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, mobius_ratio, prime_power_value, ramanujan_sum};
use crate::poly::cyclotomic;
use crate::rational::{factorial, from_bigint, int};

static TAYLOR_CAP: AtomicU64 = AtomicU64::new(64);

/// Largest `φ(n)` accepted by [`coeff_taylor_from_one`].
pub fn taylor_cap() -> u64 {
    TAYLOR_CAP.load(Ordering::Relaxed)
}

pub fn set_taylor_cap(cap: u64) {
    TAYLOR_CAP.store(cap, Ordering::Relaxed);
}

fn need_n_at_least_two(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// `a_n(k)` read from [`cyclotomic`]; zero beyond the degree.
pub fn coeff_direct(n: u64, k: usize) -> BigInt {
    cyclotomic(n).coeff(k)
}

/// `(−1)^λ C(μ, λ)` for `μ ∈ {−1, 0, 1}`.
fn signed_binomial(mu: i64, lambda: u32) -> i64 {
    match (mu, lambda) {
        (_, 0) | (-1, _) => 1,
        (1, 1) => -1,
        _ => 0,
    }
}

/// Möller's formula
/// `a_n(k) = Σ_{λ ∈ 𝒫(k)} ∏_j (−1)^{λ_j} C(μ(n/j), λ_j)`, with `μ(n/j) = 0`
/// when `j ∤ n`. For `n = 1` the product is `1 − x = −Φ_1`, so the sign is
/// flipped.
pub fn coeff_moller(n: u64, k: usize) -> BigInt {
    assert!(n >= 1, "coeff_moller: n must be positive");
    if k == 0 {
        return BigInt::from(if n == 1 { -1 } else { 1 });
    }
    let mus: Vec<i64> = (1..=k as u64).map(|j| mobius_ratio(n, j)).collect();
    let mut total = 0i64;
    'partitions: for p in partitions(k).iter() {
        let mut term = 1i64;
        for (i, &lambda) in p.multiplicities().iter().enumerate() {
            if lambda == 0 {
                continue;
            }
            term *= signed_binomial(mus[i], lambda);
            if term == 0 {
                continue 'partitions;
            }
        }
        total += term;
    }
    if n == 1 {
        total = -total;
    }
    BigInt::from(total)
}

/// `(a_n(0), …, a_n(K))` by `a_n(k) = −(1/k) Σ_{j<k} a_n(j) r_{k−j}(n)`.
pub fn coeff_prefix_recurrence(n: u64, kmax: usize) -> Result<Vec<BigInt>> {
    need_n_at_least_two(n)?;
    let r: Vec<i64> = (0..=kmax as u64).map(|k| ramanujan_sum(k, n)).collect();
    let mut a = vec![BigInt::from(1)];
    for k in 1..=kmax {
        let s: BigInt = (0..k).map(|j| &a[j] * r[k - j]).sum();
        let (q, rem) = (-s).div_rem(&BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::Invariant(format!("a_{n}({k}) is not an integer")));
        }
        a.push(q);
    }
    Ok(a)
}

fn bell_arguments_at_zero(n: u64, k: usize) -> Vec<BigRational> {
    (1..=k)
        .map(|j| -from_bigint(factorial(j as u64 - 1)) * int(ramanujan_sum(j as u64, n)))
        .collect()
}

/// `a_n(k) = ℬ_k(−0! r_1(n), …, −(k−1)! r_k(n)) / k!`.
pub fn coeff_bell(n: u64, k: usize) -> Result<BigInt> {
    need_n_at_least_two(n)?;
    let value = bell_complete(k, &bell_arguments_at_zero(n, k))? / from_bigint(factorial(k as u64));
    if !value.is_integer() {
        return Err(Error::Invariant(format!("Bell value for a_{n}({k}) is {value}")));
    }
    Ok(value.to_integer())
}

/// All coefficients of `Φ_n` from its Taylor expansion at `1`:
/// `a_n(k) = e^{Λ(n)}/k! Σ_{t=k}^{φ(n)} (−1)^{t−k}/(t−k)! ℬ_t(L_1, …, L_t)`,
/// where `L_j = (log Φ_n)^{(j)}(1)`.
pub fn coeffs_taylor_from_one(n: u64) -> Result<Vec<BigInt>> {
    need_n_at_least_two(n)?;
    let deg = euler_phi(n);
    if deg > taylor_cap() {
        return Err(Error::Resource(format!(
            "φ({n}) = {deg} exceeds the Taylor-route cap {}",
            taylor_cap()
        )));
    }
    let deg = deg as usize;
    let logs = (1..=deg).map(|j| log_deriv_phi_at_one(n, j)).collect::<Result<Vec<_>>>()?;
    let bells = bell_complete_all(&logs, deg)?;
    let base = int(prime_power_value(n) as i64);
    let mut out = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let mut s = BigRational::zero();
        for t in k..=deg {
            let term = &bells[t] / from_bigint(factorial((t - k) as u64));
            if (t - k) % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        let value = s * &base / from_bigint(factorial(k as u64));
        if !value.is_integer() {
            return Err(Error::Invariant(format!("Taylor value for a_{n}({k}) is {value}")));
        }
        out.push(value.to_integer());
    }
    Ok(out)
}

/// `a_n(k)` for `0 ≤ k ≤ φ(n)` through [`coeffs_taylor_from_one`].
pub fn coeff_taylor_from_one(n: u64, k: usize) -> Result<BigInt> {
    need_n_at_least_two(n)?;
    if k as u64 > euler_phi(n) {
        return Err(Error::Domain(format!("k = {k} exceeds deg Φ_{n} = {}", euler_phi(n))));
    }
    Ok(coeffs_taylor_from_one(n)?.swap_remove(k))
}

/// Runs every applicable route for `a_n(k)` and returns the common value,
/// or an invariant error naming the disagreeing route.
pub fn coeff_all(n: u64, k: usize) -> Result<BigInt> {
    let direct = coeff_direct(n, k);
    let mut routes: Vec<(&str, BigInt)> = vec![("moller", coeff_moller(n, k))];
    if n >= 2 {
        routes.push(("recurrence", coeff_prefix_recurrence(n, k)?.swap_remove(k)));
        routes.push(("bell", coeff_bell(n, k)?));
        if euler_phi(n) <= taylor_cap() && k as u64 <= euler_phi(n) {
            routes.push(("taylor1", coeff_taylor_from_one(n, k)?));
        }
    }
    for (name, v) in routes {
        if v != direct {
            return Err(Error::Invariant(format!(
                "a_{n}({k}): {name} gives {v}, direct gives {direct}"
            )));
        }
    }
    Ok(direct)
}

/// True when every coefficient of `Φ_n` lies in `{−1, 0, 1}`.
pub fn is_flat(n: u64) -> bool {
    cyclotomic(n).coeffs().iter().all(|c| c.abs() <= BigInt::from(1))
}
