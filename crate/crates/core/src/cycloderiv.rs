//! Closed forms for derivatives and logarithmic derivatives of `Φ_n` and
//! `Ψ_n` at `0` and `±1`.
//!
//! Everything is exact; domain restrictions are reported as typed errors.
//! Each function has a direct counterpart in [`crate::poly`] (the
//! log-derivative oracle or plain differentiation) to test against.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{bernoulli_plus, exp_transform, stirling_first};
use crate::error::{Error, Result};
use crate::numtheory::{dedekind_psi, euler_phi, jordan_totient, n_alpha, prime_power_value, ramanujan_sum};
use crate::poly::IntPoly;
use crate::rational::{binomial, factorial, frac, from_bigint, int};

/// Row `k` of the coefficients `c_{k,j} = B_j^+ s(k,j)/j` (`1 ≤ j ≤ k`) with
/// `c_{k,0} = −Σ_j c_{k,j}`, so that `−(k−1)! σ_k(n) = Σ_j c_{k,j} n^j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CTable {
    pub k: usize,
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub entries: Vec<BigRational>,
}

impl CTable {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("c_{k,j} needs k ≥ 1".into()));
        }
        let mut entries = vec![BigRational::zero(); k + 1];
        for (j, entry) in entries.iter_mut().enumerate().skip(1) {
            *entry = c_coefficient(k, j);
        }
        let total: BigRational = entries.iter().sum();
        entries[0] = -total;
        Ok(CTable { k, entries })
    }

    pub fn get(&self, j: usize) -> &BigRational {
        &self.entries[j]
    }
}

/// `c_{k,j} = B_j^+ s(k,j) / j` for `j ≥ 1`.
pub fn c_coefficient(k: usize, j: usize) -> BigRational {
    assert!(j >= 1, "c_coefficient: j must be positive");
    bernoulli_plus(j) * from_bigint(stirling_first(k, j)) / int(j as i64)
}

/// `Σ_{j=1}^k c_{k,j} J_j(m)`, the common shape of the log-derivatives at `±1`.
pub fn jordan_combination(k: usize, m: u64) -> BigRational {
    (1..=k)
        .map(|j| c_coefficient(k, j) * from_bigint(jordan_totient(j as u32, m)))
        .sum()
}

fn need_order(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("derivative order k must be at least 1".into()));
    }
    Ok(())
}

fn need_n_at_least_two(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

fn sign(k: usize) -> BigRational {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn fact(k: usize) -> BigRational {
    from_bigint(factorial(k as u64))
}

/// `(log Φ_n)^{(k)}(0) = −(k−1)! r_k(n)` for `n ≥ 2`.
pub fn log_deriv_phi_at_zero(n: u64, k: usize) -> Result<BigRational> {
    need_n_at_least_two(n)?;
    need_order(k)?;
    Ok(-fact(k - 1) * int(ramanujan_sum(k as u64, n)))
}

/// `σ_k(n) = Σ_{j=1}^{n−1} (ζ_n^j − 1)^{−k}`, from
/// `−(k−1)! σ_k(n) = Σ_j c_{k,j}(n^j − 1)`.
pub fn sigma_k(k: usize, n: u64) -> Result<BigRational> {
    need_order(k)?;
    need_n_at_least_two(n)?;
    let nn = BigInt::from(n);
    let s: BigRational = (1..=k)
        .map(|j| c_coefficient(k, j) * from_bigint(Pow::pow(&nn, j as u32) - 1))
        .sum();
    Ok(-s / fact(k - 1))
}

/// `s_k(n) = −(log Φ_n)^{(k)}(1) / (k−1)!`, with `s_k(1) = 0`.
pub fn s_k(k: usize, n: u64) -> Result<BigRational> {
    need_order(k)?;
    if n == 1 {
        return Ok(BigRational::zero());
    }
    Ok(-log_deriv_phi_at_one(n, k)? / fact(k - 1))
}

/// `(log Φ_n)^{(k)}(1) = Σ_{j=1}^k (B_j^+ s(k,j)/j) J_j(n)` for `n ≥ 2`.
pub fn log_deriv_phi_at_one(n: u64, k: usize) -> Result<BigRational> {
    need_n_at_least_two(n)?;
    need_order(k)?;
    Ok(jordan_combination(k, n))
}

/// `(log Φ_n)^{(k)}(−1) = (−1)^k Σ_j (B_j^+ s(k,j)/j) J_j(n α_n)` for `n ≠ 2`.
pub fn log_deriv_phi_at_minus_one(n: u64, k: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if n == 2 {
        return Err(Error::Pole("Φ_2(-1) = 0".into()));
    }
    need_order(k)?;
    Ok(sign(k) * jordan_combination(k, n_alpha(n)))
}

/// `Φ_n(−1)`: `−2` for `n = 1`, `0` for `n = 2`, otherwise `Φ_{n α_n}(1)`.
pub fn phi_at_minus_one(n: u64) -> BigInt {
    match n {
        0 => panic!("phi_at_minus_one: n must be positive"),
        1 => BigInt::from(-2),
        2 => BigInt::zero(),
        _ => BigInt::from(prime_power_value(n_alpha(n))),
    }
}

/// `(Φ_n(1), Φ_n′(1), …, Φ_n^{(K)}(1))` through the exponential transform of
/// the log-derivatives at `1`.
pub fn phi_derivs_at_one(n: u64, kmax: usize) -> Result<Vec<BigRational>> {
    need_n_at_least_two(n)?;
    let base = int(prime_power_value(n) as i64);
    let logs = (1..=kmax).map(|k| log_deriv_phi_at_one(n, k)).collect::<Result<Vec<_>>>()?;
    let mut out = vec![base.clone()];
    out.extend(exp_transform(&logs, &base)?);
    Ok(out)
}

/// Same values as [`phi_derivs_at_one`], by the recurrence
/// `Φ_n^{(k)}(1) = Σ_{j=1}^k C(k−1, j−1) Φ_n^{(k−j)}(1) Σ_t (B_t^+ s(j,t)/t) J_t(n)`.
pub fn phi_derivs_at_one_recurrence(n: u64, kmax: usize) -> Result<Vec<BigRational>> {
    need_n_at_least_two(n)?;
    let logs = (1..=kmax).map(|k| jordan_combination(k, n)).collect::<Vec<_>>();
    let mut out = vec![int(prime_power_value(n) as i64)];
    for k in 1..=kmax {
        let v: BigRational = (1..=k)
            .map(|j| from_bigint(binomial(k as u64 - 1, j as u64 - 1)) * &out[k - j] * &logs[j - 1])
            .sum();
        out.push(v);
    }
    Ok(out)
}

/// `(Φ_n(−1), Φ_n′(−1), …, Φ_n^{(K)}(−1))` for `n ≠ 2`.
pub fn phi_derivs_at_minus_one(n: u64, kmax: usize) -> Result<Vec<BigRational>> {
    let logs = (1..=kmax)
        .map(|k| log_deriv_phi_at_minus_one(n, k))
        .collect::<Result<Vec<_>>>()?;
    if n == 2 {
        return Err(Error::Pole("Φ_2(-1) = 0".into()));
    }
    let base = from_bigint(phi_at_minus_one(n));
    let mut out = vec![base.clone()];
    out.extend(exp_transform(&logs, &base)?);
    Ok(out)
}

/// `S(f) = f‴/f′ − (3/2)(f″/f′)²` from `(f, f′, f″, f‴)` at a point.
pub fn schwarzian_from_derivs(derivs: &[BigRational]) -> Result<BigRational> {
    if derivs.len() < 4 {
        return Err(Error::Input("the Schwarzian needs derivatives up to order 3".into()));
    }
    if derivs[1].is_zero() {
        return Err(Error::Pole("f' vanishes at the point".into()));
    }
    let r2 = &derivs[2] / &derivs[1];
    Ok(&derivs[3] / &derivs[1] - frac(3, 2) * &r2 * &r2)
}

/// `S(Φ_n)(1) = −φ(n)²/8 − Ψ(n)²/24 + 1/2` for `n ≥ 2`.
pub fn schwarzian_phi_at_one(n: u64) -> Result<BigRational> {
    need_n_at_least_two(n)?;
    let phi = int(euler_phi(n) as i64);
    let psi = int(dedekind_psi(n) as i64);
    Ok(-(&phi * &phi) / int(8) - (&psi * &psi) / int(24) + frac(1, 2))
}

/// `N^{(k)}(z) = f^{(k)}(z) / ((deg f)^k f(z))`.
pub fn normalized_derivative(f: &IntPoly, k: usize, z: &BigRational) -> Result<BigRational> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::Domain("normalized derivative needs deg f ≥ 1".into())),
    };
    let fz = f.eval_rational(z);
    if fz.is_zero() {
        return Err(Error::Pole(format!("{f} vanishes at {z}")));
    }
    let scale: BigRational = Pow::pow(&int(d as i64), k as u32);
    Ok(f.derivative(k).eval_rational(z) / (scale * fz))
}

/// `(log Ψ_n)^{(k)}(0)`: `(k−1)! r_k(n)`, minus `(k−1)! n` when `n | k`.
pub fn log_deriv_inverse_cyclo_at_zero(n: u64, k: usize) -> Result<BigRational> {
    need_n_at_least_two(n)?;
    need_order(k)?;
    let mut r = ramanujan_sum(k as u64, n);
    if k as u64 % n == 0 {
        r -= n as i64;
    }
    Ok(fact(k - 1) * int(r))
}

/// `(log Ψ_n)^{(k)}(−1) = (−1)^k Σ_j (B_j^+ s(k,j)(2^j − 1)/j)(n^j − J_j(n))`
/// for odd `n ≥ 3`.
pub fn log_deriv_inverse_cyclo_at_minus_one(n: u64, k: usize) -> Result<BigRational> {
    if n % 2 == 0 {
        return Err(Error::Pole(format!("Ψ_{n}(-1) = 0 for even n")));
    }
    if n < 3 {
        return Err(Error::Domain(format!("n must be an odd integer ≥ 3, got {n}")));
    }
    need_order(k)?;
    let nn = BigInt::from(n);
    let s: BigRational = (1..=k)
        .map(|j| {
            let two_j = (BigInt::one() << j) - 1;
            let gap = Pow::pow(&nn, j as u32) - jordan_totient(j as u32, n);
            c_coefficient(k, j) * from_bigint(two_j * gap)
        })
        .sum();
    Ok(sign(k) * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::bell_complete;
    use crate::poly::{cyclotomic, inverse_cyclotomic, log_derivative_oracle};

    fn row(k: usize) -> Vec<BigRational> {
        CTable::new(k).unwrap().entries
    }

    #[test]
    fn c_table_rows() {
        assert_eq!(row(1), vec![frac(-1, 2), frac(1, 2)]);
        assert_eq!(row(4), vec![frac(251, 120), int(-3), frac(11, 12), int(0), frac(-1, 120)]);
        assert_eq!(*CTable::new(8).unwrap().get(8), frac(-1, 240));
        assert!(CTable::new(0).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_k(1, 4).unwrap(), frac(-3, 2));
        for n in 2..=30 {
            assert_eq!(sigma_k(1, n).unwrap(), frac(-(n as i64 - 1), 2));
        }
    }

    #[test]
    fn sigma_is_the_log_derivative_of_pn() {
        for n in 2..=12usize {
            let pn = IntPoly::from_i64(&vec![1; n]);
            for k in 1..=6 {
                let oracle = log_derivative_oracle(&pn, k, &int(1)).unwrap();
                assert_eq!(oracle, -fact(k - 1) * sigma_k(k, n as u64).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn at_zero_examples() {
        for n in 2..=20 {
            assert_eq!(log_deriv_phi_at_zero(n, 1).unwrap(), int(-crate::numtheory::mobius(n)));
        }
        assert_eq!(log_deriv_phi_at_zero(4, 2).unwrap(), int(2));
        let oracle = log_derivative_oracle(&cyclotomic(6), 4, &int(0)).unwrap();
        assert_eq!(log_deriv_phi_at_zero(6, 4).unwrap(), oracle);
        assert!(log_deriv_phi_at_zero(1, 1).is_err());
    }

    #[test]
    fn at_one_examples() {
        assert_eq!(log_deriv_phi_at_one(6, 2).unwrap(), int(1));
        assert_eq!(log_deriv_phi_at_one(7, 1).unwrap(), int(3));
        let oracle = log_derivative_oracle(&cyclotomic(5), 2, &int(1)).unwrap();
        assert_eq!(log_deriv_phi_at_one(5, 2).unwrap(), oracle);
    }

    #[test]
    fn at_minus_one_examples() {
        for k in 1..=6 {
            let expected = -fact(k - 1) / int(1 << k);
            assert_eq!(log_deriv_phi_at_minus_one(1, k).unwrap(), expected);
        }
        assert_eq!(log_deriv_phi_at_minus_one(3, 1).unwrap(), int(-1));
        let oracle = log_derivative_oracle(&cyclotomic(12), 2, &int(-1)).unwrap();
        assert_eq!(log_deriv_phi_at_minus_one(12, 2).unwrap(), oracle);
        assert!(matches!(log_deriv_phi_at_minus_one(2, 1), Err(Error::Pole(_))));
    }

    #[test]
    fn value_at_minus_one() {
        for n in 1..=100 {
            assert_eq!(cyclotomic(n).eval_int(&BigInt::from(-1)), phi_at_minus_one(n), "n={n}");
        }
    }

    #[test]
    fn derivative_examples() {
        let d = phi_derivs_at_one(5, 2).unwrap();
        assert_eq!(d, vec![int(5), int(10), int(20)]);
        let n = 6;
        let direct: Vec<_> = (0..=2).map(|k| cyclotomic(n).derivative(k).eval_rational(&int(1))).collect();
        assert_eq!(phi_derivs_at_one_recurrence(n, 2).unwrap(), direct);
        let d = phi_derivs_at_minus_one(1, 2).unwrap();
        assert_eq!(d, vec![int(-2), int(1), int(0)]);
        let d = phi_derivs_at_minus_one(4, 2).unwrap();
        assert_eq!(d, vec![int(2), int(-2), int(2)]);
        assert!(matches!(phi_derivs_at_minus_one(2, 2), Err(Error::Pole(_))));
    }

    #[test]
    fn third_derivative_closed_form() {
        for n in 2..=30u64 {
            let d = phi_derivs_at_one(n, 3).unwrap();
            let (p, s) = (int(euler_phi(n) as i64), int(dedekind_psi(n) as i64));
            let expected = &p * &p * &p / int(8) + &p * &p * &s / int(8) - frac(3, 4) * &p * &p - &p * &s / int(4) + &p;
            assert_eq!(&d[3] / &d[0], expected, "n={n}");
            let b3 = bell_complete(3, &[
                &p / int(2),
                &p * &s / int(12) - &p / int(2),
                &p - &p * &s / int(4),
            ])
            .unwrap();
            assert_eq!(b3, expected);
        }
    }

    #[test]
    fn schwarzian_examples() {
        assert_eq!(schwarzian_phi_at_one(3).unwrap(), frac(-2, 3));
        assert_eq!(schwarzian_phi_at_one(5).unwrap(), int(-3));
        assert_eq!(schwarzian_phi_at_one(2).unwrap(), int(0));
        let direct: Vec<_> = (0..=3).map(|k| cyclotomic(2).derivative(k).eval_rational(&int(1))).collect();
        assert_eq!(schwarzian_from_derivs(&direct).unwrap(), int(0));
    }

    #[test]
    fn normalized_examples() {
        let phi5 = cyclotomic(5);
        assert_eq!(normalized_derivative(&phi5, 1, &int(1)).unwrap(), frac(1, 2));
        assert_eq!(normalized_derivative(&phi5, 0, &int(1)).unwrap(), int(1));
        let f = IntPoly::from_i64(&[2, 0, 3, 1, 7]);
        for k in 0..=6 {
            for z in [frac(1, 3), int(1), int(5)] {
                assert!(normalized_derivative(&f, k, &z).unwrap() <= int(1));
            }
        }
        assert!(matches!(normalized_derivative(&cyclotomic(1), 1, &int(1)), Err(Error::Pole(_))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(log_deriv_inverse_cyclo_at_zero(6, 1).unwrap(), int(1));
        assert_eq!(log_deriv_inverse_cyclo_at_zero(3, 3).unwrap(), int(-2));
        assert_eq!(log_deriv_inverse_cyclo_at_minus_one(3, 1).unwrap(), frac(-1, 2));
        let oracle = log_derivative_oracle(&inverse_cyclotomic(9), 1, &int(-1)).unwrap();
        assert_eq!(log_deriv_inverse_cyclo_at_minus_one(9, 1).unwrap(), oracle);
        assert!(matches!(log_deriv_inverse_cyclo_at_minus_one(6, 1), Err(Error::Pole(_))));
    }
}
