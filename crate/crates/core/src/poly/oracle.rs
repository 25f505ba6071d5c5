use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Taylor coefficients `f^{(i)}(x)/i!` for `0 ≤ i ≤ order`, by repeated
/// synthetic division by `X − x`.
pub fn taylor_jet(f: &IntPoly, x: &BigRational, order: usize) -> Vec<BigRational> {
    let mut work: Vec<BigRational> = f.coeffs().iter().cloned().map(BigRational::from_integer).collect();
    let mut out = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        if work.is_empty() {
            out.push(BigRational::zero());
            continue;
        }
        // Horner from the top leaves the quotient in work[1..] and f(x) in work[0].
        for i in (0..work.len() - 1).rev() {
            let carry = &work[i + 1] * x;
            work[i] += carry;
        }
        out.push(work.remove(0));
    }
    out
}

fn jet_mul(a: &[BigRational], b: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn jet_derivative(a: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    out.resize(len, BigRational::zero());
    out
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("log-derivative order must be at least 1".into()));
    }
    Ok(())
}

/// `(log f)^{(k)}(x)`, the `(k−1)`-th derivative of `f′/f` at `x`.
///
/// Writes `(f′/f)^{(j)} = P_j / f^{j+1}` and applies the quotient rule
/// `P_{j+1} = P_j′ f − (j+1) P_j f′`, carried out on the degree-`k` Taylor
/// jet of `f` at `x` since only derivatives of order `≤ k` matter there.
pub fn log_derivative_oracle(f: &IntPoly, k: usize, x: &BigRational) -> Result<BigRational> {
    check_order(k)?;
    Ok(log_derivatives_oracle(f, k, x)?.pop().expect("k ≥ 1"))
}

/// `((log f)′(x), …, (log f)^{(K)}(x))` in one pass of the recursion used by
/// [`log_derivative_oracle`].
pub fn log_derivatives_oracle(f: &IntPoly, kmax: usize, x: &BigRational) -> Result<Vec<BigRational>> {
    let len = kmax + 1;
    let q = taylor_jet(f, x, kmax);
    if q[0].is_zero() {
        return Err(Error::Pole(format!("{f} vanishes at {x}")));
    }
    let dq = jet_derivative(&q, len);
    let mut p = dq.clone();
    let mut qpow = q[0].clone();
    let mut out = Vec::with_capacity(kmax);
    for j in 0..kmax {
        out.push(&p[0] / &qpow);
        if j + 1 == kmax {
            break;
        }
        let left = jet_mul(&jet_derivative(&p, len), &q, len);
        let right = jet_mul(&p, &dq, len);
        let factor = BigRational::from_integer(BigInt::from(j + 1));
        p = left
            .into_iter()
            .zip(right)
            .map(|(l, r)| l - r * &factor)
            .collect();
        qpow *= &q[0];
    }
    Ok(out)
}

/// The same quotient-rule recursion as [`log_derivative_oracle`] carried out
/// on whole integer polynomials; only practical for small degrees.
pub fn log_derivative_symbolic(f: &IntPoly, k: usize, x: &BigRational) -> Result<BigRational> {
    check_order(k)?;
    let fx = f.eval_rational(x);
    if fx.is_zero() {
        return Err(Error::Pole(format!("{f} vanishes at {x}")));
    }
    let df = f.derivative(1);
    let mut p = df.clone();
    for j in 0..k - 1 {
        let scale = IntPoly::constant(BigInt::from(j + 1));
        p = &(&p.derivative(1) * f) - &(&scale * &(&p * &df));
    }
    Ok(p.eval_rational(x) / Pow::pow(&fx, k as u32))
}
