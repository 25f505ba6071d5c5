use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::partitions;
use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, from_bigint};

/// Partial Bell polynomial `B_{k,j}(x_1, …, x_{k−j+1})` summed over the
/// partitions of `k` into exactly `j` parts.
pub fn bell_partial(k: usize, j: usize, xs: &[BigRational]) -> Result<BigRational> {
    if k == 0 && j == 0 {
        return Ok(BigRational::one());
    }
    if j == 0 || j > k {
        return Err(Error::Input(format!("partial Bell polynomial needs 1 ≤ j ≤ k, got k={k}, j={j}")));
    }
    let needed = k - j + 1;
    if xs.len() < needed {
        return Err(Error::Input(format!(
            "B_{{{k},{j}}} needs {needed} arguments, got {}",
            xs.len()
        )));
    }
    let scaled: Vec<BigRational> = xs[..needed]
        .iter()
        .enumerate()
        .map(|(i, x)| x / from_bigint(factorial(i as u64 + 1)))
        .collect();
    let k_fact = from_bigint(factorial(k as u64));
    let mut total = BigRational::zero();
    for p in partitions(k).iter().filter(|p| p.parts() == j) {
        let mut term = k_fact.clone();
        for (i, &l) in p.multiplicities().iter().enumerate() {
            if l == 0 {
                continue;
            }
            term = term * Pow::pow(&scaled[i], l) / from_bigint(factorial(l as u64));
        }
        total += term;
    }
    Ok(total)
}

/// `(B_0, B_1, …, B_kmax)` of the complete Bell polynomials by
/// `B_k = Σ_{j=1}^k C(k−1, j−1) B_{k−j} x_j`.
pub fn bell_complete_all(xs: &[BigRational], kmax: usize) -> Result<Vec<BigRational>> {
    if xs.len() < kmax {
        return Err(Error::Input(format!(
            "complete Bell polynomial of order {kmax} needs {kmax} arguments, got {}",
            xs.len()
        )));
    }
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(BigRational::one());
    for k in 1..=kmax {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            if xs[j - 1].is_zero() {
                continue;
            }
            let c = binomial(k as u64 - 1, j as u64 - 1);
            acc += from_bigint(c) * &out[k - j] * &xs[j - 1];
        }
        out.push(acc);
    }
    Ok(out)
}

/// Complete Bell polynomial `B_k(x_1, …, x_k)`, with `B_0 = 1`.
pub fn bell_complete(k: usize, xs: &[BigRational]) -> Result<BigRational> {
    Ok(bell_complete_all(xs, k)?.pop().expect("non-empty"))
}

/// Given the log-derivatives `((log h)', …, (log h)^{(K)})` and the value
/// `h` at a point, returns `(h', …, h^{(K)})` via `h^{(k)} = h B_k(…)`.
pub fn exp_transform(logderivs: &[BigRational], base: &BigRational) -> Result<Vec<BigRational>> {
    if base.is_zero() {
        return Err(Error::Domain("exponential transform needs a nonzero base value".into()));
    }
    let bells = bell_complete_all(logderivs, logderivs.len())?;
    Ok(bells.into_iter().skip(1).map(|b| b * base).collect())
}

#[allow(dead_code)]
fn int_vec(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn partial_examples() {
        assert_eq!(bell_partial(4, 2, &int_vec(&[1, 1, 1])).unwrap(), int(7));
        // 4 x1 x3 + 3 x2^2 at (2, 3, 5)
        assert_eq!(bell_partial(4, 2, &int_vec(&[2, 3, 5])).unwrap(), int(4 * 2 * 5 + 3 * 9));
        assert_eq!(bell_partial(3, 1, &int_vec(&[2, 3, 5])).unwrap(), int(5));
        assert_eq!(bell_partial(5, 5, &int_vec(&[3])).unwrap(), int(243));
        assert!(matches!(bell_partial(4, 2, &int_vec(&[1, 1])), Err(Error::Input(_))));
        assert!(bell_partial(2, 3, &int_vec(&[1])).is_err());
    }

    #[test]
    fn complete_examples() {
        assert_eq!(bell_complete(0, &[]).unwrap(), int(1));
        let (x1, x2, x3) = (frac(3, 2), frac(-2, 7), int(5));
        let xs = vec![x1.clone(), x2.clone(), x3.clone()];
        assert_eq!(bell_complete(2, &xs).unwrap(), &x1 * &x1 + &x2);
        assert_eq!(bell_complete(3, &xs).unwrap(), &x1 * &x1 * &x1 + int(3) * &x1 * &x2 + &x3);
        assert!(bell_complete(4, &xs).is_err());
    }

    #[test]
    fn exp_transform_examples() {
        assert_eq!(exp_transform(&[frac(3, 4)], &int(1)).unwrap(), vec![frac(3, 4)]);
        // Φ_5 at 1: log-derivatives φ(5)/2 = 2 and −φ/2 + J_2/12 = −2 + 2 = 0.
        let out = exp_transform(&[int(2), int(0)], &int(5)).unwrap();
        assert_eq!(out, vec![int(10), int(20)]);
        let zeros = exp_transform(&[int(0), int(0), int(0)], &int(3)).unwrap();
        assert!(zeros.iter().all(|z| z.is_zero()));
        assert!(matches!(exp_transform(&[int(1)], &int(0)), Err(Error::Domain(_))));
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-20i64..20, 1i64..6).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn recurrence_matches_partial_sum(xs in proptest::collection::vec(small_rational(), 10)) {
            for k in 1..=10 {
                let partial: BigRational = (1..=k)
                    .map(|j| bell_partial(k, j, &xs).unwrap())
                    .fold(BigRational::zero(), |a, b| a + b);
                prop_assert_eq!(bell_complete(k, &xs).unwrap(), partial);
            }
        }
    }
}
