use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// An element `a + b·ζ_m` of `ℤ[ζ_m]` for `m ∈ {1, 2, 3, 4, 6}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticInt {
    m: u8,
    a: BigInt,
    b: BigInt,
}

fn check_modulus(m: u8) -> Result<()> {
    match m {
        1 | 2 | 3 | 4 | 6 => Ok(()),
        _ => Err(Error::Domain(format!("roots of unity of order {m} are not supported"))),
    }
}

impl QuadraticInt {
    pub fn new(m: u8, a: BigInt, b: BigInt) -> Result<Self> {
        check_modulus(m)?;
        if m <= 2 && !b.is_zero() {
            return Err(Error::Input(format!("ζ_{m} is rational, so b must be zero")));
        }
        Ok(QuadraticInt { m, a, b })
    }

    pub fn from_int(m: u8, a: BigInt) -> Result<Self> {
        Self::new(m, a, BigInt::zero())
    }

    /// `ζ_m` itself, written in the basis `{1, ζ_m}`.
    pub fn zeta(m: u8) -> Result<Self> {
        check_modulus(m)?;
        Ok(match m {
            1 => QuadraticInt { m, a: BigInt::one(), b: BigInt::zero() },
            2 => QuadraticInt { m, a: -BigInt::one(), b: BigInt::zero() },
            _ => QuadraticInt { m, a: BigInt::zero(), b: BigInt::one() },
        })
    }

    pub fn modulus(&self) -> u8 {
        self.m
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Multiplication by `ζ_m`.
    pub fn mul_zeta(&self) -> Self {
        let (a, b) = (&self.a, &self.b);
        let (na, nb) = match self.m {
            1 => (a.clone(), BigInt::zero()),
            2 => (-a, BigInt::zero()),
            3 => (-b, a - b),
            4 => (-b, a.clone()),
            _ => (-b, a + b),
        };
        QuadraticInt { m: self.m, a: na, b: nb }
    }

    /// `|a + bζ_m|²`.
    pub fn norm_squared(&self) -> BigInt {
        let (a, b) = (&self.a, &self.b);
        match self.m {
            1 | 2 => a * a,
            3 => a * a - a * b + b * b,
            4 => a * a + b * b,
            _ => a * a + a * b + b * b,
        }
    }
}

impl Add for &QuadraticInt {
    type Output = QuadraticInt;
    fn add(self, rhs: &QuadraticInt) -> QuadraticInt {
        assert_eq!(self.m, rhs.m, "mixed moduli");
        QuadraticInt { m: self.m, a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Mul for &QuadraticInt {
    type Output = QuadraticInt;
    fn mul(self, rhs: &QuadraticInt) -> QuadraticInt {
        assert_eq!(self.m, rhs.m, "mixed moduli");
        // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd·ζ², with ζ² = ζ·ζ.
        let ac = &self.a * &rhs.a;
        let cross = &self.a * &rhs.b + &self.b * &rhs.a;
        let bd = &self.b * &rhs.b;
        let zeta = QuadraticInt::zeta(self.m).expect("valid modulus");
        let zeta_sq = zeta.mul_zeta();
        QuadraticInt {
            m: self.m,
            a: ac + &bd * &zeta_sq.a,
            b: cross + &bd * &zeta_sq.b,
        }
    }
}

impl fmt::Display for QuadraticInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*z{}", self.a, self.b, self.m)
        }
    }
}

/// Exact value `f(ζ_m)` by Horner's rule in `ℤ[ζ_m]`.
pub fn eval_at_root_of_unity(f: &IntPoly, m: u8) -> Result<QuadraticInt> {
    let mut acc = QuadraticInt::from_int(m, BigInt::zero())?;
    for c in f.coeffs().iter().rev() {
        acc = acc.mul_zeta();
        acc.a += c;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::factor;
    use crate::poly::cyclotomic;
    use proptest::prelude::*;

    #[test]
    fn root_of_unity_values() {
        let x = IntPoly::x();
        let v = eval_at_root_of_unity(&x, 4).unwrap();
        assert_eq!(v, QuadraticInt::new(4, BigInt::zero(), BigInt::one()).unwrap());
        assert_eq!(v.norm_squared(), BigInt::one());
        for m in [1u8, 2, 3, 4, 6] {
            assert!(eval_at_root_of_unity(&cyclotomic(m as u64), m).unwrap().is_zero());
        }
        assert!(eval_at_root_of_unity(&x, 5).is_err());
    }

    #[test]
    fn cyclotomic_values_at_small_roots() {
        for m in [1u64, 2, 3, 4, 6] {
            for n in (m + 1)..=60 {
                let v = eval_at_root_of_unity(&cyclotomic(n), m as u8).unwrap();
                let expected = if n % m == 0 {
                    match factor(n / m).factors() {
                        [(p, _)] => p * p,
                        _ => 1,
                    }
                } else {
                    1
                };
                assert_eq!(v.norm_squared(), BigInt::from(expected), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn fk_at_zeta3_with_k_divisible_by_three() {
        for k in [3usize, 6, 9, 12] {
            let mut c = vec![0i64; 2 * k + 1];
            c[0] = 1;
            c[1] = -1;
            c[k] += 1;
            c[2 * k - 1] -= 1;
            c[2 * k] += 1;
            let v = eval_at_root_of_unity(&IntPoly::from_i64(&c), 3).unwrap();
            assert_eq!(v, QuadraticInt::from_int(3, BigInt::from(4)).unwrap());
        }
    }

    fn element(m: u8) -> impl Strategy<Value = QuadraticInt> {
        (-50i64..50, -50i64..50).prop_map(move |(a, b)| {
            let b = if m <= 2 { 0 } else { b };
            QuadraticInt::new(m, BigInt::from(a), BigInt::from(b)).unwrap()
        })
    }

    fn ring_law_case(m: u8) -> impl Strategy<Value = (QuadraticInt, QuadraticInt, QuadraticInt)> {
        (element(m), element(m), element(m))
    }

    proptest! {
        #[test]
        fn ring_laws_and_multiplicative_norm(
            (x, y, z) in prop::sample::select(vec![1u8, 2, 3, 4, 6]).prop_flat_map(ring_law_case)
        ) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!((&x * &y).norm_squared(), x.norm_squared() * y.norm_squared());
        }
    }
}
