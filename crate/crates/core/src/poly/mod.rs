//! Dense integer polynomials, cyclotomic constructions, evaluation at small
//! roots of unity and the log-derivative oracle.

mod cyclotomic;
mod oracle;
mod quadratic;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cyclotomic::{coxeter_poly, cyclotomic, cyclotomic_mobius, inverse_cyclotomic};
pub use oracle::{log_derivative_oracle, log_derivative_symbolic, log_derivatives_oracle, taylor_jet};
pub use quadratic::{eval_at_root_of_unity, QuadraticInt};

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// The evaluation points `1` and `−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Point {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
}

impl Point {
    pub fn sign(self) -> i64 {
        match self {
            Point::One => 1,
            Point::MinusOne => -1,
        }
    }

    pub fn value(self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.sign()))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}

impl IntPoly {
    /// Builds a polynomial, dropping trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Largest `e` with `x^e | f`; zero for the zero polynomial.
    pub fn x_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `f / x^e` for `e ≤` the x-adic valuation.
    pub fn shift_down(&self, e: usize) -> Self {
        assert!(e <= self.x_adic_valuation() || self.is_zero());
        Self::new(self.coeffs.iter().skip(e).cloned().collect())
    }

    /// `f · x^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// `k`-th derivative.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, c)| {
                let falling: BigInt = ((i - k + 1)..=i).map(BigInt::from).product();
                c * falling
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        if x.denom().is_one() {
            return BigRational::from_integer(self.eval_int(x.numer()));
        }
        // Homogenized Horner: Σ c_i p^i q^{d−i} over q^d.
        let (p, q) = (x.numer(), x.denom());
        let mut num = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            num = num * p + c * &qpow;
            qpow *= q;
        }
        let den = qpow / q;
        if self.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(num, den)
    }

    /// `f(x^p)`.
    pub fn compose_power(&self, p: usize) -> Self {
        assert!(p >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.deg() * p + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `f(−x)`.
    pub fn compose_neg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficients reversed with respect to the degree: `x^d f(1/x)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Palindromic coefficient list.
    pub fn is_self_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// `x^d f(1/x) = −f(x)`.
    pub fn is_anti_self_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        n > 0 && (0..n).all(|i| self.coeffs[i] == -&self.coeffs[n - 1 - i])
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !g.is_monic() {
            return Err(Error::Input(format!("divisor {g} is not monic")));
        }
        let dg = g.deg();
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + dg]);
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.coeffs[..dg].iter().enumerate() {
                if !gj.is_zero() {
                    rem[i + j] -= &c * gj;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `Some(f / g)` when the monic `g` divides `f` exactly, `None` otherwise.
    pub fn div_exact(&self, g: &IntPoly) -> Result<Option<IntPoly>> {
        let (q, r) = self.div_rem_monic(g)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

/// `f / g` exactly, for a monic divisor `g`; `None` when `g ∤ f`.
pub fn poly_div_exact(f: &IntPoly, g: &IntPoly) -> Result<Option<IntPoly>> {
    f.div_exact(g)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// `f'(point)` of a self-reciprocal `f` of degree `d` from `f(point)` alone:
/// `f(1)·d/2` at `1` and `−f(−1)·d/2` at `−1`.
///
/// At `−1` a palindrome of odd degree vanishes, which is reported as a
/// domain error rather than a value.
pub fn self_reciprocal_first_derivative(f: &IntPoly, point: Point) -> Result<BigRational> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::Domain("need a polynomial of degree at least 1".into())),
    };
    if !f.is_self_reciprocal() {
        return Err(Error::Domain(format!("{f} is not self-reciprocal")));
    }
    let value = f.eval_int(&BigInt::from(point.sign()));
    let half_d = BigRational::new(BigInt::from(d), BigInt::from(2));
    match point {
        Point::One => Ok(BigRational::from_integer(value) * half_d),
        Point::MinusOne if d % 2 == 1 => Err(Error::Domain(format!(
            "odd degree {d}: f(-1) = {value}, the derivative formula does not apply"
        ))),
        Point::MinusOne => Ok(-BigRational::from_integer(value) * half_d),
    }
}
