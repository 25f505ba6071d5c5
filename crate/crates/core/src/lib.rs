//! Exact arithmetic around cyclotomic polynomials.
//!
//! The crate computes cyclotomic polynomials `Φ_n` and their coefficients by
//! several independent routes, closed forms for the higher logarithmic
//! derivatives of `Φ_n` at `0` and `±1`, and the Stirling-number identities
//! satisfied by Kronecker polynomials (monic integer polynomials whose roots
//! all lie in the closed unit disc). Those identities drive a certifier that
//! decides whether a polynomial is Kronecker and explains why not, which in
//! turn decides cyclotomicity of numerical semigroups.
//!
//! Every quantity is an exact integer or rational; no floating point is used
//! in any formula. Closed forms are always paired with an independent oracle
//! ([`poly::log_derivative_oracle`], direct differentiation, polynomial
//! division) so they can be checked against each other.
//!
//! Module map:
//!
//! - [`numtheory`]: Möbius, Euler, Dedekind, Jordan totients, Ramanujan sums.
//! - [`combinat`]: Bernoulli and Stirling numbers, partitions, Bell polynomials.
//! - [`poly`]: integer polynomials, `Φ_n`, `Ψ_n`, roots of unity of order ≤ 6,
//!   and the log-derivative oracle.
//! - [`cycloderiv`]: log-derivatives and derivatives of `Φ_n` and `Ψ_n`.
//! - [`cyclocoeffs`]: the coefficient formulas for `a_n(k)`.
//! - [`kronecker`]: cyclotomic factorization and non-Kronecker certificates.
//! - [`semigroup`]: numerical semigroups and the `f_k` family.

pub mod combinat;
pub mod cyclocoeffs;
pub mod cycloderiv;
pub mod error;
pub mod kronecker;
pub mod numtheory;
pub mod poly;
pub mod rational;
pub mod semigroup;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
