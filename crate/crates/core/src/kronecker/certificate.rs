use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::checks::{
    jordan_sum_from, minus_one_baseline, mu_c, refined_violates, residue_and_remaining, stirling_sum_from_logderivs,
    ExcludedSet,
};
use super::{cyclotomic_multiplicity, factor_kronecker, CycloFactorization};
use crate::poly::{log_derivatives_oracle, IntPoly, Point};
use crate::rational::{from_bigint, int, is_integer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Kronecker,
    NonKronecker,
}

/// Why a verdict was reached. The witness layout depends on the variant:
/// `[f(1)]`, `[f(−1)]`, `[x, f(x)]`, or the log-derivatives
/// `[L_1, …, L_k]` at the point for the identity and bound violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    NegativeAtOne,
    NegativeAtMinusOne,
    NonPositiveAt,
    OddIdentityViolation {
        k: usize,
        point: Point,
    },
    /// `lhs < rhs` where `lhs = (k/B_k^+)·Σ − Σ_{d∈determined} e_d J_k(d)` and
    /// `rhs = bound·(degree − e0 − Σ_{d∈determined} e_d φ(d))`.
    EvenBoundViolation {
        k: usize,
        point: Point,
        excluded: ExcludedSet,
        determined: Vec<(u64, u32)>,
        degree: usize,
        e0: usize,
        #[serde(with = "crate::rational::serde_rational")]
        bound: BigRational,
        #[serde(with = "crate::rational::serde_rational")]
        lhs: BigRational,
        #[serde(with = "crate::rational::serde_rational")]
        rhs: BigRational,
    },
    NontrivialRemainder {
        remainder: IntPoly,
    },
    CyclotomicProduct,
}

impl Reason {
    pub fn tag(&self) -> &'static str {
        match self {
            Reason::NegativeAtOne => "negative_at_one",
            Reason::NegativeAtMinusOne => "negative_at_minus_one",
            Reason::NonPositiveAt => "non_positive_at",
            Reason::OddIdentityViolation { .. } => "odd_identity_violation",
            Reason::EvenBoundViolation { .. } => "even_bound_violation",
            Reason::NontrivialRemainder { .. } => "nontrivial_remainder",
            Reason::CyclotomicProduct => "cyclotomic_product",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub reason: Reason,
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub witness: Vec<BigRational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factorization: Option<CycloFactorization>,
}

impl Certificate {
    pub(crate) fn negative(reason: Reason, witness: Vec<BigRational>) -> Self {
        Certificate { verdict: Verdict::NonKronecker, reason, witness, factorization: None }
    }

    pub(crate) fn with_factorization(mut self, factorization: CycloFactorization) -> Self {
        self.factorization = Some(factorization);
        self
    }

    pub fn is_kronecker(&self) -> bool {
        self.verdict == Verdict::Kronecker
    }

    /// Re-derives the verdict from the recorded witness values alone.
    pub fn check(&self) -> bool {
        let w = &self.witness;
        let negative = self.verdict == Verdict::NonKronecker;
        let factorization_ok = self.factorization.as_ref().is_none_or(|fac| fac.is_kronecker() != negative);
        factorization_ok
            && match &self.reason {
                Reason::NegativeAtOne | Reason::NegativeAtMinusOne => {
                    negative && w.len() == 1 && w[0].is_negative()
                }
                Reason::NonPositiveAt => negative && w.len() == 2 && is_integer(&w[0]) && !w[1].is_positive(),
                Reason::OddIdentityViolation { k, point } => {
                    negative
                        && *k >= 3
                        && k % 2 == 1
                        && w.len() == *k
                        && !stirling_sum_from_logderivs(*k, *point, w).is_zero()
                }
                Reason::EvenBoundViolation { k, point, excluded, determined, degree, e0, bound, lhs, rhs } => {
                    negative
                        && *k >= 2
                        && k % 2 == 0
                        && w.len() == *k
                        && even_bound_holds(*k, *point, excluded, determined, *degree, *e0, bound, lhs, rhs, w)
                }
                Reason::NontrivialRemainder { remainder } => {
                    negative
                        && !remainder.is_one()
                        && self.factorization.as_ref().is_some_and(|fac| fac.remainder == *remainder)
                }
                Reason::CyclotomicProduct => {
                    !negative && self.factorization.as_ref().is_some_and(CycloFactorization::is_kronecker)
                }
            }
    }

    /// [`Certificate::check`], plus recomputation of every witness value and
    /// recorded fact from `f` itself.
    pub fn verify_against(&self, f: &IntPoly) -> bool {
        if !self.check() {
            return false;
        }
        if let Some(fac) = &self.factorization {
            if fac.reconstruct() != *f {
                return false;
            }
        }
        let eval = |x: i64| from_bigint(f.eval_int(&BigInt::from(x)));
        let w = &self.witness;
        match &self.reason {
            Reason::NegativeAtOne => w[0] == eval(1),
            Reason::NegativeAtMinusOne => w[0] == eval(-1) && !f.coeff(0).is_zero() && eval(1).is_positive(),
            Reason::NonPositiveAt => {
                w[1] == f.eval_rational(&w[0])
                    && !f.coeff(0).is_zero()
                    && eval(1).is_positive()
                    && eval(-1).is_positive()
            }
            Reason::OddIdentityViolation { k, point } => {
                log_derivatives_oracle(f, *k, &point.value()).is_ok_and(|l| l == *w)
            }
            Reason::EvenBoundViolation { k, point, excluded, determined, degree, e0, .. } => {
                *degree == f.deg()
                    && *e0 == f.x_adic_valuation()
                    && excluded.is_valid_for(f)
                    && determined.iter().all(|&(d, e)| cyclotomic_multiplicity(f, d) == e)
                    && (*point == Point::One || !eval(1).is_zero())
                    && log_derivatives_oracle(f, *k, &point.value()).is_ok_and(|l| l == *w)
            }
            Reason::NontrivialRemainder { remainder } => {
                self.factorization.is_some()
                    && factor_kronecker(remainder)
                        .is_ok_and(|fac| fac.e0 == 0 && fac.factors.is_empty())
            }
            Reason::CyclotomicProduct => self.factorization.is_some(),
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn even_bound_holds(
    k: usize,
    point: Point,
    excluded: &ExcludedSet,
    determined: &[(u64, u32)],
    degree: usize,
    e0: usize,
    bound: &BigRational,
    lhs: &BigRational,
    rhs: &BigRational,
    logderivs: &[BigRational],
) -> bool {
    if degree < e0 {
        return false;
    }
    let m = jordan_sum_from(k, &stirling_sum_from_logderivs(k, point, logderivs));
    match point {
        Point::One => {
            let all = excluded.with(determined.iter().map(|&(d, _)| d));
            let Ok(mu) = mu_c(k, &all) else { return false };
            let (residue, remaining) = residue_and_remaining(k, &m, determined, degree, e0);
            mu == *bound
                && residue == *lhs
                && *rhs == bound * int(remaining)
                && refined_violates(&residue, remaining, bound)
        }
        Point::MinusOne => {
            let remaining = int((degree - e0) as i64);
            determined.is_empty()
                && excluded.contains(1)
                && *bound == minus_one_baseline(k)
                && m == *lhs
                && *rhs == bound * remaining
                && lhs < rhs
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::certify;
    use num_traits::One;

    #[test]
    fn tampered_witness_fails() {
        let f = IntPoly::from_i64(&[1, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 1]);
        let mut cert = certify(&f).unwrap();
        assert!(cert.verify_against(&f));
        cert.witness[0] += BigRational::one();
        assert!(!cert.verify_against(&f));
    }

    #[test]
    fn json_round_trip() {
        for f in [IntPoly::from_i64(&[1, -1, 0, 1, 0, -1, 1]), IntPoly::from_i64(&[1, -1, 1]), IntPoly::from_i64(&[-1, 0, 1, 1])] {
            let cert = certify(&f).unwrap();
            let json = serde_json::to_string(&cert).unwrap();
            let back: Certificate = serde_json::from_str(&json).unwrap();
            assert_eq!(back, cert);
            assert!(back.verify_against(&f));
        }
    }
}
