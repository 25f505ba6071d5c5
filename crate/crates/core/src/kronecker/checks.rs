//! Necessary conditions for being Kronecker, each producing a certificate
//! when it fails.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, Reason, Verdict};
use super::{cyclotomic_multiplicity, factor_kronecker};
use crate::combinat::{bernoulli_plus, stirling_second};
use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factor, jordan_totient, n_alpha};
use crate::poly::{eval_at_root_of_unity, log_derivatives_oracle, IntPoly, Point};
use crate::rational::{from_bigint, int};

/// Moduli at which `f(ζ_m)` can be evaluated exactly.
const SMALL_MODULI: [u64; 5] = [1, 2, 3, 4, 6];

/// Bound on `μ` beyond which the refined case analysis gives up.
const REFINE_CAP: i64 = 64;

/// Integer sample points for the positivity test: all of `[−B, B]` when
/// `B ≤ 64`, else 129 evenly spaced ones.
fn sample_points(bound: &BigInt) -> Vec<BigInt> {
    if *bound <= BigInt::from(64) {
        let b = bound.to_i64().expect("small");
        return (-b..=b).map(BigInt::from).collect();
    }
    let span = bound * 2;
    (0..=128)
        .map(|i| {
            let num: BigInt = &span * i + 64;
            -bound + num.div_floor(&BigInt::from(128))
        })
        .collect()
}

/// `f(1) < 0`, then (for `f(0) ≠ 0`, `f(1) > 0`) `f(−1) < 0`, then (for
/// `f(−1) > 0` as well) `f(x) ≤ 0` at an integer sample point.
pub fn sign_tests(f: &IntPoly) -> Option<Certificate> {
    let at_one = f.eval_int(&BigInt::one());
    if at_one.is_negative() {
        return Some(Certificate::negative(Reason::NegativeAtOne, vec![from_bigint(at_one)]));
    }
    if f.coeff(0).is_zero() || at_one.is_zero() {
        return None;
    }
    let at_minus_one = f.eval_int(&-BigInt::one());
    if at_minus_one.is_negative() {
        return Some(Certificate::negative(Reason::NegativeAtMinusOne, vec![from_bigint(at_minus_one)]));
    }
    if at_minus_one.is_zero() {
        return None;
    }
    let bound = f.max_abs_coeff() + 1;
    sample_points(&bound).into_iter().find_map(|x| {
        let v = f.eval_int(&x);
        (!v.is_positive()).then(|| {
            Certificate::negative(Reason::NonPositiveAt, vec![from_bigint(x), from_bigint(v)])
        })
    })
}

/// `Σ_j ε^j {k,j} L_j` with `ε = ±1` the point and `L_j` the `j`-th
/// log-derivative (`logderivs[j−1]`).
pub fn stirling_sum_from_logderivs(k: usize, point: Point, logderivs: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for j in 1..=k {
        let mut term = from_bigint(stirling_second(k, j)) * &logderivs[j - 1];
        if point == Point::MinusOne && j % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// `Σ_j {k,j} (log f)^{(j)}(1)`, or `Σ_j (−1)^j {k,j} (log f)^{(j)}(−1)`.
/// Equals `B_k^+/k · Σ e_d J_k(d)` (resp. `J_k(d α_d)`) for Kronecker `f`.
pub fn stirling_logderiv_sum(f: &IntPoly, k: usize, point: Point) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::Domain(format!("k = {k}, need k ≥ 2")));
    }
    let l = log_derivatives_oracle(f, k, &point.value())?;
    Ok(stirling_sum_from_logderivs(k, point, &l))
}

/// `(k / B_k^+) · sum`, the Jordan sum `Σ e_d J_k(d)` for Kronecker inputs.
pub(crate) fn jordan_sum_from(k: usize, sum: &BigRational) -> BigRational {
    sum * BigRational::from_integer(BigInt::from(k)) / bernoulli_plus(k)
}

/// Odd `k ≥ 3`: the Stirling sums vanish for Kronecker `f`. Points where
/// `f` vanishes are skipped.
pub fn odd_identity_check(f: &IntPoly, k: usize) -> Result<Option<Certificate>> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::Domain(format!("k = {k}, need odd k ≥ 3")));
    }
    for point in [Point::One, Point::MinusOne] {
        let l = match log_derivatives_oracle(f, k, &point.value()) {
            Ok(l) => l,
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        };
        if !stirling_sum_from_logderivs(k, point, &l).is_zero() {
            return Ok(Some(Certificate::negative(Reason::OddIdentityViolation { k, point }, l)));
        }
    }
    Ok(None)
}

/// Indices `m·q^j` (`j ≥ 1`, `q` prime) with `q ∤ |f(ζ_m)|²`; no such `Φ_d`
/// divides `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub m: u64,
    #[serde(with = "crate::rational::serde_bigint")]
    pub norm_squared: BigInt,
}

impl Family {
    pub fn contains(&self, d: u64) -> bool {
        if d % self.m != 0 || d == self.m {
            return false;
        }
        let f = factor(d / self.m);
        match f.factors() {
            [(q, _)] => !(&self.norm_squared % q).is_zero(),
            _ => false,
        }
    }
}

/// A set `C` of indices `d` for which `Φ_d ∤ f` is known: finitely many
/// explicit indices plus prime-power families.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedSet {
    pub explicit: BTreeSet<u64>,
    pub families: Vec<Family>,
    /// Moduli `m` whose hypothesis `Φ_d ∤ f` for `d ≤ m` failed.
    pub skipped: Vec<u64>,
}

impl ExcludedSet {
    /// Only the explicit indices, no families.
    pub fn from_indices(indices: impl IntoIterator<Item = u64>) -> Self {
        ExcludedSet { explicit: indices.into_iter().collect(), ..Default::default() }
    }

    pub fn contains(&self, d: u64) -> bool {
        self.explicit.contains(&d) || self.families.iter().any(|fam| fam.contains(d))
    }

    pub fn with(&self, extra: impl IntoIterator<Item = u64>) -> Self {
        let mut out = self.clone();
        out.explicit.extend(extra);
        out
    }

    /// Confirms against `f` that no listed index divides it. A family is
    /// accepted when every prime of the true `|f(ζ_m)|²` is allowed by it.
    pub fn is_valid_for(&self, f: &IntPoly) -> bool {
        let explicit_ok = self.explicit.iter().all(|&d| d == 0 || cyclotomic_multiplicity(f, d) == 0);
        explicit_ok
            && self.families.iter().all(|fam| {
                (1..=fam.m).all(|d| cyclotomic_multiplicity(f, d) == 0)
                    && norm_at(f, fam.m).is_ok_and(|n| !n.is_zero() && radical_divides(n, &fam.norm_squared))
            })
    }
}

/// `rad(a) | b` for `a ≠ 0`.
fn radical_divides(mut a: BigInt, b: &BigInt) -> bool {
    loop {
        let g = a.gcd(b);
        if g.is_one() {
            return a.abs().is_one();
        }
        while (&a % &g).is_zero() {
            a /= &g;
        }
    }
}

fn norm_at(f: &IntPoly, m: u64) -> Result<BigInt> {
    Ok(eval_at_root_of_unity(f, m as u8)?.norm_squared())
}

/// Excluded indices read off from `f(ζ_m)`, `m ∈ {1, 2, 3, 4, 6}`.
///
/// For each `m` such that no `Φ_d` with `d ≤ m` divides `f`, every
/// `Φ_{m q^j}` dividing a Kronecker `f` contributes the prime `q` to
/// `|f(ζ_m)|`; indices with other `q` are excluded.
pub fn excluded_set(f: &IntPoly) -> ExcludedSet {
    let mut set = ExcludedSet::default();
    let mut first_divisor = None;
    for d in 1..=6u64 {
        if cyclotomic_multiplicity(f, d) > 0 {
            first_divisor = Some(d);
            break;
        }
        set.explicit.insert(d);
    }
    for m in SMALL_MODULI {
        if first_divisor.is_some_and(|d| d <= m) {
            set.skipped.push(m);
            continue;
        }
        let norm_squared = norm_at(f, m).expect("supported modulus");
        set.families.push(Family { m, norm_squared });
    }
    set
}

/// `J_k(j)/φ(j)`, always an integer.
fn jordan_ratio(k: usize, j: u64) -> BigInt {
    jordan_totient(k as u32, j) / BigInt::from(euler_phi(j))
}

/// `μ_C(k) = min{J_k(j)/φ(j) : j ∉ C}` together with the indices attaining
/// it. Uses `J_k(j)/φ(j) ≥ j` to stop the ascending scan.
pub fn mu_c_with_minimizers(k: usize, c: &ExcludedSet) -> Result<(BigInt, Vec<u64>)> {
    if k < 2 {
        return Err(Error::Domain(format!("k = {k}, need k ≥ 2")));
    }
    if !c.contains(1) {
        return Err(Error::Domain("the excluded set must contain 1".into()));
    }
    let mut best: Option<BigInt> = None;
    let mut minimizers = Vec::new();
    let mut j = 2u64;
    while best.as_ref().is_none_or(|b| BigInt::from(j) <= *b) {
        if !c.contains(j) {
            let r = jordan_ratio(k, j);
            match &best {
                Some(b) if r > *b => {}
                Some(b) if r == *b => minimizers.push(j),
                _ => {
                    best = Some(r);
                    minimizers = vec![j];
                }
            }
        }
        j += 1;
    }
    Ok((best.expect("C excludes only finitely many families"), minimizers))
}

/// `μ_C(k)`.
pub fn mu_c(k: usize, c: &ExcludedSet) -> Result<BigRational> {
    Ok(from_bigint(mu_c_with_minimizers(k, c)?.0))
}

/// `(3^k − 1)/2`, the minimum of `J_k(dα_d)/φ(d)` over `d ≥ 3`.
pub(crate) fn minus_one_baseline(k: usize) -> BigRational {
    from_bigint((BigInt::from(3).pow(k as u32) - 1) / 2)
}

/// Jordan lower bounds for even `k`: `μ_C(k)(deg f − e0)` at `+1` and
/// `(3^k−1)/2 (deg f − e0)` at `−1`. Points where `f(±1) = 0` are skipped.
pub fn even_bound_check(f: &IntPoly, k: usize, c: &ExcludedSet) -> Result<Option<Certificate>> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::Domain(format!("k = {k}, need even k ≥ 2")));
    }
    let e0 = f.x_adic_valuation();
    let degree = f.deg();
    let plain = |point: Point, bound: BigRational| -> Result<Option<Certificate>> {
        let l = log_derivatives_oracle(f, k, &point.value())?;
        let lhs = jordan_sum_from(k, &stirling_sum_from_logderivs(k, point, &l));
        let rhs = &bound * int((degree - e0) as i64);
        Ok((lhs < rhs).then(|| {
            Certificate::negative(
                Reason::EvenBoundViolation {
                    k,
                    point,
                    excluded: c.clone(),
                    determined: Vec::new(),
                    degree,
                    e0,
                    bound,
                    lhs,
                    rhs,
                },
                l,
            )
        }))
    };
    let at_one = f.eval_int(&BigInt::one());
    if at_one.is_zero() {
        return Ok(None);
    }
    if let Some(cert) = plain(Point::One, mu_c(k, c)?)? {
        return Ok(Some(cert));
    }
    if f.eval_int(&-BigInt::one()).is_zero() {
        return Ok(None);
    }
    plain(Point::MinusOne, minus_one_baseline(k))
}

/// Outcome of the refined bound: `R = M − Σ_{d∈A} e_d J_k(d)` against
/// `μ_{C∪A}(k)·r` with `r = deg − e0 − Σ_{d∈A} e_d φ(d)`.
pub(crate) fn refined_violates(residue: &BigRational, remaining: i64, bound: &BigRational) -> bool {
    remaining < 0 || (remaining == 0 && !residue.is_zero()) || *residue < bound * int(remaining)
}

pub(crate) fn residue_and_remaining(
    k: usize,
    m: &BigRational,
    determined: &[(u64, u32)],
    degree: usize,
    e0: usize,
) -> (BigRational, i64) {
    let mut residue = m.clone();
    let mut remaining = degree as i64 - e0 as i64;
    for &(d, e) in determined {
        residue -= from_bigint(jordan_totient(k as u32, d) * e);
        remaining -= euler_phi(d) as i64 * e as i64;
    }
    (residue, remaining)
}

/// Refined `k = 2` analysis at `+1`: repeatedly determine the exact
/// multiplicity of each index attaining `μ_{C∪A}(2)`, move it into `A` and
/// compare the residual Jordan sum with the residual degree.
fn refined_even_check(f: &IntPoly, c: &ExcludedSet) -> Result<Option<Certificate>> {
    let k = 2;
    if f.eval_int(&BigInt::one()).is_zero() {
        return Ok(None);
    }
    let e0 = f.x_adic_valuation();
    let degree = f.deg();
    let l = log_derivatives_oracle(f, k, &BigRational::one())?;
    let m = jordan_sum_from(k, &stirling_sum_from_logderivs(k, Point::One, &l));
    let mut determined: Vec<(u64, u32)> = Vec::new();
    loop {
        let current = c.with(determined.iter().map(|&(d, _)| d));
        let (mu, minimizers) = mu_c_with_minimizers(k, &current)?;
        let bound = from_bigint(mu.clone());
        let (residue, remaining) = residue_and_remaining(k, &m, &determined, degree, e0);
        if refined_violates(&residue, remaining, &bound) {
            let rhs = &bound * int(remaining);
            return Ok(Some(Certificate::negative(
                Reason::EvenBoundViolation {
                    k,
                    point: Point::One,
                    excluded: c.clone(),
                    determined,
                    degree,
                    e0,
                    bound,
                    lhs: residue,
                    rhs,
                },
                l,
            )));
        }
        if remaining == 0 || mu > BigInt::from(REFINE_CAP) {
            return Ok(None);
        }
        for d in minimizers {
            let e = if euler_phi(d) as usize <= degree { cyclotomic_multiplicity(f, d) } else { 0 };
            determined.push((d, e));
        }
    }
}

/// Full decision with the cheapest applicable certificate.
///
/// Runs the sign tests, the odd Stirling identities for `k ∈ {3, 5}`, the
/// plain Jordan bounds for `k ∈ {2, 4}`, the refined `k = 2` analysis, and
/// finally the exact factorization, which is attached to every result.
pub fn certify(f: &IntPoly) -> Result<Certificate> {
    let factorization = factor_kronecker(f)?;
    let found = first_negative(f)?;
    let kronecker = factorization.is_kronecker();
    match (found, kronecker) {
        (Some(cert), false) => Ok(cert.with_factorization(factorization)),
        (Some(cert), true) => Err(Error::Invariant(format!(
            "{} fired on the Kronecker polynomial {f}",
            cert.reason.tag()
        ))),
        (None, false) => Ok(Certificate {
            verdict: Verdict::NonKronecker,
            reason: Reason::NontrivialRemainder { remainder: factorization.remainder.clone() },
            witness: Vec::new(),
            factorization: Some(factorization),
        }),
        (None, true) => Ok(Certificate {
            verdict: Verdict::Kronecker,
            reason: Reason::CyclotomicProduct,
            witness: Vec::new(),
            factorization: Some(factorization),
        }),
    }
}

fn first_negative(f: &IntPoly) -> Result<Option<Certificate>> {
    if let Some(cert) = sign_tests(f) {
        return Ok(Some(cert));
    }
    for k in [3, 5] {
        if let Some(cert) = odd_identity_check(f, k)? {
            return Ok(Some(cert));
        }
    }
    let c = excluded_set(f);
    if !c.contains(1) {
        return Ok(None);
    }
    for k in [2, 4] {
        if let Some(cert) = even_bound_check(f, k, &c)? {
            return Ok(Some(cert));
        }
    }
    refined_even_check(f, &c)
}

/// Sum `Σ e_d J_k(d α_d)` over a factorization, the `−1` counterpart of the
/// Jordan sum.
pub fn jordan_sum_minus_one(k: usize, factors: &[(u64, u32)]) -> BigInt {
    factors.iter().map(|&(d, e)| jordan_totient(k as u32, n_alpha(d)) * e).sum()
}
