//! The family `S_k = {0, k, k+1, …} ∖ {2k − 1}` with
//! `P_{S_k} = f_k = 1 − x + x^k − x^{2k−1} + x^{2k}`.

use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::NumericalSemigroup;
use crate::combinat::bernoulli_plus;
use crate::error::{Error, Result};
use crate::kronecker::{certify, cyclotomic_multiplicity, factor_kronecker, Verdict};
use crate::poly::{log_derivatives_oracle, IntPoly};
use crate::rational::int;

/// `f_k = 1 − x + x^k − x^{2k−1} + x^{2k}` for `k ≥ 1`.
pub fn fk(k: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::Domain("f_k needs k ≥ 1".into()));
    }
    let mut c = vec![0i64; 2 * k + 1];
    c[0] += 1;
    c[1] -= 1;
    c[k] += 1;
    c[2 * k - 1] -= 1;
    c[2 * k] += 1;
    Ok(IntPoly::from_i64(&c))
}

/// `S_k`, given by its gaps `1, …, k−1, 2k−1`; equals `⟨k, …, 2k−2⟩` for `k ≥ 3`.
pub fn s_k(k: usize) -> Result<NumericalSemigroup> {
    if k == 0 {
        return Err(Error::Domain("S_k needs k ≥ 1".into()));
    }
    let k = k as u64;
    let gaps: Vec<u64> = (1..k).chain([2 * k - 1]).collect();
    NumericalSemigroup::from_gaps(&gaps)
}

/// Multiplicities of `Φ_6`, `Φ_10`, `Φ_12` in `f_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdPattern {
    pub phi6: u32,
    pub phi10: u32,
    pub phi12: u32,
}

impl GcdPattern {
    fn from_flags(phi6: bool, phi10: bool, phi12: bool) -> Self {
        GcdPattern { phi6: phi6 as u32, phi10: phi10 as u32, phi12: phi12 as u32 }
    }

    /// `gcd(f_k, Φ_6Φ_10Φ_12)` as a polynomial.
    pub fn to_poly(&self) -> IntPoly {
        [(6, self.phi6), (10, self.phi10), (12, self.phi12)]
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .fold(IntPoly::one(), |acc, (d, _)| &acc * &crate::poly::cyclotomic(d))
    }

    pub fn is_squarefree(&self) -> bool {
        self.phi6 <= 1 && self.phi10 <= 1 && self.phi12 <= 1
    }
}

impl fmt::Display for GcdPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (d, e) in [(6, self.phi6), (10, self.phi10), (12, self.phi12)] {
            match e {
                0 => {}
                1 => s.push_str(&format!("Φ_{d}")),
                e => s.push_str(&format!("Φ_{d}^{e}")),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

/// The six residue classes: `Φ_6` for `k ≡ 1, 7, 9 (12)`; `Φ_10` for
/// `k ≡ 2, 4 (10)`, `k ≢ 4 (12)`; `Φ_6Φ_12` for `k ≡ 3 (12)`; `Φ_12` for
/// `k ≡ 4 (12)`, `k ≢ 4, 52 (60)`; `Φ_10Φ_12` for `k ≡ 4, 52 (60)`; else `1`.
pub fn fk_gcd_pattern_predicted(k: usize) -> GcdPattern {
    let (r12, r10, r60) = (k % 12, k % 10, k % 60);
    if matches!(r12, 1 | 7 | 9) {
        GcdPattern::from_flags(true, false, false)
    } else if r12 == 3 {
        GcdPattern::from_flags(true, false, true)
    } else if matches!(r60, 4 | 52) {
        GcdPattern::from_flags(false, true, true)
    } else if r12 == 4 {
        GcdPattern::from_flags(false, false, true)
    } else if matches!(r10, 2 | 4) {
        GcdPattern::from_flags(false, true, false)
    } else {
        GcdPattern::from_flags(false, false, false)
    }
}

/// `gcd(f_k, Φ_6Φ_10Φ_12)` by exact division, checked against the residue
/// classification.
pub fn fk_gcd_pattern(k: usize) -> Result<GcdPattern> {
    let f = fk(k)?;
    let found = GcdPattern {
        phi6: cyclotomic_multiplicity(&f, 6),
        phi10: cyclotomic_multiplicity(&f, 10),
        phi12: cyclotomic_multiplicity(&f, 12),
    };
    let predicted = fk_gcd_pattern_predicted(k);
    if found != predicted {
        return Err(Error::Invariant(format!("k = {k}: division gives {found}, residue classes give {predicted}")));
    }
    Ok(found)
}

/// Result of searching `f_k` for cyclotomic factors beyond `Φ_6, Φ_10, Φ_12`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FkCyclotomicSearch {
    pub k: usize,
    /// No `Φ_n` with `n ∉ {6, 10, 12}` divides `f_k`.
    pub holds: bool,
    pub gcd: GcdPattern,
    pub remainder_degree: usize,
    /// Every `n` up to this bound was considered.
    pub searched_up_to: u64,
}

/// Searches all `n ≤ max(N, 2(2k)²)`, which covers every `n` with
/// `φ(n) ≤ deg f_k`.
pub fn fk_no_other_cyclotomic_factors(k: usize, n_cap: u64) -> Result<FkCyclotomicSearch> {
    if n_cap < 15 {
        return Err(Error::Domain(format!("search cap {n_cap} is below 15")));
    }
    let f = fk(k)?;
    let fac = factor_kronecker(&f)?;
    let holds = fac.e0 == 0 && fac.factors.keys().all(|d| matches!(d, 6 | 10 | 12));
    let gcd = GcdPattern { phi6: fac.multiplicity(6), phi10: fac.multiplicity(10), phi12: fac.multiplicity(12) };
    let degree = 2 * k as u64;
    Ok(FkCyclotomicSearch {
        k,
        holds,
        gcd,
        remainder_degree: fac.remainder.deg(),
        searched_up_to: n_cap.max(2 * degree * degree),
    })
}

/// One row of [`fk_theorem_sweep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub k: usize,
    #[serde(rename = "F_k", with = "crate::rational::serde_rational")]
    pub f_k: BigRational,
    pub gcd_pattern: String,
    pub verdict: Verdict,
    pub factorization: String,
}

fn sweep_row(k: usize) -> Result<SweepRow> {
    let fail = |what: String| Error::Invariant(format!("k = {k}: {what}"));
    let f = fk(k)?;
    let l = log_derivatives_oracle(&f, 2, &int(1))?;
    if l[0] != int(k as i64) || l[1] != int(3 * k as i64 - 2) {
        return Err(fail(format!("log-derivatives at 1 are {} and {}", l[0], l[1])));
    }
    if f.derivative(2).eval_rational(&int(1)) != int((k * k + 3 * k) as i64 - 2) {
        return Err(fail("f_k''(1) ≠ k² + 3k − 2".into()));
    }
    let f_k = (&l[0] + &l[1]) * int(2) / bernoulli_plus(2);
    if f_k != int(48 * k as i64 - 24) {
        return Err(fail(format!("F_k = {f_k}, expected 48k − 24")));
    }
    let pattern = fk_gcd_pattern(k)?;
    if !pattern.is_squarefree() {
        return Err(fail(format!("square cyclotomic factor in {pattern}")));
    }
    let cert = certify(&f)?;
    let expect_kronecker = k <= 4;
    if cert.is_kronecker() != expect_kronecker {
        return Err(fail(format!("verdict {:?}", cert.verdict)));
    }
    if !cert.verify_against(&f) {
        return Err(fail("certificate does not verify".into()));
    }
    let semigroup_poly = s_k(k)?.semigroup_polynomial();
    if semigroup_poly != f {
        return Err(fail("P_{S_k} ≠ f_k".into()));
    }
    Ok(SweepRow {
        k,
        f_k,
        gcd_pattern: pattern.to_string(),
        verdict: cert.verdict,
        factorization: cert.factorization.as_ref().expect("certify attaches it").to_string(),
    })
}

/// Rows for `1 ≤ k ≤ k_max`: checks `F_k = 48k − 24` from the
/// log-derivatives, the gcd pattern, and that `S_k` is cyclotomic exactly
/// for `k ≤ 4`. Any failure is an invariant error naming `k`.
pub fn fk_theorem_sweep(k_max: usize) -> Result<Vec<SweepRow>> {
    if k_max < 5 {
        return Err(Error::Domain(format!("k_max = {k_max}, need at least 5")));
    }
    (1..=k_max).into_par_iter().map(sweep_row).collect()
}
