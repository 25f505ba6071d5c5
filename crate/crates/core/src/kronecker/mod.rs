//! Kronecker polynomials: exact cyclotomic factorization and certificates
//! explaining why a polynomial is not Kronecker.
//!
//! A monic integer polynomial is Kronecker when all its roots lie in the
//! closed unit disc, which happens exactly when it is `x^{e0}` times a
//! product of cyclotomic polynomials. [`factor_kronecker`] decides this by
//! trial division; the necessary conditions in [`checks`] (sign tests,
//! Stirling identities for the log-derivatives at `±1`, Jordan-totient lower
//! bounds) give cheap, independently checkable certificates.

mod certificate;
pub mod checks;
mod modular;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::totients_up_to;
use crate::poly::{cyclotomic, IntPoly};

pub use certificate::{Certificate, Reason, Verdict};
pub use checks::{
    certify, even_bound_check, excluded_set, jordan_sum_minus_one, mu_c, mu_c_with_minimizers, odd_identity_check,
    sign_tests, stirling_logderiv_sum, stirling_sum_from_logderivs,
    ExcludedSet, Family,
};

/// `f = x^{e0} · ∏ Φ_d^{e_d} · remainder`, with `remainder` free of
/// cyclotomic factors and of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloFactorization {
    pub e0: usize,
    /// `d ↦ e_d`, all multiplicities positive.
    pub factors: BTreeMap<u64, u32>,
    pub remainder: IntPoly,
}

impl CycloFactorization {
    /// Kronecker exactly when nothing is left over.
    pub fn is_kronecker(&self) -> bool {
        self.remainder.is_one()
    }

    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> IntPoly {
        let mut out = self.remainder.shift_up(self.e0);
        for (&d, &e) in &self.factors {
            out = &out * &cyclotomic(d).pow(e);
        }
        out
    }

    pub fn multiplicity(&self, d: u64) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    /// The cyclotomic part `x^{e0} ∏ Φ_d^{e_d}`.
    pub fn cyclotomic_part(&self) -> IntPoly {
        let mut out = IntPoly::one().shift_up(self.e0);
        for (&d, &e) in &self.factors {
            out = &out * &cyclotomic(d).pow(e);
        }
        out
    }
}

impl fmt::Display for CycloFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.e0 {
            0 => {}
            1 => parts.push("x".to_string()),
            e => parts.push(format!("x^{e}")),
        }
        for (&d, &e) in &self.factors {
            if e == 1 {
                parts.push(format!("Φ_{d}"));
            } else {
                parts.push(format!("Φ_{d}^{e}"));
            }
        }
        if !self.remainder.is_one() || parts.is_empty() {
            parts.push(format!("({})", self.remainder));
        }
        f.write_str(&parts.join(" · "))
    }
}

/// Largest `e` with `Φ_d^e | f`; zero for the zero polynomial.
pub fn cyclotomic_multiplicity(f: &IntPoly, d: u64) -> u32 {
    let phi = cyclotomic(d);
    let mut g = f.clone();
    let mut e = 0;
    while !g.is_zero() {
        match g.div_exact(&phi).expect("cyclotomic polynomials are monic") {
            Some(q) => {
                g = q;
                e += 1;
            }
            None => break,
        }
    }
    e
}

/// Indices `d ≤ 2N²` with `φ(d) ≤ N`, ascending; this is every `d` with
/// `φ(d) ≤ N` since `φ(d) ≥ √(d/2)`.
pub fn cyclotomic_candidates(n: usize) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let limit = 2 * n * n;
    let phi = totients_up_to(limit);
    (1..=limit as u64).filter(|&d| phi[d as usize] as usize <= n).collect()
}

/// Splits off `x^{e0}` and every cyclotomic factor of a monic `f`.
///
/// Each candidate `Φ_d` is first screened by evaluating `f` at a primitive
/// `d`-th root of unity modulo a large prime `p ≡ 1 (mod d)`; survivors are
/// divided out exactly, as often as they divide.
pub fn factor_kronecker(f: &IntPoly) -> Result<CycloFactorization> {
    if f.is_zero() {
        return Err(Error::Input("cannot factor the zero polynomial".into()));
    }
    if !f.is_monic() {
        return Err(Error::Input(format!("{f} is not monic")));
    }
    let e0 = f.x_adic_valuation();
    let mut rest = f.shift_down(e0);
    let mut factors = BTreeMap::new();
    for d in cyclotomic_candidates(rest.deg()) {
        let phi_d = totients_up_to(d as usize)[d as usize] as usize;
        if phi_d > rest.deg() {
            continue;
        }
        if !modular::may_vanish_at_primitive_root(&rest, d) {
            continue;
        }
        let e = cyclotomic_multiplicity(&rest, d);
        if e > 0 {
            rest = rest
                .div_exact(&cyclotomic(d).pow(e))
                .expect("monic")
                .expect("multiplicity was just computed");
            factors.insert(d, e);
        }
    }
    Ok(CycloFactorization { e0, factors, remainder: rest })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::euler_phi;
    use proptest::prelude::*;

    fn fk(k: usize) -> IntPoly {
        let mut c = vec![0i64; 2 * k + 1];
        c[0] += 1;
        c[1] -= 1;
        c[k] += 1;
        c[2 * k - 1] -= 1;
        c[2 * k] += 1;
        IntPoly::from_i64(&c)
    }

    #[test]
    fn candidates_cover_small_totients() {
        let c = cyclotomic_candidates(4);
        assert_eq!(c, vec![1, 2, 3, 4, 5, 6, 8, 10, 12]);
        for d in 1..=2000u64 {
            assert_eq!(euler_phi(d) <= 20, cyclotomic_candidates(20).contains(&d), "d={d}");
        }
    }

    #[test]
    fn examples() {
        let f = factor_kronecker(&IntPoly::from_i64(&[1, -1, 1])).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(6, 1)]));
        assert!(f.is_kronecker());
        let f4 = factor_kronecker(&fk(4)).unwrap();
        assert_eq!(f4.factors, BTreeMap::from([(10, 1), (12, 1)]));
        assert!(f4.is_kronecker());
        let f5 = factor_kronecker(&fk(5)).unwrap();
        assert!(f5.factors.is_empty());
        assert_eq!(f5.remainder, fk(5));
        let f7 = factor_kronecker(&fk(7)).unwrap();
        assert_eq!(f7.factors, BTreeMap::from([(6, 1)]));
        assert_eq!(f7.remainder.deg(), 12);
        assert!(factor_kronecker(&IntPoly::from_i64(&[1, 2])).is_err());
        assert!(factor_kronecker(&IntPoly::zero()).is_err());
    }

    #[test]
    fn powers_of_x_and_repeated_factors() {
        let g = &IntPoly::x().pow(3) * &(&cyclotomic(1).pow(2) * &cyclotomic(9));
        let f = factor_kronecker(&g).unwrap();
        assert_eq!(f.e0, 3);
        assert_eq!(f.factors, BTreeMap::from([(1, 2), (9, 1)]));
        assert_eq!(f.reconstruct(), g);
        assert_eq!(f.to_string(), "x^3 · Φ_1^2 · Φ_9");
    }

    proptest! {
        #[test]
        fn random_products_factor_back(
            parts in proptest::collection::btree_map(1u64..=40, 1u32..=2, 0..5),
            e0 in 0usize..3,
            extra in proptest::collection::vec(-3i64..4, 0..4),
        ) {
            let mut g = IntPoly::one().shift_up(e0);
            for (&d, &e) in &parts {
                g = &g * &cyclotomic(d).pow(e);
            }
            let f = factor_kronecker(&g).unwrap();
            prop_assert_eq!(&f.factors, &parts);
            prop_assert_eq!(f.e0, e0);
            prop_assert!(f.is_kronecker());
            let mut tail = extra.clone();
            tail.push(1);
            let h = &g * &IntPoly::from_i64(&tail);
            let fh = factor_kronecker(&h).unwrap();
            prop_assert_eq!(fh.reconstruct(), h);
            prop_assert!(fh.factors.iter().all(|(&d, _)| cyclotomic_multiplicity(&fh.remainder, d) == 0));
        }
    }
}
