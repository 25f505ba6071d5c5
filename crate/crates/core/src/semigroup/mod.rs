//! Numerical semigroups, their polynomials, and the `f_k` family.
//!
//! A numerical semigroup `S ⊆ ℕ` is closed under addition, contains `0` and
//! has finite complement (its gaps). Its semigroup polynomial
//! `P_S(x) = 1 + (x − 1) Σ_{g gap} x^g` is monic of degree `F(S) + 1`, and
//! `S` is called cyclotomic when `P_S` is Kronecker.

mod construction;
mod family;

use std::collections::{BinaryHeap, BTreeSet};
use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kronecker::{certify, Certificate};
use crate::numtheory::gcd;
use crate::poly::IntPoly;

pub use construction::{child_symmetric, noncyclotomic_symmetric_with_frobenius};
pub use family::{
    fk, fk_gcd_pattern, fk_gcd_pattern_predicted, fk_no_other_cyclotomic_factors, fk_theorem_sweep, s_k,
    FkCyclotomicSearch, GcdPattern, SweepRow,
};

/// Largest Frobenius number the constructors will materialize.
pub const MAX_FROBENIUS: i64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct NumericalSemigroup {
    minimal_generators: Vec<u64>,
    gaps: Vec<u64>,
    /// `−1` for `ℕ` itself.
    frobenius: i64,
    /// `apery[r]`: least element congruent to `r` modulo the multiplicity.
    apery: Vec<u64>,
}

impl TryFrom<Vec<u64>> for NumericalSemigroup {
    type Error = Error;

    fn try_from(gens: Vec<u64>) -> Result<Self> {
        NumericalSemigroup::from_generators(&gens)
    }
}

impl From<NumericalSemigroup> for Vec<u64> {
    fn from(s: NumericalSemigroup) -> Self {
        s.minimal_generators
    }
}

fn apery_set(m: u64, gens: &[u64]) -> Vec<u64> {
    let m_us = m as usize;
    let mut dist = vec![u64::MAX; m_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nr = (r + g as usize % m_us) % m_us;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

impl NumericalSemigroup {
    /// `⟨n_1, …, n_e⟩`. The generators need not be minimal.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::Input("generators must be a nonempty list of positive integers".into()));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::Input(format!("generators have gcd {g}, so the complement is infinite")));
        }
        let gens: Vec<u64> = gens.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let m = gens[0];
        if m as i64 > MAX_FROBENIUS {
            return Err(Error::Resource(format!("multiplicity {m} is too large")));
        }
        let apery = apery_set(m, &gens);
        let frobenius = *apery.iter().max().expect("m ≥ 1") as i64 - m as i64;
        if frobenius > MAX_FROBENIUS {
            return Err(Error::Resource(format!("Frobenius number {frobenius} exceeds {MAX_FROBENIUS}")));
        }
        let gaps = (1..frobenius.max(0) as u64 + 1).filter(|&x| x < apery[(x % m) as usize]).collect();
        let mut s = NumericalSemigroup { minimal_generators: Vec::new(), gaps, frobenius, apery };
        s.minimal_generators = s.compute_minimal_generators();
        Ok(s)
    }

    /// The semigroup `ℕ ∖ gaps`; errors if that set is not closed under
    /// addition.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let set: BTreeSet<u64> = gaps.iter().copied().collect();
        if set.contains(&0) {
            return Err(Error::Input("0 cannot be a gap".into()));
        }
        let f = set.last().copied().unwrap_or(0);
        if f as i64 > MAX_FROBENIUS {
            return Err(Error::Resource(format!("Frobenius number {f} exceeds {MAX_FROBENIUS}")));
        }
        let m = (1..).find(|x| !set.contains(x)).expect("finite gap set");
        let candidates: Vec<u64> = (m..=f + m).filter(|x| !set.contains(x)).collect();
        let s = Self::from_generators(&candidates)?;
        if s.gaps.iter().copied().collect::<BTreeSet<_>>() != set {
            return Err(Error::Input("the complement of the gaps is not closed under addition".into()));
        }
        Ok(s)
    }

    fn compute_minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        let mut out = vec![m];
        for (r, &w) in self.apery.iter().enumerate().skip(1) {
            let decomposable = self
                .apery
                .iter()
                .enumerate()
                .skip(1)
                .any(|(r2, &w2)| r2 != r && w2 < w && self.contains(w - w2));
            if !decomposable {
                out.push(w);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn contains(&self, x: u64) -> bool {
        let m = self.apery.len() as u64;
        x >= self.apery[(x % m) as usize]
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Least nonzero element `m(S)`.
    pub fn multiplicity(&self) -> u64 {
        self.apery.len() as u64
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    /// The Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// `x ∉ S ⇔ F − x ∈ S` for all integers `x`, which is equivalent to `P_S`
    /// being self-reciprocal; both are computed and must agree.
    pub fn is_symmetric(&self) -> bool {
        let by_definition = self.is_symmetric_by_definition();
        assert_eq!(
            by_definition,
            self.semigroup_polynomial().is_self_reciprocal(),
            "symmetry characterizations disagree for {self}"
        );
        by_definition
    }

    /// Symmetry straight from the definition, without `P_S`.
    pub fn is_symmetric_by_definition(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|x| self.contains(x as u64) != self.contains((f - x) as u64))
    }

    /// `P_S(x) = 1 + (x − 1) Σ_{g gap} x^g`.
    pub fn semigroup_polynomial(&self) -> IntPoly {
        let len = (self.frobenius + 2) as usize;
        let mut c = vec![BigInt::from(0); len];
        c[0] += 1;
        for &g in &self.gaps {
            c[g as usize + 1] += 1;
            c[g as usize] -= 1;
        }
        IntPoly::new(c)
    }

    /// Cyclotomic exactly when the certificate's verdict is Kronecker.
    pub fn is_cyclotomic(&self) -> Result<Certificate> {
        certify(&self.semigroup_polynomial())
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators.iter().map(u64::to_string).collect();
        write!(f, "⟨{}⟩", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Membership by brute-force closure, independent of the Apéry set.
    fn brute_members(gens: &[u64], limit: u64) -> Vec<bool> {
        let mut inside = vec![false; limit as usize + 1];
        inside[0] = true;
        for x in 1..=limit {
            inside[x as usize] = gens.iter().any(|&g| g <= x && inside[(x - g) as usize]);
        }
        inside
    }

    #[test]
    fn small_examples() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.genus(), 1);
        assert!(s.is_symmetric());
        assert_eq!(s.semigroup_polynomial(), IntPoly::from_i64(&[1, -1, 1]));
        let s = NumericalSemigroup::from_generators(&[5, 6, 7, 8]).unwrap();
        assert_eq!(s.frobenius(), 9);
        assert!(s.is_symmetric());
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(s.frobenius(), 2);
        assert!(!s.is_symmetric());
        let s = NumericalSemigroup::from_generators(&[6, 9, 20, 12, 26]).unwrap();
        assert_eq!(s.minimal_generators(), &[6, 9, 20]);
        assert_eq!(s.frobenius(), 43);
        let n = NumericalSemigroup::from_generators(&[1, 5]).unwrap();
        assert_eq!((n.frobenius(), n.genus()), (-1, 0));
        assert!(n.semigroup_polynomial().is_one());
        assert!(NumericalSemigroup::from_generators(&[4, 6]).is_err());
        assert!(NumericalSemigroup::from_generators(&[]).is_err());
        assert!(NumericalSemigroup::from_gaps(&[1, 3, 4]).is_err());
        assert_eq!(NumericalSemigroup::from_gaps(&[1, 2, 4, 7]).unwrap().minimal_generators(), &[3, 5]);
    }

    #[test]
    fn serde_as_generators() {
        let s = NumericalSemigroup::from_generators(&[5, 7, 8, 9]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[5,7,8,9]");
        assert_eq!(serde_json::from_str::<NumericalSemigroup>(&json).unwrap(), s);
        assert!(serde_json::from_str::<NumericalSemigroup>("[2,4]").is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(gens in proptest::collection::vec(2u64..30, 1..5)) {
            let Ok(s) = NumericalSemigroup::from_generators(&gens) else {
                prop_assert!(gens.iter().fold(0, |a, &x| gcd(a, x)) != 1);
                return Ok(());
            };
            let limit = (s.frobenius() + 40) as u64;
            let inside = brute_members(&gens, limit);
            for x in 0..=limit {
                prop_assert_eq!(s.contains(x), inside[x as usize]);
            }
            prop_assert_eq!(s.frobenius(), s.gaps().last().map_or(-1, |&g| g as i64));
            for &g in s.minimal_generators() {
                let others: Vec<u64> = s.minimal_generators().iter().copied().filter(|&h| h != g).collect();
                prop_assert!(others.is_empty() || !brute_members(&others, g)[g as usize]);
            }
            let p = s.semigroup_polynomial();
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.deg() as i64, s.frobenius() + 1);
            prop_assert_eq!(p.eval_int(&BigInt::from(1)), BigInt::from(1));
            prop_assert_eq!(s.is_symmetric_by_definition(), p.is_self_reciprocal());
            prop_assert_eq!(NumericalSemigroup::from_gaps(s.gaps()).unwrap(), s.clone());
        }
    }
}
