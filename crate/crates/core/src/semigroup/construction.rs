//! Symmetric, non-cyclotomic semigroups with a prescribed Frobenius number,
//! built by walking the tree of irreducible semigroups.

use super::family::s_k;
use super::NumericalSemigroup;
use crate::error::{Error, Result};

fn fail(condition: &str) -> Error {
    Error::Construction(format!("precondition failed: {condition}"))
}

/// `(S ∖ {x}) ∪ {F − x}` for a symmetric `S`, under the conditions that keep
/// the result symmetric with the same Frobenius number `F`.
pub fn child_symmetric(s: &NumericalSemigroup, x: u64) -> Result<NumericalSemigroup> {
    if !s.is_symmetric() {
        return Err(fail("S is symmetric"));
    }
    if !s.minimal_generators().contains(&x) {
        return Err(fail("x is a minimal generator"));
    }
    let f = s.frobenius();
    let xi = x as i64;
    if !(2 * xi > f && xi < f) {
        return Err(fail("F/2 < x < F"));
    }
    if s.contains((2 * xi - f) as u64) {
        return Err(fail("2x − F ∉ S"));
    }
    if 3 * xi == 2 * f {
        return Err(fail("3x ≠ 2F"));
    }
    if 4 * xi == 3 * f {
        return Err(fail("4x ≠ 3F"));
    }
    if f - xi >= s.multiplicity() as i64 {
        return Err(fail("F − x < m(S)"));
    }
    let partner = (f - xi) as u64;
    let gaps: Vec<u64> = s.gaps().iter().copied().filter(|&g| g != partner).chain([x]).collect();
    let child = NumericalSemigroup::from_gaps(&gaps)
        .map_err(|e| Error::Invariant(format!("child of {s} at {x} is not a semigroup: {e}")))?;
    if child.frobenius() != f || !child.is_symmetric() {
        return Err(Error::Invariant(format!("child {child} of {s} lost symmetry or Frobenius number")));
    }
    Ok(child)
}

/// A symmetric numerical semigroup with Frobenius number `F` whose
/// polynomial is not Kronecker, for odd `F ≥ 9`.
///
/// `F = 9, 11, 15` use the known minimal examples; `F ≡ 3 (mod 4)` goes
/// through two children of `S_k`, `F ≡ 1 (mod 4)` through one, with
/// `k = (F + 1)/2`.
pub fn noncyclotomic_symmetric_with_frobenius(f: i64) -> Result<NumericalSemigroup> {
    if f < 9 || f % 2 == 0 {
        return Err(Error::Domain(format!("F = {f}, need an odd integer ≥ 9")));
    }
    let s = match f {
        9 => NumericalSemigroup::from_generators(&[5, 6, 7, 8])?,
        11 => NumericalSemigroup::from_generators(&[5, 7, 8, 9])?,
        15 => NumericalSemigroup::from_generators(&[6, 7, 10, 11])?,
        _ => {
            let k = ((f + 1) / 2) as u64;
            let base = s_k(k as usize)?;
            if f % 4 == 3 {
                child_symmetric(&child_symmetric(&base, k)?, k + 2)?
            } else {
                child_symmetric(&base, k + 1)?
            }
        }
    };
    if s.frobenius() != f || !s.is_symmetric() {
        return Err(Error::Invariant(format!("{s} is not symmetric with Frobenius number {f}")));
    }
    if s.is_cyclotomic()?.is_kronecker() {
        return Err(Error::Invariant(format!("{s} turned out cyclotomic")));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::Reason;
    use crate::poly::IntPoly;
    use num_bigint::BigInt;

    fn signed_monomials(terms: &[(usize, i64)]) -> IntPoly {
        let deg = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![0i64; deg + 1];
        for &(e, s) in terms {
            c[e] += s;
        }
        IntPoly::from_i64(&c)
    }

    #[test]
    fn displayed_polynomials() {
        for k in 4..=20usize {
            let sk = s_k(k).unwrap();
            let s1 = child_symmetric(&sk, k as u64).unwrap();
            let want = signed_monomials(&[(0, 1), (1, -1), (k - 1, 1), (k, -1), (k + 1, 1), (2 * k - 1, -1), (2 * k, 1)]);
            assert_eq!(s1.semigroup_polynomial(), want, "k={k}");
            if k > 8 {
                let s2 = child_symmetric(&s1, k as u64 + 2).unwrap();
                let want = signed_monomials(&[
                    (0, 1),
                    (1, -1),
                    (k - 3, 1),
                    (k - 2, -1),
                    (k - 1, 1),
                    (k, -1),
                    (k + 1, 1),
                    (k + 2, -1),
                    (k + 3, 1),
                    (2 * k - 1, -1),
                    (2 * k, 1),
                ]);
                assert_eq!(s2.semigroup_polynomial(), want, "k={k}");
                if k % 2 == 0 {
                    assert_eq!(s2.semigroup_polynomial().eval_int(&BigInt::from(-1)), BigInt::from(-3));
                }
            }
            if k % 2 == 1 && 2 * k - 1 > 9 {
                let sbar = child_symmetric(&sk, k as u64 + 1).unwrap();
                let want = signed_monomials(&[
                    (0, 1),
                    (1, -1),
                    (k - 2, 1),
                    (k - 1, -1),
                    (k, 1),
                    (k + 1, -1),
                    (k + 2, 1),
                    (2 * k - 1, -1),
                    (2 * k, 1),
                ]);
                assert_eq!(sbar.semigroup_polynomial(), want, "k={k}");
                assert_eq!(sbar.semigroup_polynomial().eval_int(&BigInt::from(-1)), BigInt::from(-1));
            }
        }
    }

    #[test]
    fn frobenius_family() {
        assert_eq!(noncyclotomic_symmetric_with_frobenius(9).unwrap().minimal_generators(), &[5, 6, 7, 8]);
        let s = noncyclotomic_symmetric_with_frobenius(19).unwrap();
        assert_eq!(s.semigroup_polynomial().eval_int(&BigInt::from(-1)), BigInt::from(-3));
        assert_eq!(s.is_cyclotomic().unwrap().reason, Reason::NegativeAtMinusOne);
        let s = noncyclotomic_symmetric_with_frobenius(13).unwrap();
        assert_eq!(s.semigroup_polynomial().eval_int(&BigInt::from(-1)), BigInt::from(-1));
        for f in (9..=99).step_by(2) {
            let s = noncyclotomic_symmetric_with_frobenius(f).unwrap();
            assert_eq!(s.frobenius(), f);
        }
        assert!(noncyclotomic_symmetric_with_frobenius(7).is_err());
        assert!(noncyclotomic_symmetric_with_frobenius(20).is_err());
    }

    #[test]
    fn preconditions_are_named() {
        let s3 = s_k(3).unwrap();
        assert_eq!(child_symmetric(&s3, 3).unwrap().minimal_generators(), &[2, 7]);
        assert!(child_symmetric(&s3, 4).unwrap_err().to_string().contains("2x − F ∉ S"));
        let sk = s_k(6).unwrap();
        assert!(child_symmetric(&sk, 100).unwrap_err().to_string().contains("minimal generator"));
        let asym = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert!(child_symmetric(&asym, 4).unwrap_err().to_string().contains("symmetric"));
    }
}
