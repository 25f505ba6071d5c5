//! Coefficient routes for Φ_n checked against each other and against
//! Lehmer's partition sum, written out here without the Bell machinery.

use cyclokit::combinat::partitions;
use cyclokit::cyclocoeffs::*;
use cyclokit::numtheory::{euler_phi, ramanujan_sum};
use cyclokit::poly::cyclotomic;
use cyclokit::rational::{factorial, from_bigint, frac, int};
use cyclokit::{BigInt, BigRational, Error};
use proptest::prelude::*;

#[test]
fn a105_and_flatness() {
    let want = BigInt::from(-2);
    assert_eq!(coeff_direct(105, 7), want);
    assert_eq!(coeff_moller(105, 7), want);
    assert_eq!(coeff_prefix_recurrence(105, 7).unwrap()[7], want);
    assert_eq!(coeff_bell(105, 7).unwrap(), want);
    assert_eq!(coeff_all(105, 7).unwrap(), want);
    for n in 1..=104u64 {
        assert!(is_flat(n), "Φ_{n} is not flat");
    }
    assert!(!is_flat(105));
}

fn lehmer(n: u64, k: usize) -> BigInt {
    let mut total = BigRational::from_integer(0.into());
    for p in partitions(k).iter() {
        let mut term = int(1);
        for (i, &lambda) in p.multiplicities().iter().enumerate() {
            let j = i as i64 + 1;
            let base = frac(-ramanujan_sum(j as u64, n), j);
            term = term * num_traits::pow(base, lambda as usize) / from_bigint(factorial(lambda as u64));
        }
        total += term;
    }
    assert!(total.is_integer());
    total.to_integer()
}

#[test]
fn lehmer_partition_form() {
    for n in 2..=60u64 {
        for k in 1..=10usize {
            assert_eq!(lehmer(n, k), coeff_bell(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn coefficients_are_palindromic() {
    for n in 2..=200u64 {
        let phi = euler_phi(n) as usize;
        for k in 0..=phi {
            assert_eq!(coeff_direct(n, k), coeff_direct(n, phi - k), "n={n} k={k}");
        }
    }
}

#[test]
fn taylor_route_covers_small_n() {
    for n in 2..=40u64 {
        assert_eq!(coeffs_taylor_from_one(n).unwrap(), cyclotomic(n).coeffs().to_vec(), "n={n}");
    }
    assert!(matches!(coeff_taylor_from_one(5, 9), Err(Error::Domain(_))));
    assert!(matches!(coeff_bell(1, 0), Err(Error::Domain(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]
    #[test]
    fn four_routes_agree(n in 2u64..=300, k in 0usize..=30) {
        let k = k.min(euler_phi(n) as usize);
        let direct = coeff_direct(n, k);
        prop_assert_eq!(coeff_moller(n, k), direct.clone());
        prop_assert_eq!(coeff_prefix_recurrence(n, k).unwrap()[k].clone(), direct.clone());
        prop_assert_eq!(coeff_bell(n, k).unwrap(), direct.clone());
        prop_assert_eq!(coeff_all(n, k).unwrap(), direct.clone());
        if n <= 40 {
            prop_assert_eq!(coeff_taylor_from_one(n, k).unwrap(), direct);
        }
    }
}
