//! Soundness and completeness of the Kronecker certifier, plus the Stirling
//! identities it relies on, over random cyclotomic products.

use cyclokit::combinat::bernoulli_plus;
use cyclokit::kronecker::*;
use cyclokit::numtheory::jordan_totient;
use cyclokit::poly::{coxeter_poly, cyclotomic, log_derivatives_oracle, IntPoly, Point};
use cyclokit::rational::{from_bigint, int};
use cyclokit::semigroup::fk;
use cyclokit::{BigInt, BigRational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Product {
    e0: usize,
    factors: Vec<(u64, u32)>,
    poly: IntPoly,
}

fn random_product(rng: &mut ChaCha8Rng, allow_one: bool) -> Product {
    let count = rng.gen_range(1..=4);
    let mut factors: Vec<(u64, u32)> = Vec::new();
    while factors.len() < count {
        let d = rng.gen_range(if allow_one { 1 } else { 2 }..=30u64);
        if factors.iter().all(|&(x, _)| x != d) {
            factors.push((d, rng.gen_range(1..=2)));
        }
    }
    factors.sort_unstable();
    let e0 = if rng.gen_bool(0.25) { rng.gen_range(1..=2) } else { 0 };
    let poly = factors
        .iter()
        .fold(IntPoly::monomial(BigInt::from(1), e0), |acc, &(d, e)| &acc * &cyclotomic(d).pow(e));
    Product { e0, factors, poly }
}

fn jordan_sum(k: usize, factors: &[(u64, u32)]) -> BigInt {
    factors.iter().map(|&(d, e)| jordan_totient(k as u32, d) * e).sum()
}

fn scaled(k: usize, sum: BigRational) -> BigRational {
    sum * int(k as i64) / bernoulli_plus(k)
}

#[test]
fn certify_is_sound_on_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = random_product(&mut rng, true);
        let f = &p.poly;
        assert!(sign_tests(f).is_none(), "{:?}", p.factors);
        for k in [3, 5] {
            assert!(odd_identity_check(f, k).unwrap().is_none(), "{:?}", p.factors);
        }
        let c = excluded_set(f);
        assert!(c.is_valid_for(f));
        if !f.eval_int(&BigInt::from(1)).is_zero() {
            for k in [2, 4] {
                assert!(even_bound_check(f, k, &c).unwrap().is_none(), "{:?} k={k}", p.factors);
            }
        }
        let cert = certify(f).unwrap();
        assert!(cert.is_kronecker(), "{:?}", p.factors);
        assert!(cert.verify_against(f));
        let fac = cert.factorization.unwrap();
        assert_eq!(fac.e0, p.e0);
        assert_eq!(fac.factors.into_iter().collect::<Vec<_>>(), p.factors);
    }
}

#[test]
fn stirling_identities_on_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen_minus_one = 0;
    for _ in 0..200 {
        let p = random_product(&mut rng, false);
        let f = &p.poly;
        for k in [2, 4, 6] {
            let m = scaled(k, stirling_logderiv_sum(f, k, Point::One).unwrap());
            assert_eq!(m, from_bigint(jordan_sum(k, &p.factors)), "{:?} k={k}", p.factors);
        }
        for k in [3, 5] {
            assert!(stirling_logderiv_sum(f, k, Point::One).unwrap().is_zero());
        }
        if p.factors.iter().any(|&(d, _)| d == 2) {
            continue;
        }
        seen_minus_one += 1;
        for k in [2, 4, 6] {
            let m = scaled(k, stirling_logderiv_sum(f, k, Point::MinusOne).unwrap());
            assert_eq!(m, from_bigint(jordan_sum_minus_one(k, &p.factors)), "{:?} k={k}", p.factors);
        }
        for k in [3, 5] {
            assert!(stirling_logderiv_sum(f, k, Point::MinusOne).unwrap().is_zero());
        }
    }
    assert!(seen_minus_one > 100);
}

#[test]
fn small_k_displays_with_e0() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let p = random_product(&mut rng, false);
        let f = &p.poly;
        let half = int((f.deg() + p.e0) as i64) / int(2);
        let l = log_derivatives_oracle(f, 5, &int(1)).unwrap();
        assert_eq!(l[0], half);
        assert_eq!(int(3) * &l[1] + &l[2], -half.clone());
        assert_eq!(int(15) * &l[1] + int(25) * &l[2] + int(10) * &l[3] + &l[4], -half.clone());
        if p.factors.iter().any(|&(d, _)| d == 2) {
            continue;
        }
        let l = log_derivatives_oracle(f, 5, &int(-1)).unwrap();
        assert_eq!(l[0], -half.clone());
        assert_eq!(int(3) * &l[1] - &l[2], -half.clone());
        assert_eq!(int(15) * &l[1] - int(25) * &l[2] + int(10) * &l[3] - &l[4], -half);
    }
}

#[test]
fn small_k_bounds_on_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let p = random_product(&mut rng, false);
        let f = &p.poly;
        let deg = int(f.deg() as i64);
        let e0 = int(p.e0 as i64);
        let half = (&deg + &e0) / int(2);
        let rest = &deg - &e0;
        let l = log_derivatives_oracle(f, 4, &int(1)).unwrap();
        assert!(l[1] >= &rest / int(4) - &half);
        assert!(int(7) * &l[1] + int(6) * &l[2] + &l[3] <= -(&rest / int(8)) - &half);
        if p.e0 == 0 {
            assert!(l[1] >= -(&deg / int(4)));
            assert!(int(7) * &l[1] + int(6) * &l[2] + &l[3] <= -(int(5) * &deg / int(8)));
        }
        if p.factors.iter().any(|&(d, _)| d == 2) {
            continue;
        }
        let l = log_derivatives_oracle(f, 4, &int(-1)).unwrap();
        assert!(l[1] >= &rest / int(3) - &half);
        assert!(int(7) * &l[1] - int(6) * &l[2] + &l[3] <= -(&rest / int(3)) - &half);
    }
}

#[test]
fn jordan_recovery_for_three_factors() {
    let f = &(&*cyclotomic(6) * &cyclotomic(10)) * &cyclotomic(12);
    let l = log_derivatives_oracle(&f, 2, &int(1)).unwrap();
    let recovered = (&l[0] + &l[1]) * int(2) / bernoulli_plus(2);
    assert_eq!(recovered, int(24 + 72 + 96));
}

#[test]
fn completeness_on_corpus() {
    let mut corpus: Vec<IntPoly> = (1..=60).map(|k| fk(k).unwrap()).collect();
    corpus.extend((6..=40).map(|n| coxeter_poly(n).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..300 {
        let deg = rng.gen_range(2..=24usize);
        let mut c = vec![0i64; deg + 1];
        c[0] = 1;
        c[deg] = 1;
        for i in 1..=deg / 2 {
            let v = rng.gen_range(-2..=2);
            c[i] = v;
            c[deg - i] = v;
        }
        corpus.push(IntPoly::from_i64(&c));
    }
    let mut kronecker = 0;
    for f in &corpus {
        let cert = certify(f).unwrap();
        let fac = factor_kronecker(f).unwrap();
        assert_eq!(cert.is_kronecker(), fac.is_kronecker(), "{}", f.to_human());
        assert!(cert.verify_against(f), "{}", f.to_human());
        kronecker += cert.is_kronecker() as usize;
    }
    assert!(kronecker >= 8);
}

#[test]
fn coxeter_family() {
    for n in 6..=9 {
        assert!(certify(&coxeter_poly(n).unwrap()).unwrap().is_kronecker(), "E_{n}");
    }
    for n in 10..=40 {
        let e = coxeter_poly(n).unwrap();
        let cert = sign_tests(&e).expect("sign test fires");
        assert!(cert.verify_against(&e), "E_{n}");
        assert_eq!(certify(&e).unwrap().reason.tag(), cert.reason.tag());
    }
}
