use std::collections::HashSet;

use discmath::numbers::{
    enumerate_rationals, factorize, is_prime, make_rational, primes_stream, rational_arith,
    RationalOp,
};
use discmath::{Integer, Rational};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| make_rational(n.into(), d.into()).unwrap())
}

fn naive_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while n > 1 {
        if n % d == 0 {
            out.push(d);
            n /= d;
        } else {
            d += 1;
        }
    }
    out
}

fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            let inv = rational_arith(RationalOp::Div, &Rational::one(), &a).unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn normal_form_is_a_fixed_point(n in -1000i64..1000, d in -1000i64..1000) {
        prop_assume!(d != 0);
        let r = make_rational(n.into(), d.into()).unwrap();
        prop_assert!(r.denom() > &Integer::zero());
        prop_assert!(r.numer().gcd(r.denom()).is_one());
        let again = make_rational(r.numer().clone(), r.denom().clone()).unwrap();
        prop_assert_eq!(again.numer(), r.numer());
        prop_assert_eq!(again.denom(), r.denom());
        prop_assert_eq!(again.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn text_round_trip(r in rational()) {
        prop_assert_eq!(discmath::numbers::parse_rational(&r.to_string()).unwrap(), r);
    }
}

#[test]
fn factorization_matches_naive_oracle() {
    for n in 2u64..10_000 {
        let got = factorize(&Integer::from(n)).unwrap();
        let want: Vec<Integer> = naive_factors(n).into_iter().map(Integer::from).collect();
        assert_eq!(got, want, "n = {n}");
        assert!(got.iter().all(is_prime));
        assert_eq!(got.iter().product::<Integer>(), Integer::from(n));
    }
}

#[test]
fn prime_stream_matches_sieve() {
    let oracle = sieve(1000);
    assert_eq!(oracle.len(), 168);
    let got: Vec<Integer> = primes_stream().take(168).collect();
    assert_eq!(
        got,
        oracle.into_iter().map(Integer::from).collect::<Vec<_>>()
    );
}

#[test]
fn rational_enumeration_is_exhaustive_and_duplicate_free() {
    let prefix: Vec<Rational> = enumerate_rationals().take(1000).collect();
    let distinct: HashSet<&Rational> = prefix.iter().collect();
    assert_eq!(distinct.len(), 1000);
    for r in &prefix {
        assert!(r.denom() > &Integer::zero());
        assert!(r.numer().gcd(r.denom()).is_one());
    }
    let first200: HashSet<&Rational> = prefix[..200].iter().collect();
    for p in -6i64..=6 {
        for q in 1i64..=6 {
            let r = make_rational(p.into(), q.into()).unwrap();
            assert!(first200.contains(&r), "{r} missing from the first 200");
        }
    }
}
