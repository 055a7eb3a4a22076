mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use witt_drw::ring::arith::{divisors, mobius};
use witt_drw::ring::{exact_div, frobenius_lift_poly, IntPoly, TruncationSet};

proptest! {
    #[test]
    fn mobius_sums_vanish(l in 2u64..2000) {
        let s: i64 = divisors(l).into_iter().map(|k| mobius(k) as i64).sum();
        prop_assert_eq!(s, 0);
    }

    #[test]
    fn exact_div_inverts_scaling(f in common::poly(2, 4, 9), n in prop_oneof![-50i64..-1, 1i64..50]) {
        let n = BigInt::from(n);
        prop_assert_eq!(exact_div(&f.scale(&n), &n).unwrap(), f);
    }

    #[test]
    fn frobenius_lift_is_a_ring_map(f in common::poly(2, 3, 9), g in common::poly(2, 3, 9), p in prop::sample::select(vec![2u64, 3, 5])) {
        prop_assert_eq!(frobenius_lift_poly(&(&f * &g), p), &frobenius_lift_poly(&f, p) * &frobenius_lift_poly(&g, p));
        prop_assert_eq!(frobenius_lift_poly(&(&f + &g), p), &frobenius_lift_poly(&f, p) + &frobenius_lift_poly(&g, p));
    }

    #[test]
    fn frobenius_lift_is_pth_power_mod_p(f in common::poly(2, 4, 9), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let diff = &frobenius_lift_poly(&f, p) - &f.pow(p);
        prop_assert!(diff.is_divisible_by(&BigInt::from(p)));
    }

    #[test]
    fn ring_axioms(f in common::poly(2, 3, 9), g in common::poly(2, 3, 9), h in common::poly(2, 3, 9)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn derived_views_are_consistent(n in 1u64..200, m in 1u64..12, p in prop::sample::select(vec![2u64, 3, 5])) {
        let s = TruncationSet::divisors_of(n);
        let sigma = s.elems().iter().fold(1u64, |a, &k| num_integer::lcm(a, k));
        prop_assert_eq!(s.lcm(), sigma);
        for k in s.quotient(m).elems() {
            prop_assert!(s.contains(k * m));
        }
        for j in 1..=n {
            prop_assert_eq!(s.quotient(m).contains(j), s.contains(j * m));
            prop_assert_eq!(s.coprime_part(p).contains(j), s.contains(j) && j % p != 0);
        }
    }
}

#[test]
fn frobenius_lift_examples() {
    let x = IntPoly::var(1, 0);
    assert_eq!(frobenius_lift_poly(&x, 2), x.pow(2));
    let f = &x + &IntPoly::one(1);
    let phi = frobenius_lift_poly(&f, 2);
    assert_eq!(phi, &x.pow(2) + &IntPoly::one(1));
    assert_eq!(&f.pow(2) - &phi, x.scale_i64(2));
    assert_eq!(frobenius_lift_poly(&IntPoly::constant(1, 5), 3), IntPoly::constant(1, 5));
}
