mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use witt_drw::forms::{d_poly, DiffForm};
use witt_drw::linalg::{exactness_modulus, howell_solve, verify_witness, ModMatrix};
use witt_drw::ring::IntPoly;

/// Every vector of `(ℤ/N)^len`.
fn all_vectors(modulus: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v| (0..modulus).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

proptest! {
    #[test]
    fn howell_matches_exhaustive_search(
        modulus in prop::sample::select(vec![4u64, 9]),
        entries in prop::collection::vec(0i64..9, 9),
        b in prop::collection::vec(0i64..9, 3),
    ) {
        let a = ModMatrix::new(modulus, 3, 3, entries).unwrap();
        let target: Vec<u64> = b.iter().map(|&x| x as u64 % modulus).collect();
        let solvable = all_vectors(modulus, 3).iter().any(|x| a.apply(x) == target);
        let got = howell_solve(&a, &b).unwrap();
        prop_assert_eq!(got.is_some(), solvable);
        if let Some(x) = got {
            prop_assert_eq!(a.apply(&x), target);
        }
    }

    #[test]
    fn exactness_witnesses_are_sound(
        w in common::form(1, 2),
        v in common::form(2, 3),
        modulus in prop::sample::select(vec![2u64, 3, 4, 8, 9, 25, 27]),
    ) {
        for omega in [w, v] {
            if let Some(g) = exactness_modulus(&omega, modulus).unwrap() {
                prop_assert!(verify_witness(&omega, &g, modulus));
            }
        }
    }

    #[test]
    fn exact_forms_are_found(g in common::form(1, 3), h in common::form(2, 3), modulus in prop::sample::select(vec![4u64, 9, 8])) {
        // dg + N·h always lies in NΩ + dΩ
        let omega = &g.differential() + &h.scale_i64(modulus as i64);
        prop_assert!(exactness_modulus(&omega, modulus).unwrap().is_some());
    }
}

/// Over two variables: `ω = a dx + b dy` with `a, b` of degree ≤ 1 modulo
/// 2 against all `g` of degree ≤ 2.
#[test]
fn completeness_in_two_variables_mod_two() {
    let monos: Vec<Vec<u32>> = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]];
    let poly_of = |coeffs: &[u64], basis: &[Vec<u32>]| {
        IntPoly::from_terms(2, coeffs.iter().zip(basis).map(|(&c, e)| (BigInt::from(c), e.clone())).collect::<Vec<_>>()).unwrap()
    };
    let reachable: Vec<DiffForm> =
        all_vectors(2, 6).iter().map(|c| d_poly(&poly_of(c, &monos)).map_coeffs(|f| reduce(f, 2))).collect();
    for c in all_vectors(2, 6) {
        let a = poly_of(&c[..3], &monos[..3]);
        let b = poly_of(&c[3..], &monos[..3]);
        let omega = &DiffForm::term(a, vec![0]).unwrap() + &DiffForm::term(b, vec![1]).unwrap();
        let brute = reachable.contains(&omega);
        assert_eq!(exactness_modulus(&omega, 2).unwrap().is_some(), brute, "{omega:?}");
    }
}

fn reduce(f: &IntPoly, n: u64) -> IntPoly {
    let n = BigInt::from(n);
    IntPoly::from_terms(f.vars(), f.terms().map(|(m, c)| (((c % &n) + &n) % &n, m.exps().to_vec())).collect::<Vec<_>>()).unwrap()
}
