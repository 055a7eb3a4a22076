mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use witt_drw::axioms;
use witt_drw::drw::{drw_dwork_check, drw_lift, DrwForm};
use witt_drw::forms::DiffForm;
use witt_drw::linalg::solve_integer;
use witt_drw::ring::{IntPoly, TruncationSet};
use witt_drw::sample::{self, PolyShape};
use witt_drw::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complex_identities(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        for check in [
            axioms::dd_squared,
            axioms::leibniz,
            axioms::dd_frobenius,
            axioms::verschiebung_dd,
            axioms::frobenius_dd_verschiebung,
            axioms::verschiebung_frobenius_dd,
            axioms::dd_verschiebung_dd,
            axioms::euclid,
            axioms::frobenius_verschiebung_drw,
            axioms::coprime_commutation_drw,
            axioms::restriction_commutes,
            axioms::convention_roundtrip,
            axioms::divisibility_identity,
        ] {
            let out = check(&mut rng);
            prop_assert!(out.is_ok(), "{:?}", out);
        }
    }

    #[test]
    fn congruence_families(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        for check in [axioms::frob_minus_one, axioms::congruences2, axioms::congruences4, axioms::multi_prime_necessity] {
            let out = check(&mut rng);
            prop_assert!(out.is_ok(), "{:?}", out);
        }
    }

    #[test]
    fn certified_forms_lift(seed in any::<u64>(), q in 0usize..=2, p in prop::sample::select(vec![2u64, 3])) {
        let s = TruncationSet::p_typical(p, if p == 2 { 2 } else { 1 });
        let mut rng = sample::rng(seed);
        let w = sample::certified(&mut rng, &s, q, 2, PolyShape::default());
        let out = axioms::dwork_de_rham_case(&w, p);
        prop_assert!(out.is_ok(), "{:?}", out);
    }

    /// On arbitrary tuples the congruence test and the constructive lift
    /// must agree: the lift either reproduces the tuple or reports the same
    /// failing level.
    #[test]
    fn check_iff_lift(seed in any::<u64>(), q in 0usize..=2) {
        let s = TruncationSet::p_typical(2, 1);
        let mut rng = sample::rng(seed);
        let mut raw = sample::raw_tuple(&mut rng, &s, q, 2, PolyShape::small());
        if seed % 2 == 0 {
            // bias towards members: replace the top component by φ₂ of the bottom one
            let comps = vec![raw.at(1).clone(), witt_drw::drw::phi_form(raw.at(1), 2)];
            raw = DrwForm::from_components(q, 2, s.clone(), comps).unwrap();
        }
        let accepted = drw_dwork_check(&raw, 2).unwrap();
        match drw_lift(&raw, 2) {
            Ok(expr) => {
                prop_assert!(accepted);
                prop_assert_eq!(expr.evaluate(&s).unwrap(), raw);
            }
            Err(Error::NotInImage { .. }) => prop_assert!(!accepted),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

/// All polynomials in one variable of degree ≤ 2 with coefficients in
/// {−1, 0, 1}.
fn small_polys() -> Vec<IntPoly> {
    let mut out = Vec::new();
    for c0 in -1..=1 {
        for c1 in -1..=1 {
            for c2 in -1..=1 {
                let terms = vec![(BigInt::from(c0), vec![0]), (BigInt::from(c1), vec![1]), (BigInt::from(c2), vec![2])];
                out.push(IntPoly::from_terms(1, terms).unwrap());
            }
        }
    }
    out
}

fn coordinates(w: &DrwForm, rows: &[(usize, u32)]) -> Vec<BigInt> {
    rows.iter().map(|&(i, e)| w.comps()[i].coeff(&[0]).coeff(&[e])).collect()
}

/// Is `target` in the ℤ-span of every `V_a⟨r⟩𝕕V_b⟨s⟩` and `𝕕V_b⟨s⟩` with
/// `r, s` from [`small_polys`] over `S = {1,2}`?
fn in_bounded_span(target: &DrwForm) -> bool {
    let s = TruncationSet::p_typical(2, 1);
    let polys = small_polys();
    let mut gens = Vec::new();
    for b in [1u64, 2] {
        for r1 in &polys {
            let dv = DrwForm::generator(b, r1, &s).unwrap().dd().unwrap();
            gens.push(dv.clone());
            for a in [1u64, 2] {
                for r0 in &polys {
                    gens.push(DrwForm::generator(a, r0, &s).unwrap().mul(&dv).unwrap());
                }
            }
        }
    }
    let max_deg = gens.iter().chain([target]).flat_map(|w| w.comps().iter().filter_map(DiffForm::max_coeff_degree)).max().unwrap_or(0);
    let rows: Vec<(usize, u32)> = (0..2).flat_map(|i| (0..=max_deg).map(move |e| (i, e))).collect();
    let columns: Vec<Vec<BigInt>> = gens.iter().map(|g| coordinates(g, &rows)).collect();
    let a: Vec<Vec<BigInt>> = (0..rows.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    solve_integer(&a, &coordinates(target, &rows)).is_some()
}

#[test]
fn bounded_generator_search_spot_check() {
    let s = TruncationSet::p_typical(2, 1);
    let t = IntPoly::var(1, 0);
    let tuple = |f: IntPoly| {
        DrwForm::from_components(1, 1, s.clone(), vec![DiffForm::zero(1, 1), DiffForm::term(f, vec![0]).unwrap()]).unwrap()
    };
    let dt = tuple(IntPoly::one(1));
    let tdt = tuple(t);
    assert!(drw_dwork_check(&dt, 2).unwrap());
    assert!(in_bounded_span(&dt));
    assert!(!drw_dwork_check(&tdt, 2).unwrap());
    assert!(!in_bounded_span(&tdt));
}
