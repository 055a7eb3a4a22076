//! The eight acceptance criteria, each reported as one PASS/FAIL line on
//! stderr (written directly, so the lines survive output capture).

use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use witt_drw::axioms::{self, IDENTITIES};
use witt_drw::drw::{drw_dwork_check, drw_lift, drw_multi_check, dual_functional, dual_functional_mobius, DrwForm};
use witt_drw::forms::DiffForm;
use witt_drw::linalg::{exactness_mod, verify_witness};
use witt_drw::ring::{IntPoly, TruncationSet};
use witt_drw::sample::{self, PolyShape};
use witt_drw::witt::{
    blowup_merge, blowup_split, dwork_check, iterated_split, iterated_split_witt, mu_element, GhostTuple, WittVector,
};
use witt_drw::Error;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn t() -> IntPoly {
    IntPoly::var(1, 0)
}

fn one_form(f: IntPoly) -> DiffForm {
    DiffForm::term(f, vec![0]).unwrap()
}

fn dwork_oracle_equivalence() -> Outcome {
    let sets = [vec![1, 2], vec![1, 2, 4], vec![1, 2, 3, 6]];
    let mut rng = sample::rng(101);
    let (mut agree, mut integral) = (0, 0);
    let total = 500;
    for i in 0..total {
        let vars = [0usize, 1, 2][i % 3];
        let s = TruncationSet::new(sets[(i / 3) % 3].clone()).unwrap();
        let a = sample::witt_vector(&mut rng, &s, vars, PolyShape::default());
        let mut comps = a.ghost().comps().to_vec();
        if i % 2 == 1 {
            let j = rng.gen_range(0..comps.len());
            comps[j] = &comps[j] + &IntPoly::one(vars);
        }
        let g = GhostTuple::new(s, vars, comps).unwrap();
        let lifted = WittVector::from_ghost(g.clone());
        integral += lifted.is_ok() as usize;
        agree += (dwork_check(&g) == lifted.is_ok()) as usize;
    }
    outcome(agree == total, format!("{agree}/{total} agree, {integral} integral"))
}

fn run_named(names: &[&str], seed: u64, cases: usize) -> Outcome {
    let mut failures = Vec::new();
    for name in names {
        let index = IDENTITIES.iter().position(|i| i.name == *name).expect("registered identity");
        let report = axioms::run_identity(index, seed, cases);
        if !report.passed() {
            failures.push(format!("{}: {} failures, e.g. {:?}", report.name, report.failures, report.counterexample));
        }
    }
    let detail = if failures.is_empty() {
        format!("{} identities x {cases} certified forms, 0 violations", names.len())
    } else {
        failures.join("; ")
    };
    outcome(failures.is_empty(), detail)
}

fn witt_complex_axioms() -> Outcome {
    run_named(
        &[
            "dd∘dd = 0",
            "Leibniz rule for dd",
            "dd F_n = n F_n dd",
            "V_n dd = n dd V_n",
            "F_n dd V_n = dd",
            "V_n F_n dd = dd V_n F_n",
            "dd V_n dd = 0",
            "F_m dd V_n (Euclid)",
        ],
        202,
        100,
    )
}

fn divisibility_identity() -> Outcome {
    let s = TruncationSet::divisors_of(6);
    let mut rng = sample::rng(303);
    let mut violations = Vec::new();
    for (p, k) in [(2u64, 1u64), (2, 3), (3, 1)] {
        for _ in 0..50 {
            let vars = rng.gen_range(1..=2);
            let r = sample::poly(&mut rng, vars, PolyShape::default());
            if let Err(c) = axioms::divisibility_identity_case(p, k, &r, &s) {
                violations.push(c);
            }
        }
    }
    let first = violations.first().map_or(String::new(), |c| format!(", e.g. {c}"));
    outcome(violations.is_empty(), format!("3 (p,k) pairs x 50 r, {} violations{first}", violations.len()))
}

fn dwork_de_rham_roundtrip() -> Outcome {
    let s = TruncationSet::p_typical(2, 2);
    let mut rng = sample::rng(404);
    let mut failures = Vec::new();
    for i in 0..100 {
        let q = 1 + i % 2;
        let vars = rng.gen_range(1..=2);
        let w = sample::certified(&mut rng, &s, q, vars, PolyShape::default());
        if let Err(c) = axioms::dwork_de_rham_case(&w, 2) {
            failures.push(c);
        }
    }
    let s12 = TruncationSet::p_typical(2, 1);
    let tuple = |f: IntPoly| DrwForm::from_components(1, 1, s12.clone(), vec![DiffForm::zero(1, 1), one_form(f)]).unwrap();
    let dt = tuple(IntPoly::one(1));
    let tdt = tuple(t());
    let dt_ok = drw_dwork_check(&dt, 2).unwrap() && drw_lift(&dt, 2).unwrap().evaluate(&s12).unwrap() == dt;
    let tdt_rejected = !drw_dwork_check(&tdt, 2).unwrap() && drw_lift(&tdt, 2) == Err(Error::NotInImage { level: 0 });
    outcome(
        failures.is_empty() && dt_ok && tdt_rejected,
        format!("100 expressions, {} failures; (0,dt) accepted: {dt_ok}; (0,t dt) rejected: {tdt_rejected}", failures.len()),
    )
}

fn multi_prime_necessity() -> Outcome {
    let s = TruncationSet::divisors_of(6);
    let mut rng = sample::rng(505);
    let mut failed = 0;
    for _ in 0..100 {
        let q = rng.gen_range(0..=2);
        let vars = rng.gen_range(1..=2);
        let w = sample::certified(&mut rng, &s, q, vars, PolyShape::default());
        for p in [2, 3] {
            failed += !drw_multi_check(&w, p).unwrap() as usize;
        }
    }
    let worked = DrwForm::generator(3, &t(), &s).unwrap().dd().unwrap();
    let worked_ok = drw_multi_check(&worked, 2).unwrap() && drw_multi_check(&worked, 3).unwrap();
    let tdt = one_form(t());
    let witness = t().pow(2).scale_i64(2);
    let witness_ok = verify_witness(&tdt, &DiffForm::from_poly(witness.clone()), 3)
        && exactness_mod(&tdt, 3, 1).unwrap().map(|g| g.as_poly()) == Some(witness);
    outcome(
        failed == 0 && worked_ok && witness_ok,
        format!("200 checks, {failed} failures; dd V_3<t> passes: {worked_ok}; d(2t^2) witness: {witness_ok}"),
    )
}

fn torsionless_functionals() -> Outcome {
    let s = TruncationSet::p_typical(2, 1);
    let mut rng = sample::rng(606);
    let (mut mismatched, mut non_integral, mut separation_failures) = (0, 0, 0);
    for i in 0..100 {
        let vars = 1 + i % 2;
        let w = sample::raw_tuple(&mut rng, &s, 1, vars, PolyShape::default());
        let mut all_zero = true;
        for &m in s.elems() {
            for idx in sample::index_tuples(vars, 1) {
                let a = dual_functional(&w, m, &idx).unwrap();
                let b = dual_functional_mobius(&w, m, &idx).unwrap();
                mismatched += (a != b) as usize;
                non_integral += WittVector::from_ghost(a.ghost().clone()).is_err() as usize;
                all_zero &= a.is_zero();
            }
        }
        separation_failures += (all_zero != w.is_zero()) as usize;
    }
    let zero = DrwForm::zero(1, 2, s.clone());
    let zero_ok = sample::index_tuples(2, 1)
        .iter()
        .all(|idx| s.elems().iter().all(|&m| dual_functional(&zero, m, idx).unwrap().is_zero()));
    let ok = mismatched == 0 && non_integral == 0 && separation_failures == 0 && zero_ok;
    outcome(
        ok,
        format!("100 tuples: {mismatched} mismatches, {non_integral} non-integral, {separation_failures} separation failures"),
    )
}

fn blowup_suite() -> Outcome {
    let s = TruncationSet::divisors_of(6);
    let mut rng = sample::rng(707);
    let mut split_failures = 0;
    for _ in 0..200 {
        let p = *[2u64, 3].choose(&mut rng).unwrap();
        let vars = rng.gen_range(0..=2);
        let g = sample::ghost_tuple(&mut rng, &s, vars, PolyShape::default());
        let (u, v) = blowup_split(&g, p).unwrap();
        let back = blowup_merge(&u, &v, p).unwrap();
        split_failures += (back != g || blowup_split(&back, p).unwrap() != (u, v)) as usize;
    }
    let mut rule_failures = 0;
    for _ in 0..100 {
        let m = *s.elems().choose(&mut rng).unwrap();
        let n = *s.elems().choose(&mut rng).unwrap();
        let vars = rng.gen_range(0..=2);
        let r = sample::poly(&mut rng, vars, PolyShape::default());
        let x = sample::poly(&mut rng, vars, PolyShape::default());
        rule_failures += axioms::generator_rule_case(m, &r, n, &x, &s).is_err() as usize;
    }
    let mut iteration_failures = 0;
    for _ in 0..50 {
        let vars = rng.gen_range(0..=2);
        let a = sample::witt_vector(&mut rng, &s, vars, PolyShape::default());
        for order in [[2u64, 3], [3, 2]] {
            let from_ghost = iterated_split(a.ghost(), &order).unwrap();
            let from_witt = iterated_split_witt(&a, &order).unwrap();
            let ok = from_ghost.len() == 4
                && from_ghost == from_witt
                && from_ghost.iter().all(|(n, leaf)| leaf == a.ghost().at(*n));
            iteration_failures += !ok as usize;
        }
    }
    let mu_ok = s.elems().iter().all(|&n| {
        let mu = mu_element(n, &s, 0).unwrap();
        let ok = mu.ghost().iter().all(|(k, g)| *g == IntPoly::constant(0, BigInt::from(if k == n { 6 } else { 0 })));
        ok
    });
    let ok = split_failures == 0 && rule_failures == 0 && iteration_failures == 0 && mu_ok;
    outcome(
        ok,
        format!(
            "split/merge {split_failures}/200 failures, product rule {rule_failures}/100, iteration {iteration_failures}/100, mu ghosts: {mu_ok}"
        ),
    )
}

/// Every vector of `(ℤ/N)^len`.
fn all_vectors(modulus: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v| (0..modulus).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn exactness_completeness() -> Outcome {
    let mut disagreements = Vec::new();
    let mut checked = 0;
    for (p, m) in [(2u64, 1u32), (3, 1), (2, 2)] {
        let n = p.pow(m);
        // d(Σ g_i t^i) = Σ i·g_i t^{i−1} dt, for every g of degree ≤ 5
        let reachable: HashSet<Vec<u64>> = all_vectors(n, 6)
            .into_iter()
            .map(|g| (1..6).map(|i| (i as u64 * g[i]) % n).collect::<Vec<u64>>())
            .filter(|dg| dg[4] == 0)
            .map(|dg| dg[..4].to_vec())
            .collect();
        for f in all_vectors(n, 4) {
            let poly = IntPoly::from_terms(1, f.iter().enumerate().map(|(i, &c)| (BigInt::from(c), vec![i as u32])).collect::<Vec<_>>())
                .unwrap();
            let omega = one_form(poly);
            let solved = exactness_mod(&omega, p, m).unwrap();
            let sound = solved.as_ref().is_none_or(|g| verify_witness(&omega, g, n));
            if solved.is_some() != reachable.contains(&f) || !sound {
                disagreements.push((n, f));
            }
            checked += 1;
        }
    }
    let first = disagreements.first().map_or(String::new(), |c| format!(", e.g. {c:?}"));
    outcome(disagreements.is_empty(), format!("{checked} forms mod 2, 3, 4, {} disagreements{first}", disagreements.len()))
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 8] = [
        ("1 Dwork oracle equivalence", dwork_oracle_equivalence, Some(Duration::from_secs(5))),
        ("2 Witt-complex axiom suite", witt_complex_axioms, Some(Duration::from_secs(30))),
        ("3 divisibility identity for dF_pV_k[r]", divisibility_identity, None),
        ("4 constructive p-typical round-trip", dwork_de_rham_roundtrip, Some(Duration::from_secs(60))),
        ("5 multi-prime necessity", multi_prime_necessity, None),
        ("6 torsionless functionals", torsionless_functionals, None),
        ("7 blow-up suite", blowup_suite, None),
        ("8 exactness solver completeness", exactness_completeness, Some(Duration::from_secs(120))),
    ];
    let mut all = true;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let ok = out.ok && in_time;
        all &= ok;
        let bound = limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
        let line = format!("{} criterion {name}: {} [{:.2?}{bound}]\n", if ok { "PASS" } else { "FAIL" }, out.detail, elapsed);
        std::io::stderr().write_all(line.as_bytes()).unwrap();
    }
    assert!(all, "some acceptance criteria failed");
}
