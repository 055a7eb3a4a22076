#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use witt_drw::forms::DiffForm;
use witt_drw::ring::{IntPoly, TruncationSet};

pub fn poly(vars: usize, max_degree: u32, max_coeff: i64) -> impl Strategy<Value = IntPoly> {
    let term = (-max_coeff..=max_coeff, prop::collection::vec(0..=max_degree, vars));
    prop::collection::vec(term, 0..=3).prop_map(move |terms| {
        let terms: Vec<(BigInt, Vec<u32>)> = terms
            .into_iter()
            .filter(|(_, e)| e.iter().sum::<u32>() <= max_degree)
            .map(|(c, e)| (BigInt::from(c), e))
            .collect();
        IntPoly::from_terms(vars, terms).unwrap()
    })
}

pub fn form(q: usize, vars: usize) -> impl Strategy<Value = DiffForm> {
    let tuples = witt_drw::sample::index_tuples(vars, q);
    let n = tuples.len();
    prop::collection::vec(poly(vars, 2, 9), n).prop_map(move |coeffs| {
        DiffForm::new(q, vars, tuples.iter().cloned().zip(coeffs).collect::<Vec<_>>()).unwrap()
    })
}

pub fn witt_set() -> impl Strategy<Value = TruncationSet> {
    prop::sample::select(vec![1u64, 2, 4, 3, 6]).prop_map(TruncationSet::divisors_of)
}

/// `Σ_{k|n} k·r_k^{n/k}`, written out directly.
pub fn ghost_oracle(set: &TruncationSet, coords: &[IntPoly], n: u64) -> IntPoly {
    let mut acc = IntPoly::zero(coords[0].vars());
    for (i, &k) in set.elems().iter().enumerate() {
        if n.is_multiple_of(k) {
            acc = &acc + &coords[i].pow(n / k).scale(&BigInt::from(k));
        }
    }
    acc
}

/// Recursive exact division: `r_n = (g_n − Σ_{k|n,k<n} k r_k^{n/k}) / n`.
pub fn witt_oracle(set: &TruncationSet, ghost: &[IntPoly]) -> Option<Vec<IntPoly>> {
    let mut coords: Vec<IntPoly> = Vec::new();
    for (i, &n) in set.elems().iter().enumerate() {
        let mut rest = ghost[i].clone();
        for (j, &k) in set.elems()[..i].iter().enumerate() {
            if n % k == 0 {
                rest = &rest - &coords[j].pow(n / k).scale(&BigInt::from(k));
            }
        }
        coords.push(rest.exact_div(&BigInt::from(n)).ok()?);
    }
    Some(coords)
}
