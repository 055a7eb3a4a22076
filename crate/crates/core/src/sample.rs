//! Seeded random inputs for property tests, the `axioms` verb and the
//! acceptance suite. Every generator is a pure function of the RNG state.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::drw::{DrwForm, Factor, GenExpr, GenTerm};
use crate::forms::DiffForm;
use crate::ring::{IntPoly, TruncationSet};
use crate::witt::{GhostTuple, WittVector};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Size limits for random polynomials.
#[derive(Clone, Copy, Debug)]
pub struct PolyShape {
    pub max_terms: usize,
    pub max_degree: u32,
    pub max_coeff: i64,
}

impl Default for PolyShape {
    fn default() -> Self {
        PolyShape { max_terms: 3, max_degree: 3, max_coeff: 9 }
    }
}

impl PolyShape {
    pub fn small() -> Self {
        PolyShape { max_terms: 2, max_degree: 2, max_coeff: 3 }
    }
}

fn nonzero_coeff(rng: &mut impl Rng, bound: i64) -> i64 {
    let c = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -c
    } else {
        c
    }
}

fn exponents(rng: &mut impl Rng, vars: usize, max_degree: u32) -> Vec<u32> {
    let total = rng.gen_range(0..=max_degree);
    let mut e = vec![0u32; vars];
    if vars > 0 {
        for _ in 0..total {
            e[rng.gen_range(0..vars)] += 1;
        }
    }
    e
}

/// Between one and `max_terms` random terms (terms may merge or cancel).
pub fn poly(rng: &mut impl Rng, vars: usize, shape: PolyShape) -> IntPoly {
    let n = rng.gen_range(1..=shape.max_terms);
    let terms = (0..n).map(|_| (BigInt::from(nonzero_coeff(rng, shape.max_coeff)), exponents(rng, vars, shape.max_degree)));
    IntPoly::from_terms(vars, terms.collect::<Vec<_>>()).expect("exponent vectors have the right length")
}

pub fn nonzero_poly(rng: &mut impl Rng, vars: usize, shape: PolyShape) -> IntPoly {
    loop {
        let f = poly(rng, vars, shape);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A polynomial of positive degree (any polynomial when `vars = 0`).
pub fn nonconstant_poly(rng: &mut impl Rng, vars: usize, shape: PolyShape) -> IntPoly {
    loop {
        let f = poly(rng, vars, shape);
        if vars == 0 || f.total_degree().unwrap_or(0) > 0 {
            return f;
        }
    }
}

pub fn witt_vector(rng: &mut impl Rng, set: &TruncationSet, vars: usize, shape: PolyShape) -> WittVector {
    let coords = set.elems().iter().map(|_| poly(rng, vars, shape)).collect();
    WittVector::from_witt(set.clone(), vars, coords).expect("coordinates match the set")
}

pub fn ghost_tuple(rng: &mut impl Rng, set: &TruncationSet, vars: usize, shape: PolyShape) -> GhostTuple {
    let comps = set.elems().iter().map(|_| poly(rng, vars, shape)).collect();
    GhostTuple::new(set.clone(), vars, comps).expect("components match the set")
}

/// A random q-form: each index tuple is present with probability 1/2, and
/// at least one is present when `q ≤ vars`.
pub fn form(rng: &mut impl Rng, q: usize, vars: usize, shape: PolyShape) -> DiffForm {
    let tuples = index_tuples(vars, q);
    if tuples.is_empty() {
        return DiffForm::zero(q, vars);
    }
    let forced = rng.gen_range(0..tuples.len());
    let mut comps = Vec::new();
    for (i, idx) in tuples.into_iter().enumerate() {
        if i == forced || rng.gen_bool(0.5) {
            comps.push((idx, poly(rng, vars, shape)));
        }
    }
    DiffForm::new(q, vars, comps).expect("valid index tuples")
}

/// All strictly increasing `q`-tuples of `0..vars`.
pub fn index_tuples(vars: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, vars: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..vars {
            cur.push(i);
            go(i + 1, vars, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, vars, q, &mut Vec::new(), &mut out);
    out
}

/// A raw tuple of random q-forms over `set`.
pub fn raw_tuple(rng: &mut impl Rng, set: &TruncationSet, q: usize, vars: usize, shape: PolyShape) -> DrwForm {
    let comps = set.elems().iter().map(|_| form(rng, q, vars, shape)).collect();
    DrwForm::from_components(q, vars, set.clone(), comps).expect("components match")
}

/// A product term `c·V_{n₀}⟨r₀⟩𝕕V_{n₁}⟨r₁⟩⋯𝕕V_{n_q}⟨r_q⟩`; the leading
/// plain factor is omitted with probability 1/4.
pub fn product_term(rng: &mut impl Rng, set: &TruncationSet, q: usize, vars: usize, shape: PolyShape) -> GenTerm {
    let mut factors = Vec::with_capacity(q + 1);
    if rng.gen_range(0..4) > 0 {
        factors.push(Factor::v(*set.elems().choose(rng).expect("nonempty set"), poly(rng, vars, shape)));
    }
    for _ in 0..q {
        factors.push(Factor::dv(*set.elems().choose(rng).expect("nonempty set"), nonconstant_poly(rng, vars, shape)));
    }
    GenTerm::product(nonzero_coeff(rng, 3), factors)
}

/// One or two product terms of degree `q`.
pub fn genexpr(rng: &mut impl Rng, set: &TruncationSet, q: usize, vars: usize, shape: PolyShape) -> GenExpr {
    let n = rng.gen_range(1..=2);
    let terms = (0..n).map(|_| product_term(rng, set, q, vars, shape)).collect();
    GenExpr::new(q, vars, terms).expect("terms have degree q")
}

/// A certified element of `X_S^q`, evaluated from a random expression.
pub fn certified(rng: &mut impl Rng, set: &TruncationSet, q: usize, vars: usize, shape: PolyShape) -> DrwForm {
    genexpr(rng, set, q, vars, shape).evaluate(set).expect("generator expressions evaluate")
}
