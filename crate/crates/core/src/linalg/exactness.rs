//! Deciding `ω ∈ NΩ^q + dΩ^{q−1}` for polynomial forms.
//!
//! The differential preserves the multi-weight `a + 1_J` of a monomial term
//! `x^a dx_J`, so the linear system splits into one small block per weight
//! occurring in `ω`. For weight `w` the unknowns are the coefficients of
//! `x^{w−1_{J'}} dx_{J'}` with `|J'| = q−1`, `J' ⊆ supp(w)`, all of total
//! degree `|w| − q + 1 ≤ D + 1`. Parts of a solution at other weights are
//! closed and can be dropped, so the blockwise search is complete.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::howell::solve_columns;
use super::ring::{Integers, SolveRing, ZMod};
use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::ring::{is_prime, IntPoly};

type Block = BTreeMap<Vec<usize>, BigInt>;

fn weight_blocks(omega: &DiffForm) -> BTreeMap<Vec<u32>, Block> {
    let mut blocks: BTreeMap<Vec<u32>, Block> = BTreeMap::new();
    for (idx, f) in omega.comps() {
        for (mono, c) in f.terms() {
            let mut w = mono.exps().to_vec();
            for &j in idx {
                w[j] += 1;
            }
            blocks.entry(w).or_default().insert(idx.clone(), c.clone());
        }
    }
    blocks
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (pos, &first) in items.iter().enumerate() {
        for mut rest in subsets(&items[pos + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn solve_block<R: SolveRing + Clone>(
    ring: &R,
    vars: usize,
    q: usize,
    w: &[u32],
    target: &Block,
) -> Option<DiffForm> {
    let support: Vec<usize> = (0..w.len()).filter(|&i| w[i] > 0).collect();
    let rows = subsets(&support, q);
    let unknowns = subsets(&support, q - 1);
    let row_of: BTreeMap<&Vec<usize>, usize> = rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let columns: Vec<Vec<R::Elem>> = unknowns
        .iter()
        .map(|jp| {
            let mut col = vec![ring.zero(); rows.len()];
            for &i in support.iter().filter(|i| !jp.contains(i)) {
                // d(x^{a'} dx_{J'}) ∋ a'_i x^{a'−e_i} dx_i∧dx_{J'}
                let before = jp.iter().filter(|&&j| j < i).count();
                let mut j = jp.clone();
                j.insert(before, i);
                let mut entry = BigInt::from(w[i]);
                if before % 2 == 1 {
                    entry = -entry;
                }
                col[row_of[&j]] = ring.from_big(&entry);
            }
            col
        })
        .collect();
    let rhs: Vec<R::Elem> =
        rows.iter().map(|r| target.get(r).map_or_else(|| ring.zero(), |c| ring.from_big(c))).collect();
    let x = solve_columns(ring, columns, &rhs)?;
    let mut g = DiffForm::zero(q - 1, vars);
    for (jp, coeff) in unknowns.into_iter().zip(x) {
        let c = ring.to_big(&coeff);
        if c.is_zero() {
            continue;
        }
        let mut exps = w.to_vec();
        for &j in &jp {
            exps[j] -= 1;
        }
        let term = DiffForm::term(IntPoly::monomial(vars, exps, c), jp).expect("valid index tuple");
        g = &g + &term;
    }
    Some(g)
}

fn solve_all<R: SolveRing + Clone>(ring: &R, omega: &DiffForm, reduce: impl Fn(&BigInt) -> BigInt) -> Option<DiffForm> {
    let q = omega.degree();
    let mut g = DiffForm::zero(q - 1, omega.vars());
    for (w, mut block) in weight_blocks(omega) {
        block.values_mut().for_each(|c| *c = reduce(c));
        block.retain(|_, c| !c.is_zero());
        if block.is_empty() {
            continue;
        }
        g = &g + &solve_block(ring, omega.vars(), q, &w, &block)?;
    }
    Some(g)
}

fn modulus_of(p: u64, m: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    p.checked_pow(m)
        .filter(|&n| n <= 1 << 62)
        .ok_or_else(|| Error::BadModulus(format!("{p}^{m}")))
}

/// Some `g` with `dg ≡ ω (mod N)`, coefficients reduced to `[0, N)`, or
/// `None` when `ω ∉ NΩ^q + dΩ^{q−1}`.
pub fn exactness_modulus(omega: &DiffForm, modulus: u64) -> Result<Option<DiffForm>> {
    if omega.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    if modulus == 0 || modulus > 1 << 62 {
        return Err(Error::BadModulus(modulus.to_string()));
    }
    let ring = ZMod::new(modulus);
    let n = BigInt::from(modulus);
    Ok(solve_all(&ring, omega, |c| ((c % &n) + &n) % &n))
}

/// [`exactness_modulus`] for `N = p^m`.
pub fn exactness_mod(omega: &DiffForm, p: u64, m: u32) -> Result<Option<DiffForm>> {
    exactness_modulus(omega, modulus_of(p, m)?)
}

/// Some `g` with `dg = ω` exactly over ℤ.
pub fn exact_antiderivative(omega: &DiffForm) -> Result<Option<DiffForm>> {
    if omega.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    Ok(solve_all(&Integers, omega, Clone::clone))
}

/// `ω ∈ p^k Ω^q + dΩ^{q−1}`; in degree 0 this is divisibility by `p^k`.
pub fn member_mod(omega: &DiffForm, p: u64, k: u32) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    if omega.degree() == 0 {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        return Ok(omega.is_divisible_by(&BigInt::from(p).pow(k)));
    }
    Ok(exactness_mod(omega, p, k)?.is_some())
}

/// `ω − dg` reduces to zero modulo `N`.
pub fn verify_witness(omega: &DiffForm, g: &DiffForm, modulus: u64) -> bool {
    let n = BigInt::from(modulus);
    (omega - &g.differential()).is_divisible_by(&n) || n.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> IntPoly {
        IntPoly::var(1, 0)
    }

    fn form1(f: IntPoly) -> DiffForm {
        DiffForm::term(f, vec![0]).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(exactness_mod(&form1(t()), 2, 1).unwrap(), None);
        let g = exactness_mod(&form1(t().scale_i64(2)), 2, 2).unwrap().unwrap();
        assert!(verify_witness(&form1(t().scale_i64(2)), &g, 4));
        let g = exact_antiderivative(&form1(t().scale_i64(2))).unwrap().unwrap();
        assert_eq!(g.as_poly(), t().pow(2));

        let y = IntPoly::var(2, 1);
        let omega = DiffForm::term(y.clone(), vec![0, 1]).unwrap();
        let g = exact_antiderivative(&omega).unwrap().unwrap();
        assert_eq!(g.differential(), omega);
        for n in [2, 3, 4, 9, 1000] {
            let g = exactness_modulus(&omega, n).unwrap().unwrap();
            assert!(verify_witness(&omega, &g, n));
        }
    }

    #[test]
    fn mod_three_witness_for_t_dt() {
        let g = exactness_mod(&form1(t()), 3, 1).unwrap().unwrap();
        assert_eq!(g.as_poly(), t().pow(2).scale_i64(2));
    }

    #[test]
    fn degree_zero_and_bad_modulus() {
        assert_eq!(exactness_mod(&DiffForm::from_poly(t()), 2, 1), Err(Error::DegreeZero));
        assert!(exactness_mod(&form1(t()), 4, 1).is_err());
        assert!(exactness_mod(&form1(t()), 2, 80).is_err());
        assert!(member_mod(&DiffForm::from_poly(t().scale_i64(4)), 2, 2).unwrap());
        assert!(!member_mod(&DiffForm::from_poly(t().scale_i64(2)), 2, 2).unwrap());
    }

    #[test]
    fn two_forms() {
        // x dy∧dz alone is not closed; adding y dx∧dz gives d(xy dz).
        // xy dx∧dy sits in the weight (2,2) block, whose matrix is 2·(…).
        let x = IntPoly::var(3, 0);
        let y = IntPoly::var(3, 1);
        let a = DiffForm::term(x.clone(), vec![1, 2]).unwrap();
        assert!(exact_antiderivative(&a).unwrap().is_none());
        let a = &a + &DiffForm::term(y.clone(), vec![0, 2]).unwrap();
        assert_eq!(exact_antiderivative(&a).unwrap().unwrap().differential(), a);
        let b = DiffForm::term(&x * &y, vec![0, 1]).unwrap();
        assert!(exactness_mod(&b, 2, 1).unwrap().is_none());
        assert!(exactness_mod(&b, 3, 2).unwrap().is_some());
    }
}
