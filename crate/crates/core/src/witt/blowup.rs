//! The one-step blow-up of `W_S` along `I_p`, realized on the ghost side by
//! the decomposition `S = S(p) ⊔ p·(S/p)`, and its iteration down to the
//! ghost map.

use super::ghost::{dwork_check, GhostTuple};
use super::vector::WittVector;
use crate::error::{Error, Result};
use crate::ring::{is_prime, IntPoly, TruncationSet};

fn require_prime_in(set: &TruncationSet, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    set.require(p).map(|_| ())
}

/// `res^S_{S(p)} × F_p` on ghost tuples.
pub fn blowup_split(g: &GhostTuple, p: u64) -> Result<(GhostTuple, GhostTuple)> {
    require_prime_in(g.set(), p)?;
    let left = g.restrict(&g.set().coprime_part(p))?;
    let right = g.frobenius(p)?;
    Ok((left, right))
}

/// Inverse of [`blowup_split`]: interleaves `u` (over `S(p)`) and `v`
/// (over `S/p`) back into a tuple over `S = S(p) ⊔ p·(S/p)`.
pub fn blowup_merge(u: &GhostTuple, v: &GhostTuple, p: u64) -> Result<GhostTuple> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if u.vars() != v.vars() {
        return Err(Error::VarMismatch(u.vars(), v.vars()));
    }
    let set = TruncationSet::new(
        u.set().elems().iter().copied().chain(v.set().elems().iter().map(|k| k * p)),
    )?;
    if u.set().elems().iter().any(|k| k % p == 0) {
        return Err(Error::Invalid(format!("left factor {:?} contains multiples of {p}", u.set())));
    }
    require_prime_in(&set, p)?;
    if &set.coprime_part(p) != u.set() || &set.quotient(p) != v.set() {
        return Err(Error::Invalid(format!(
            "{:?} and {:?} do not form a decomposition S(p) ⊔ p·S/p",
            u.set(),
            v.set()
        )));
    }
    Ok(GhostTuple::from_fn(set, u.vars(), |k| {
        if k % p == 0 {
            v.at(k / p).clone()
        } else {
            u.at(k).clone()
        }
    }))
}

/// Membership in the blown-up ring `X_S(R)[I_p/p]`, which the split
/// identifies with `X_{S(p)}(R) × X_{S/p}(R)`.
pub fn localized_member(g: &GhostTuple, p: u64) -> Result<bool> {
    let (left, right) = blowup_split(g, p)?;
    Ok(dwork_check(&left) && dwork_check(&right))
}

/// Splits repeatedly, always at the first prime of `order` present in the
/// current piece, until every piece lives over `{1}`. Each leaf is tagged
/// with the element `n ∈ S` it came from; there are exactly `|S|` leaves.
pub fn iterated_split(g: &GhostTuple, order: &[u64]) -> Result<Vec<(u64, IntPoly)>> {
    let mut leaves = Vec::with_capacity(g.set().len());
    let mut stack = vec![(g.clone(), 1u64)];
    while let Some((piece, mult)) = stack.pop() {
        if piece.set().elems() == [1] {
            leaves.push((mult, piece.comps()[0].clone()));
            continue;
        }
        let Some(&p) = order.iter().find(|&&p| piece.set().contains(p)) else {
            return Err(Error::Invalid(format!(
                "prime order {order:?} does not cover the primes of {:?}",
                piece.set()
            )));
        };
        let (left, right) = blowup_split(&piece, p)?;
        stack.push((right, mult * p));
        stack.push((left, mult));
    }
    leaves.sort_by_key(|(n, _)| *n);
    Ok(leaves)
}

/// The same iteration on Witt vectors via restriction and Frobenius; each
/// leaf is an element of `W_{{1}}(R) = R`.
pub fn iterated_split_witt(a: &WittVector, order: &[u64]) -> Result<Vec<(u64, IntPoly)>> {
    let mut leaves = Vec::with_capacity(a.set().len());
    let mut stack = vec![(a.clone(), 1u64)];
    while let Some((piece, mult)) = stack.pop() {
        if piece.set().elems() == [1] {
            leaves.push((mult, piece.witt()[0].clone()));
            continue;
        }
        let Some(&p) = order.iter().find(|&&p| piece.set().contains(p)) else {
            return Err(Error::Invalid(format!(
                "prime order {order:?} does not cover the primes of {:?}",
                piece.set()
            )));
        };
        let left = piece.restrict(&piece.set().coprime_part(p))?;
        let right = piece.frobenius(p)?;
        stack.push((right, mult * p));
        stack.push((left, mult));
    }
    leaves.sort_by_key(|(n, _)| *n);
    Ok(leaves)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> TruncationSet {
        TruncationSet::new(xs.iter().copied()).unwrap()
    }

    fn consts(s: &[u64], vals: &[i64]) -> GhostTuple {
        GhostTuple::new(set(s), 1, vals.iter().map(|&v| IntPoly::constant(1, v)).collect()).unwrap()
    }

    #[test]
    fn split_examples() {
        let g = consts(&[1, 2, 3, 6], &[11, 12, 13, 16]);
        let (l, r) = blowup_split(&g, 2).unwrap();
        assert_eq!(l, consts(&[1, 3], &[11, 13]));
        assert_eq!(r, consts(&[1, 3], &[12, 16]));
        assert_eq!(blowup_merge(&l, &r, 2).unwrap(), g);
        let (l, r) = blowup_split(&consts(&[1, 2], &[5, 7]), 2).unwrap();
        assert_eq!((l, r), (consts(&[1], &[5]), consts(&[1], &[7])));
    }

    #[test]
    fn localized_examples() {
        let t = IntPoly::var(1, 0);
        let s = set(&[1, 2]);
        let half_v2 = GhostTuple::new(s.clone(), 1, vec![IntPoly::zero(1), t.clone()]).unwrap();
        assert!(localized_member(&half_v2, 2).unwrap());
        assert!(WittVector::from_ghost(half_v2).is_err());
        let g = GhostTuple::new(s, 1, vec![IntPoly::one(1), &t.scale_i64(2) + &IntPoly::one(1)]).unwrap();
        assert!(localized_member(&g, 2).unwrap());
    }

    #[test]
    fn merge_rejects_inconsistent_parts() {
        let u = consts(&[1, 2], &[1, 2]);
        let v = consts(&[1], &[3]);
        assert!(blowup_merge(&u, &v, 2).is_err());
        assert!(blowup_split(&consts(&[1, 2], &[1, 2]), 3).is_err());
    }

    #[test]
    fn iteration_reaches_ghost_components() {
        let g = consts(&[1, 2, 3, 6], &[1, 2, 3, 4]);
        for order in [[2, 3], [3, 2]] {
            let leaves = iterated_split(&g, &order).unwrap();
            let got: Vec<u64> = leaves.iter().map(|l| l.0).collect();
            assert_eq!(got, vec![1, 2, 3, 6]);
            for (n, v) in leaves {
                assert_eq!(&v, g.at(n));
            }
        }
        assert!(iterated_split(&g, &[2]).is_err());
    }
}
