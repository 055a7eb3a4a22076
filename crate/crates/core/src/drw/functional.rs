//! The dual functionals witnessing that `(Ω^q)^S` is torsionless over the
//! ghost-side Witt ring: for `m ∈ S` and an index tuple `J`,
//! `φ_{m,J}(ω) = σ^{q+1}·(δ_{k=m} f_{m,J})_{k∈S}` with `σ = lcm(S)` and
//! `f_{m,J}` the `dx_J`-coefficient of `ω_m`.

use num_bigint::BigInt;

use super::form::DrwForm;
use crate::error::{Error, Result};
use crate::ring::{mobius, IntPoly};
use crate::witt::{verschiebung_teichmuller, GhostTuple, WittVector};

fn coefficient(omega: &DrwForm, m: u64, idx: &[usize]) -> Result<IntPoly> {
    omega.set().require(m)?;
    if idx.len() != omega.degree() || idx.windows(2).any(|w| w[0] >= w[1]) || idx.iter().any(|&j| j >= omega.vars()) {
        return Err(Error::InvalidIndexTuple(idx.to_vec()));
    }
    Ok(omega.at(m).coeff(idx))
}

fn scale_factor(omega: &DrwForm) -> BigInt {
    BigInt::from(omega.set().lcm()).pow(omega.degree() as u32 + 1)
}

/// The projection form, converted to Witt coordinates (always integral).
pub fn dual_functional(omega: &DrwForm, m: u64, idx: &[usize]) -> Result<WittVector> {
    let f = coefficient(omega, m, idx)?.scale(&scale_factor(omega));
    let vars = omega.vars();
    let g = GhostTuple::from_fn(omega.set().clone(), vars, |k| if k == m { f.clone() } else { IntPoly::zero(vars) });
    WittVector::from_ghost(g)
}

/// The same functional as `Σ_{k∈S, m|k} μ(k/m)·(σ^{q+1}/k)·V_k[f^{k/m}]`,
/// computed with Witt vector operations.
pub fn dual_functional_mobius(omega: &DrwForm, m: u64, idx: &[usize]) -> Result<WittVector> {
    let f = coefficient(omega, m, idx)?;
    let big = scale_factor(omega);
    let set = omega.set();
    let mut acc = WittVector::zero(set.clone(), omega.vars());
    for &k in set.elems().iter().filter(|&&k| k % m == 0) {
        let mu = mobius(k / m);
        if mu == 0 {
            continue;
        }
        let coeff = &big / BigInt::from(k) * BigInt::from(mu);
        let term = verschiebung_teichmuller(k, &f.pow(k / m), set)?.scale(&coeff);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// All functionals `φ_{m,J}` for `m ∈ S` and `J` among the stored index
/// tuples of `ω_m`, paired with their labels.
pub fn all_functionals(omega: &DrwForm) -> Result<Vec<((u64, Vec<usize>), WittVector)>> {
    let mut out = Vec::new();
    for &m in omega.set().elems() {
        for (idx, _) in omega.at(m).comps() {
            out.push(((m, idx.clone()), dual_functional(omega, m, idx)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::DiffForm;
    use crate::ring::TruncationSet;

    #[test]
    fn functional_examples() {
        let s = TruncationSet::p_typical(2, 1);
        let t = IntPoly::var(1, 0);
        let f1 = &t + &IntPoly::constant(1, 3);
        let f2 = t.pow(2);
        let omega = DrwForm::from_components(
            1,
            1,
            s.clone(),
            vec![DiffForm::term(f1.clone(), vec![0]).unwrap(), DiffForm::term(f2.clone(), vec![0]).unwrap()],
        )
        .unwrap();
        let phi1 = dual_functional(&omega, 1, &[0]).unwrap();
        assert_eq!(phi1.ghost().comps(), &[f1.scale_i64(4), IntPoly::zero(1)]);
        assert_eq!(phi1.witt(), &[f1.scale_i64(4), f1.pow(2).scale_i64(-8)]);
        assert_eq!(dual_functional_mobius(&omega, 1, &[0]).unwrap(), phi1);
        let phi2 = dual_functional(&omega, 2, &[0]).unwrap();
        assert_eq!(phi2.ghost().comps(), &[IntPoly::zero(1), f2.scale_i64(4)]);
        assert_eq!(dual_functional_mobius(&omega, 2, &[0]).unwrap(), phi2);
        let zero = DrwForm::zero(1, 1, s);
        assert!(dual_functional(&zero, 2, &[0]).unwrap().is_zero());
        assert!(all_functionals(&zero).unwrap().is_empty());
        assert!(dual_functional(&zero, 2, &[1]).is_err());
        assert!(dual_functional(&zero, 3, &[0]).is_err());
    }
}
