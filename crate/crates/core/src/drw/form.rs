use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::ring::{IntPoly, TruncationSet};
use crate::witt::check_quotient;

/// A degree-q element of `X_S^q(ℤ[x₁..x_t]) ⊂ (Ω^q)^S`, stored in the
/// 𝕕-convention: component `k` of `𝕕ω` is `(1/k)·d(ω_k)`.
///
/// `certified` records provenance: set for values built from generators by
/// the module operations (or produced by a successful lift), cleared for raw
/// tuples read from outside. Equality compares components only.
#[derive(Clone)]
pub struct DrwForm {
    q: usize,
    vars: usize,
    set: TruncationSet,
    comps: Vec<DiffForm>,
    certified: bool,
}

/// Direction for [`convention_rescale`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    /// Multiply component `k` by `k^q`.
    ToD,
    /// Divide component `k` by `k^q` exactly.
    ToDd,
}

fn k_pow_q(k: u64, q: usize) -> BigInt {
    BigInt::from(k).pow(q as u32)
}

/// Converts an `S`-indexed tuple of q-forms between the 𝕕- and
/// d-conventions.
pub fn convention_rescale(set: &TruncationSet, comps: &[DiffForm], direction: Convention) -> Result<Vec<DiffForm>> {
    if comps.len() != set.len() {
        return Err(Error::LengthMismatch { expected: set.len(), got: comps.len() });
    }
    set.elems()
        .iter()
        .zip(comps)
        .map(|(&k, w)| {
            let f = k_pow_q(k, w.degree());
            match direction {
                Convention::ToD => Ok(w.scale(&f)),
                Convention::ToDd => w.exact_div(&f),
            }
        })
        .collect()
}

impl DrwForm {
    /// An uncertified tuple of q-forms indexed by `set`.
    pub fn from_components(q: usize, vars: usize, set: TruncationSet, comps: Vec<DiffForm>) -> Result<Self> {
        if comps.len() != set.len() {
            return Err(Error::LengthMismatch { expected: set.len(), got: comps.len() });
        }
        for w in &comps {
            if w.degree() != q {
                return Err(Error::DegreeMismatch(q, w.degree()));
            }
            if w.vars() != vars {
                return Err(Error::VarMismatch(vars, w.vars()));
            }
        }
        Ok(DrwForm { q, vars, set, comps, certified: false })
    }

    /// Reads a d-convention tuple (plain `d` applied componentwise) into the 𝕕-convention.
    pub fn from_d_convention(q: usize, vars: usize, set: TruncationSet, comps: Vec<DiffForm>) -> Result<Self> {
        let comps = convention_rescale(&set, &comps, Convention::ToDd)?;
        Self::from_components(q, vars, set, comps)
    }

    pub fn zero(q: usize, vars: usize, set: TruncationSet) -> Self {
        let comps = vec![DiffForm::zero(q, vars); set.len()];
        DrwForm { q, vars, set, comps, certified: true }
    }

    pub fn one(vars: usize, set: TruncationSet) -> Self {
        let comps = vec![DiffForm::from_poly(IntPoly::one(vars)); set.len()];
        DrwForm { q: 0, vars, set, comps, certified: true }
    }

    /// `V_n⟨r⟩`: component `k` is `n·r^{k/n}` when `n | k`, else zero.
    pub fn generator(n: u64, r: &IntPoly, set: &TruncationSet) -> Result<Self> {
        set.require(n)?;
        let vars = r.vars();
        let nb = BigInt::from(n);
        let comps = set
            .elems()
            .iter()
            .map(|&k| {
                if k % n == 0 {
                    DiffForm::from_poly(r.pow(k / n).scale(&nb))
                } else {
                    DiffForm::zero(0, vars)
                }
            })
            .collect();
        Ok(DrwForm { q: 0, vars, set: set.clone(), comps, certified: true })
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn set(&self) -> &TruncationSet {
        &self.set
    }

    pub fn comps(&self) -> &[DiffForm] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<DiffForm> {
        self.comps
    }

    pub fn at(&self, k: u64) -> &DiffForm {
        &self.comps[self.set.index_of(k).unwrap_or_else(|| panic!("{k} not in {:?}", self.set))]
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(DiffForm::is_zero)
    }

    /// Drops the certification bit.
    pub fn uncertified(mut self) -> Self {
        self.certified = false;
        self
    }

    /// The d-convention components `k^q·ω_k`.
    pub fn to_d_convention(&self) -> Vec<DiffForm> {
        convention_rescale(&self.set, &self.comps, Convention::ToD).expect("lengths agree")
    }

    fn with_comps(&self, q: usize, set: TruncationSet, comps: Vec<DiffForm>, certified: bool) -> Self {
        DrwForm { q, vars: self.vars, set, comps, certified }
    }

    fn check_shape(&self, other: &DrwForm) -> Result<()> {
        if self.set != other.set {
            return Err(Error::SetMismatch { left: self.set.elems().to_vec(), right: other.set.elems().to_vec() });
        }
        if self.vars != other.vars {
            return Err(Error::VarMismatch(self.vars, other.vars));
        }
        Ok(())
    }

    pub fn add(&self, other: &DrwForm) -> Result<DrwForm> {
        self.check_shape(other)?;
        if self.q != other.q {
            return Err(Error::DegreeMismatch(self.q, other.q));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        Ok(self.with_comps(self.q, self.set.clone(), comps, self.certified && other.certified))
    }

    pub fn sub(&self, other: &DrwForm) -> Result<DrwForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DrwForm {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> DrwForm {
        let comps = self.comps.iter().map(|w| w.scale(c)).collect();
        self.with_comps(self.q, self.set.clone(), comps, self.certified)
    }

    /// `𝕕`: component `k` becomes `d(ω_k)/k`. Fails with
    /// [`Error::NotInComplex`] at the first `k` where the division is not
    /// exact, which certifies that the tuple is not in `X_S^q`.
    pub fn dd(&self) -> Result<DrwForm> {
        let comps = self
            .set
            .elems()
            .iter()
            .zip(&self.comps)
            .map(|(&k, w)| w.differential().exact_div(&BigInt::from(k)).map_err(|_| Error::NotInComplex { index: k }))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_comps(self.q + 1, self.set.clone(), comps, self.certified))
    }

    /// Componentwise wedge product.
    pub fn mul(&self, other: &DrwForm) -> Result<DrwForm> {
        self.check_shape(other)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.wedge(b)).collect();
        Ok(self.with_comps(self.q + other.q, self.set.clone(), comps, self.certified && other.certified))
    }

    /// `F_n : X_S → X_{S/n}`, the index shift `(F_nω)_k = ω_{kn}`.
    pub fn frobenius(&self, n: u64) -> Result<DrwForm> {
        self.set.require(n)?;
        let sub = self.set.quotient(n);
        let comps = sub.elems().iter().map(|&k| self.at(k * n).clone()).collect();
        Ok(self.with_comps(self.q, sub, comps, self.certified))
    }

    /// `V_n : X_{S/n} → X_S`; `self` must live over `target/n`.
    pub fn verschiebung(&self, n: u64, target: &TruncationSet) -> Result<DrwForm> {
        check_quotient(target, n, &self.set)?;
        let nb = BigInt::from(n);
        let comps = target
            .elems()
            .iter()
            .map(|&k| if k % n == 0 { self.at(k / n).scale(&nb) } else { DiffForm::zero(self.q, self.vars) })
            .collect();
        Ok(self.with_comps(self.q, target.clone(), comps, self.certified))
    }

    pub fn restrict(&self, sub: &TruncationSet) -> Result<DrwForm> {
        if !sub.is_subset_of(&self.set) {
            return Err(Error::NotSubset { subset: sub.elems().to_vec(), set: self.set.elems().to_vec() });
        }
        let comps = sub.elems().iter().map(|&k| self.at(k).clone()).collect();
        Ok(self.with_comps(self.q, sub.clone(), comps, self.certified))
    }
}

impl PartialEq for DrwForm {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.vars == other.vars && self.set == other.set && self.comps == other.comps
    }
}

impl Eq for DrwForm {}

impl fmt::Debug for DrwForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DrwForm[q={}, S={}{}](", self.q, self.set, if self.certified { ", certified" } else { "" })?;
        for (i, w) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}
