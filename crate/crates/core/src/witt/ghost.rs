use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{ord_p, IntPoly, TruncationSet};

/// An element of R^S: one polynomial per element of S, in ascending order
/// of S. Carries no guarantee of lying in the image of the ghost map.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GhostTuple {
    set: TruncationSet,
    vars: usize,
    comps: Vec<IntPoly>,
}

impl GhostTuple {
    pub fn new(set: TruncationSet, vars: usize, comps: Vec<IntPoly>) -> Result<Self> {
        if comps.len() != set.len() {
            return Err(Error::LengthMismatch { expected: set.len(), got: comps.len() });
        }
        if let Some(bad) = comps.iter().find(|c| c.vars() != vars) {
            return Err(Error::VarMismatch(vars, bad.vars()));
        }
        Ok(GhostTuple { set, vars, comps })
    }

    pub fn zero(set: TruncationSet, vars: usize) -> Self {
        let comps = vec![IntPoly::zero(vars); set.len()];
        GhostTuple { set, vars, comps }
    }

    /// `(f(n))_{n∈S}`.
    pub fn from_fn(set: TruncationSet, vars: usize, f: impl Fn(u64) -> IntPoly) -> Self {
        let comps = set.elems().iter().map(|&n| f(n)).collect();
        GhostTuple { set, vars, comps }
    }

    pub fn set(&self) -> &TruncationSet {
        &self.set
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn comps(&self) -> &[IntPoly] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<IntPoly> {
        self.comps
    }

    /// Component at `n ∈ S`.
    pub fn at(&self, n: u64) -> &IntPoly {
        let i = self.set.index_of(n).unwrap_or_else(|| panic!("{n} not in {:?}", self.set));
        &self.comps[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &IntPoly)> + '_ {
        self.set.elems().iter().copied().zip(&self.comps)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(IntPoly::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> GhostTuple {
        self.map(|f| f.scale(c))
    }

    pub fn map(&self, f: impl Fn(&IntPoly) -> IntPoly) -> GhostTuple {
        GhostTuple { set: self.set.clone(), vars: self.vars, comps: self.comps.iter().map(f).collect() }
    }

    fn zip_with(&self, other: &GhostTuple, f: impl Fn(&IntPoly, &IntPoly) -> IntPoly) -> GhostTuple {
        assert_eq!(self.set, other.set, "ghost tuples over different truncation sets");
        assert_eq!(self.vars, other.vars, "ghost tuples over different variable counts");
        GhostTuple {
            set: self.set.clone(),
            vars: self.vars,
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn check_same_shape(&self, other: &GhostTuple) -> Result<()> {
        if self.set != other.set {
            return Err(Error::SetMismatch {
                left: self.set.elems().to_vec(),
                right: other.set.elems().to_vec(),
            });
        }
        if self.vars != other.vars {
            return Err(Error::VarMismatch(self.vars, other.vars));
        }
        Ok(())
    }

    /// Components indexed by a truncation subset.
    pub fn restrict(&self, sub: &TruncationSet) -> Result<GhostTuple> {
        if !sub.is_subset_of(&self.set) {
            return Err(Error::NotSubset { subset: sub.elems().to_vec(), set: self.set.elems().to_vec() });
        }
        Ok(GhostTuple::from_fn(sub.clone(), self.vars, |k| self.at(k).clone()))
    }

    /// The ghost-side Frobenius: `(g_{kn})_{k∈S/n}`.
    pub fn frobenius(&self, n: u64) -> Result<GhostTuple> {
        self.set.require(n)?;
        Ok(GhostTuple::from_fn(self.set.quotient(n), self.vars, |k| self.at(k * n).clone()))
    }

    /// The ghost-side Verschiebung into `target`: component `k` is
    /// `n·g_{k/n}` if `n | k` and zero otherwise.
    pub fn verschiebung(&self, n: u64, target: &TruncationSet) -> Result<GhostTuple> {
        check_quotient(target, n, &self.set)?;
        let nb = BigInt::from(n);
        Ok(GhostTuple::from_fn(target.clone(), self.vars, |k| {
            if k % n == 0 {
                self.at(k / n).scale(&nb)
            } else {
                IntPoly::zero(self.vars)
            }
        }))
    }
}

/// Checks `n ∈ target` and `source = target/n`.
pub(crate) fn check_quotient(target: &TruncationSet, n: u64, source: &TruncationSet) -> Result<()> {
    target.require(n)?;
    let expected = target.quotient(n);
    if &expected != source {
        return Err(Error::SetMismatch {
            left: expected.elems().to_vec(),
            right: source.elems().to_vec(),
        });
    }
    Ok(())
}

impl Add<&GhostTuple> for &GhostTuple {
    type Output = GhostTuple;
    fn add(self, rhs: &GhostTuple) -> GhostTuple {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&GhostTuple> for &GhostTuple {
    type Output = GhostTuple;
    fn sub(self, rhs: &GhostTuple) -> GhostTuple {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&GhostTuple> for &GhostTuple {
    type Output = GhostTuple;
    fn mul(self, rhs: &GhostTuple) -> GhostTuple {
        self.zip_with(rhs, |a, b| a * b)
    }
}

impl Neg for &GhostTuple {
    type Output = GhostTuple;
    fn neg(self) -> GhostTuple {
        self.map(|f| -f)
    }
}

/// Dwork's criterion with the standard Frobenius lifts: for every prime
/// `p ∈ S` and every `n ∈ S` divisible by `p`,
/// `φ_p(g_{n/p}) − g_n ≡ 0 (mod p^{ord_p(n)})`.
pub fn dwork_check(g: &GhostTuple) -> bool {
    dwork_failure(g).is_none()
}

/// First `(p, n)` at which the Dwork congruence fails.
pub fn dwork_failure(g: &GhostTuple) -> Option<(u64, u64)> {
    for p in g.set().primes() {
        for &n in g.set().elems() {
            if n % p != 0 {
                continue;
            }
            let diff = g.at(n / p).frobenius_lift(p) - g.at(n);
            let modulus = BigInt::from(p).pow(ord_p(n, p));
            if !diff.is_divisible_by(&modulus) {
                return Some((p, n));
            }
        }
    }
    None
}

/// `V_n⟨r⟩ = gh(V_n[r])`: component `k` is `n·r^{k/n}` when `n | k`.
pub fn generator_ghost(n: u64, r: &IntPoly, set: &TruncationSet) -> Result<GhostTuple> {
    set.require(n)?;
    let nb = BigInt::from(n);
    Ok(GhostTuple::from_fn(set.clone(), r.vars(), |k| {
        if k % n == 0 {
            r.pow(k / n).scale(&nb)
        } else {
            IntPoly::zero(r.vars())
        }
    }))
}

impl std::fmt::Display for GhostTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let comps: Vec<String> = self.iter().map(|(n, g)| format!("{n}: {g}")).collect();
        write!(f, "({})", comps.join(", "))
    }
}
