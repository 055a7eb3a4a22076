use num_bigint::BigInt;

use super::ghost::{check_quotient, GhostTuple};
use crate::error::{Error, Result};
use crate::ring::{IntPoly, TruncationSet};

/// An element of `W_S(ℤ[x₁..x_t])`.
///
/// The ghost tuple is the canonical representation; the Witt coordinates
/// are a certificate that the tuple lies in the image of the ghost map.
/// Both are fixed at construction, and `gh_n(witt) = ghost_n` for all n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WittVector {
    ghost: GhostTuple,
    witt: Vec<IntPoly>,
}

/// `gh_n(r) = Σ_{k|n} k·r_k^{n/k}`.
fn ghost_component(set: &TruncationSet, coords: &[IntPoly], vars: usize, n: u64) -> IntPoly {
    let mut acc = IntPoly::zero(vars);
    for k in set.divisors_in(n) {
        let rk = &coords[set.index_of(k).expect("divisor closed")];
        if !rk.is_zero() {
            acc += &rk.pow(n / k).scale(&BigInt::from(k));
        }
    }
    acc
}

impl WittVector {
    /// Builds a Witt vector from its Witt coordinates.
    pub fn from_witt(set: TruncationSet, vars: usize, coords: Vec<IntPoly>) -> Result<Self> {
        // validates lengths and variable counts
        let coords = GhostTuple::new(set.clone(), vars, coords)?.into_comps();
        let ghost = GhostTuple::from_fn(set.clone(), vars, |n| ghost_component(&set, &coords, vars, n));
        Ok(WittVector { ghost, witt: coords })
    }

    /// Inverts the ghost map by exact division, processing `n ∈ S` in
    /// increasing order: `r_n = (g_n − Σ_{k|n, k<n} k·r_k^{n/k}) / n`.
    pub fn from_ghost(g: GhostTuple) -> Result<Self> {
        let set = g.set().clone();
        let mut coords: Vec<IntPoly> = Vec::with_capacity(set.len());
        for (i, &n) in set.elems().iter().enumerate() {
            let mut acc = g.comps()[i].clone();
            for k in set.divisors_in(n).filter(|&k| k < n) {
                let rk = &coords[set.index_of(k).expect("divisor closed")];
                if !rk.is_zero() {
                    acc -= &rk.pow(n / k).scale(&BigInt::from(k));
                }
            }
            match acc.exact_div_u64(n) {
                Ok(r) => coords.push(r),
                Err(_) => return Err(Error::NotIntegral { index: n }),
            }
        }
        Ok(WittVector { ghost: g, witt: coords })
    }

    /// Ghost tuples produced by ring operations on the image are always in
    /// the image again.
    fn from_image(g: GhostTuple) -> Self {
        Self::from_ghost(g).expect("ghost image is closed under ring operations")
    }

    pub fn zero(set: TruncationSet, vars: usize) -> Self {
        WittVector { witt: vec![IntPoly::zero(vars); set.len()], ghost: GhostTuple::zero(set, vars) }
    }

    /// The Teichmüller representative `[r] = (r, 0, 0, …)`.
    pub fn teichmuller(r: &IntPoly, set: TruncationSet) -> Self {
        let vars = r.vars();
        let witt = set
            .elems()
            .iter()
            .map(|&n| if n == 1 { r.clone() } else { IntPoly::zero(vars) })
            .collect();
        let ghost = GhostTuple::from_fn(set, vars, |n| r.pow(n));
        WittVector { ghost, witt }
    }

    /// The unique Witt vector with constant ghost tuple `(z, …, z)`.
    pub fn constant(z: impl Into<BigInt>, set: TruncationSet, vars: usize) -> Self {
        let c = IntPoly::constant(vars, z);
        Self::from_ghost(GhostTuple::from_fn(set, vars, |_| c.clone()))
            .expect("constant ghost tuples satisfy Dwork's congruences")
    }

    pub fn one(set: TruncationSet, vars: usize) -> Self {
        Self::teichmuller(&IntPoly::one(vars), set)
    }

    pub fn ghost(&self) -> &GhostTuple {
        &self.ghost
    }

    pub fn witt(&self) -> &[IntPoly] {
        &self.witt
    }

    pub fn witt_at(&self, n: u64) -> &IntPoly {
        &self.witt[self.set().index_of(n).expect("index in S")]
    }

    pub fn set(&self) -> &TruncationSet {
        self.ghost.set()
    }

    pub fn vars(&self) -> usize {
        self.ghost.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.ghost.is_zero()
    }

    pub fn add(&self, other: &WittVector) -> Result<WittVector> {
        self.ghost.check_same_shape(&other.ghost)?;
        Ok(Self::from_image(&self.ghost + &other.ghost))
    }

    pub fn sub(&self, other: &WittVector) -> Result<WittVector> {
        self.ghost.check_same_shape(&other.ghost)?;
        Ok(Self::from_image(&self.ghost - &other.ghost))
    }

    pub fn mul(&self, other: &WittVector) -> Result<WittVector> {
        self.ghost.check_same_shape(&other.ghost)?;
        Ok(Self::from_image(&self.ghost * &other.ghost))
    }

    pub fn neg(&self) -> WittVector {
        Self::from_image(-&self.ghost)
    }

    /// Multiplication by an integer, i.e. by the image of `z` under ℤ → W_S(R).
    pub fn scale(&self, z: &BigInt) -> WittVector {
        Self::from_image(self.ghost.scale(z))
    }

    /// `V_n : W_{S/n}(R) → W_S(R)`; `self` must live over `target/n`.
    /// Witt coordinates shift, ghost components become `n·gh_{k/n}`.
    pub fn verschiebung(&self, n: u64, target: &TruncationSet) -> Result<WittVector> {
        check_quotient(target, n, self.set())?;
        let vars = self.vars();
        let witt = target
            .elems()
            .iter()
            .map(|&k| if k % n == 0 { self.witt_at(k / n).clone() } else { IntPoly::zero(vars) })
            .collect();
        let ghost = self.ghost.verschiebung(n, target)?;
        Ok(WittVector { ghost, witt })
    }

    /// `F_n : W_S(R) → W_{S/n}(R)`, defined by `gh_k ∘ F_n = gh_{kn}`.
    pub fn frobenius(&self, n: u64) -> Result<WittVector> {
        Ok(Self::from_image(self.ghost.frobenius(n)?))
    }

    /// Restriction to a truncation subset.
    pub fn restrict(&self, sub: &TruncationSet) -> Result<WittVector> {
        let ghost = self.ghost.restrict(sub)?;
        let witt = sub.elems().iter().map(|&k| self.witt_at(k).clone()).collect();
        Ok(WittVector { ghost, witt })
    }

    /// Membership in the minimal prime `𝔭_n = ker(gh_n)`.
    pub fn in_kernel_gh(&self, n: u64) -> Result<bool> {
        self.set().require(n)?;
        Ok(self.ghost.at(n).is_zero())
    }
}

impl std::fmt::Display for WittVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let coords: Vec<String> = self.witt().iter().map(ToString::to_string).collect();
        write!(f, "witt ({}) ghost {}", coords.join(", "), self.ghost())
    }
}
