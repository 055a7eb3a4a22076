//! Distinguished elements and ideals of `W_S(R)`: the Möbius elements μ_n
//! separating the minimal primes `ker(gh_n)`, and the ideal `I_p`.

use num_bigint::BigInt;
use num_integer::Integer;

use super::vector::WittVector;
use crate::error::{Error, Result};
use crate::ring::{is_prime, mobius, IntPoly, TruncationSet};

/// `V_m[r]` as an element of `W_S(R)`.
pub fn verschiebung_teichmuller(m: u64, r: &IntPoly, set: &TruncationSet) -> Result<WittVector> {
    set.require(m)?;
    WittVector::teichmuller(r, set.quotient(m)).verschiebung(m, set)
}

/// The right-hand side of the product rule
/// `V_m⟨r⟩·V_n⟨s⟩ = δ_S([m,n])·(m,n)·V_{[m,n]}⟨r^{n/(m,n)} s^{m/(m,n)}⟩`;
/// zero when `lcm(m, n) ∉ S`.
pub fn generator_product(m: u64, r: &IntPoly, n: u64, s: &IntPoly, set: &TruncationSet) -> Result<WittVector> {
    set.require(m)?;
    set.require(n)?;
    if r.vars() != s.vars() {
        return Err(Error::VarMismatch(r.vars(), s.vars()));
    }
    let g = m.gcd(&n);
    let l = m / g * n;
    if !set.contains(l) {
        return Ok(WittVector::zero(set.clone(), r.vars()));
    }
    let base = &r.pow(n / g) * &s.pow(m / g);
    Ok(verschiebung_teichmuller(l, &base, set)?.scale(&BigInt::from(g)))
}

/// `μ_n = Σ_{m ∈ n·S/n} μ(m/n)·(σ/m)·V_m[1]` with `σ = lcm(S)`.
///
/// Its ghost tuple is `σ` at position `n` and zero elsewhere.
pub fn mu_element(n: u64, set: &TruncationSet, vars: usize) -> Result<WittVector> {
    set.require(n)?;
    let sigma = set.lcm();
    let one = IntPoly::one(vars);
    let mut acc = WittVector::zero(set.clone(), vars);
    for m in set.elems().iter().copied().filter(|m| m % n == 0) {
        let coeff = mobius(m / n) as i64 * (sigma / m) as i64;
        if coeff == 0 {
            continue;
        }
        let term = verschiebung_teichmuller(m, &one, set)?.scale(&BigInt::from(coeff));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Membership in `I_p = ker(W_S(R) → W_{S(p)}(R)/p)`: the restriction to
/// `S(p)` has all Witt coordinates divisible by `p`.
pub fn ip_member(a: &WittVector, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb = BigInt::from(p);
    let restricted = a.restrict(&a.set().coprime_part(p))?;
    Ok(restricted.witt().iter().all(|c| c.is_divisible_by(&pb)))
}
