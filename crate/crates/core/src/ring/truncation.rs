use std::fmt;

use super::arith::{factorize, is_prime, lcm_all};
use crate::error::{Error, Result};

/// A finite set of positive integers closed under taking divisors.
///
/// Elements are kept sorted ascending; every S-indexed family in this crate
/// stores its components in that order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncationSet {
    elems: Vec<u64>,
}

impl TruncationSet {
    pub fn new(elems: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut elems: Vec<u64> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        let closed = elems.iter().all(|&n| {
            n >= 1 && (1..n).filter(|k| n % k == 0).all(|k| elems.binary_search(&k).is_ok())
        });
        if !closed {
            return Err(Error::NotTruncationSet(elems));
        }
        Ok(TruncationSet { elems })
    }

    /// All divisors of `n`.
    pub fn divisors_of(n: u64) -> Self {
        TruncationSet { elems: (1..=n).filter(|k| n % k == 0).collect() }
    }

    /// `{1, p, ..., p^n}`.
    pub fn p_typical(p: u64, n: u32) -> Self {
        TruncationSet { elems: (0..=n).map(|e| p.pow(e)).collect() }
    }

    pub fn empty() -> Self {
        TruncationSet { elems: Vec::new() }
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.elems.binary_search(&n).is_ok()
    }

    pub fn index_of(&self, n: u64) -> Option<usize> {
        self.elems.binary_search(&n).ok()
    }

    pub fn require(&self, n: u64) -> Result<usize> {
        self.index_of(n).ok_or_else(|| Error::NotInSet { n, set: self.elems.clone() })
    }

    /// `S/n = {k : kn ∈ S}`.
    pub fn quotient(&self, n: u64) -> Self {
        assert!(n >= 1);
        TruncationSet {
            elems: self.elems.iter().filter(|&&k| k % n == 0).map(|&k| k / n).collect(),
        }
    }

    /// `S(p) = {k ∈ S : p ∤ k}`.
    pub fn coprime_part(&self, p: u64) -> Self {
        TruncationSet { elems: self.elems.iter().copied().filter(|k| k % p != 0).collect() }
    }

    /// σ = lcm(S); 1 for the empty set.
    pub fn lcm(&self) -> u64 {
        lcm_all(self.elems.iter().copied())
    }

    /// Primes that are elements of S.
    pub fn primes(&self) -> Vec<u64> {
        self.elems.iter().copied().filter(|&n| is_prime(n)).collect()
    }

    pub fn is_subset_of(&self, other: &TruncationSet) -> bool {
        self.elems.iter().all(|&n| other.contains(n))
    }

    /// Returns `n` with `S = {1, p, ..., p^n}`, if S has that shape.
    pub fn p_typical_height(&self, p: u64) -> Option<u32> {
        if self.elems.first() != Some(&1) {
            return None;
        }
        let mut expect = 1u64;
        for &k in &self.elems {
            if k != expect {
                return None;
            }
            expect = expect.checked_mul(p)?;
        }
        Some(self.elems.len() as u32 - 1)
    }

    pub fn require_p_typical(&self, p: u64) -> Result<u32> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        self.p_typical_height(p).ok_or_else(|| Error::NotPTypical { set: self.elems.clone(), p })
    }

    /// Divisors of `n` lying in S, ascending (all of them, since S is divisor closed).
    pub fn divisors_in(&self, n: u64) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().copied().take_while(move |&k| k <= n).filter(move |&k| n % k == 0)
    }

    pub fn prime_factors_of_lcm(&self) -> Vec<u64> {
        factorize(self.lcm()).into_iter().map(|(p, _)| p).collect()
    }
}

impl fmt::Debug for TruncationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

impl fmt::Display for TruncationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_divisor_closed() {
        assert!(TruncationSet::new([1, 4]).is_err());
        assert!(TruncationSet::new([2]).is_err());
        assert!(TruncationSet::new([0, 1]).is_err());
        assert!(TruncationSet::new([]).is_ok());
        assert!(TruncationSet::new([6, 3, 2, 1]).is_ok());
    }

    #[test]
    fn derived_views() {
        let s = TruncationSet::new([1, 2, 3, 6]).unwrap();
        assert_eq!(s.quotient(2).elems(), &[1, 3]);
        assert_eq!(s.quotient(6).elems(), &[1]);
        assert_eq!(s.quotient(4).elems(), &[] as &[u64]);
        assert_eq!(s.coprime_part(2).elems(), &[1, 3]);
        assert_eq!(s.coprime_part(3).elems(), &[1, 2]);
        assert_eq!(s.lcm(), 6);
        assert_eq!(s.primes(), vec![2, 3]);
        let t = TruncationSet::new([1, 2, 4]).unwrap();
        assert_eq!(t.p_typical_height(2), Some(2));
        assert_eq!(s.p_typical_height(2), None);
        assert_eq!(TruncationSet::new([1]).unwrap().p_typical_height(5), Some(0));
        assert_eq!(t.lcm(), 4);
    }
}
