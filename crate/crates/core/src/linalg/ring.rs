//! Coefficient rings for the echelon solver: ℤ and ℤ/N.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::reduce_big;

pub trait SolveRing {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `(g, s, t, u, v)` with `s·a + t·b = g`, `u·a + v·b = 0` and the
    /// matrix `[[s, t], [u, v]]` invertible.
    fn gcdex(&self, a: &Self::Elem, b: &Self::Elem) -> [Self::Elem; 5];

    /// Some `q` with `q·b = a`, if one exists.
    fn divide(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Generator of the annihilator of `a`; zero when `a` is not a zero divisor.
    fn annihilator(&self, a: &Self::Elem) -> Self::Elem;

    /// A unit `u` such that `u·a` is the canonical associate of `a`.
    fn unit_normal(&self, a: &Self::Elem) -> Self::Elem;

    /// `q` such that `a − q·pivot` is the canonical remainder of `a`
    /// modulo the ideal generated by a canonical pivot.
    fn reduce_quotient(&self, a: &Self::Elem, pivot: &Self::Elem) -> Self::Elem;

    fn from_big(&self, c: &BigInt) -> Self::Elem;
    fn to_big(&self, a: &Self::Elem) -> BigInt;
}

/// The integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl SolveRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn gcdex(&self, a: &BigInt, b: &BigInt) -> [BigInt; 5] {
        if b.is_zero() {
            return [a.clone(), BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()];
        }
        let e = a.extended_gcd(b);
        let g = e.gcd;
        [g.clone(), e.x, e.y, -(b / &g), a / &g]
    }

    fn divide(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return a.is_zero().then(BigInt::zero);
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }

    fn annihilator(&self, _a: &BigInt) -> BigInt {
        BigInt::zero()
    }

    fn unit_normal(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn reduce_quotient(&self, a: &BigInt, pivot: &BigInt) -> BigInt {
        a.div_floor(pivot)
    }

    fn from_big(&self, c: &BigInt) -> BigInt {
        c.clone()
    }
    fn to_big(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
}

/// ℤ/N with residues in `[0, N)`.
#[derive(Clone, Copy, Debug)]
pub struct ZMod {
    n: u64,
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

impl ZMod {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1 && n <= (1 << 62), "modulus out of range");
        ZMod { n }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    fn reduce_i128(&self, a: i128) -> u64 {
        a.rem_euclid(self.n as i128) as u64
    }

    fn inverse(&self, a: u64, m: u64) -> Option<u64> {
        let e = (a as i128).extended_gcd(&(m as i128));
        (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
    }
}

impl SolveRing for ZMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.reduce_i128(*a as i128 - *b as i128)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }

    fn gcdex(&self, a: &u64, b: &u64) -> [u64; 5] {
        if *b == 0 {
            return [*a, 1 % self.n, 0, 0, 1 % self.n];
        }
        let e = (*a as i128).extended_gcd(&(*b as i128));
        let g = e.gcd;
        [
            self.reduce_i128(g),
            self.reduce_i128(e.x),
            self.reduce_i128(e.y),
            self.reduce_i128(-(*b as i128 / g)),
            self.reduce_i128(*a as i128 / g),
        ]
    }

    fn divide(&self, a: &u64, b: &u64) -> Option<u64> {
        let g = gcd_u64(*b, self.n);
        if a % g != 0 {
            return None;
        }
        let m = self.n / g;
        let inv = self.inverse((b / g) % m, m)?;
        Some((((a / g) as u128 * inv as u128) % m as u128) as u64)
    }

    fn annihilator(&self, a: &u64) -> u64 {
        (self.n / gcd_u64(*a, self.n)) % self.n
    }

    fn unit_normal(&self, a: &u64) -> u64 {
        if *a == 0 {
            return 1 % self.n;
        }
        let g = gcd_u64(*a, self.n);
        let m = self.n / g;
        let inv = self.inverse((a / g) % m, m).unwrap_or(1);
        // lift the inverse mod N/g to a unit mod N
        let mut u = inv % self.n.max(1);
        for _ in 0..g {
            if gcd_u64(u, self.n) == 1 {
                return u;
            }
            u = (u + m) % self.n;
        }
        1 % self.n
    }

    fn reduce_quotient(&self, a: &u64, pivot: &u64) -> u64 {
        if *pivot == 0 {
            0
        } else {
            a / pivot
        }
    }

    fn from_big(&self, c: &BigInt) -> u64 {
        reduce_big(c, self.n)
    }
    fn to_big(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }
}
