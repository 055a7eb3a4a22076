use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial, ordered graded-lexicographically:
/// first by total degree, then lexicographically on the exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over ℤ with arbitrary-precision
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn zero(vars: usize) -> Self {
        IntPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars], c)
    }

    /// The variable `x_i` (0-based).
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index {i} out of range for {vars} variables");
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(vars, e, 1)
    }

    pub fn monomial(vars: usize, exps: Vec<u32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars, "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        IntPoly { vars, terms }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms(
        vars: usize,
        terms: impl IntoIterator<Item = (BigInt, Vec<u32>)>,
    ) -> Result<Self> {
        let mut p = IntPoly::zero(vars);
        for (c, e) in terms {
            if e.len() != vars {
                return Err(Error::Invalid(format!(
                    "exponent vector {e:?} has length {} but the polynomial has {vars} variables",
                    e.len()
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.degree() == 0 && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(self.vars);
        }
        IntPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> IntPoly {
        self.scale(&BigInt::from(c))
    }

    pub fn pow(&self, mut e: u64) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one(self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_divisible_by(&self, n: &BigInt) -> bool {
        !n.is_zero() && self.terms.values().all(|c| c.is_multiple_of(n))
    }

    /// Returns `g` with `n·g = self`, or [`Error::NotDivisible`] naming the
    /// first offending coefficient.
    pub fn exact_div(&self, n: &BigInt) -> Result<IntPoly> {
        if n.is_zero() {
            return Err(Error::Invalid("division by zero".into()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(n);
            if !r.is_zero() {
                return Err(Error::NotDivisible { coeff: c.clone(), divisor: n.clone() });
            }
            terms.insert(m.clone(), q);
        }
        Ok(IntPoly { vars: self.vars, terms })
    }

    pub fn exact_div_u64(&self, n: u64) -> Result<IntPoly> {
        self.exact_div(&BigInt::from(n))
    }

    /// Partial derivative with respect to `x_i` (0-based).
    pub fn derivative(&self, i: usize) -> IntPoly {
        let mut out = IntPoly::zero(self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * BigInt::from(e));
        }
        out
    }

    /// The standard Frobenius lift `x_i ↦ x_i^p`, identity on coefficients.
    pub fn frobenius_lift(&self, p: u64) -> IntPoly {
        let p = u32::try_from(p).expect("prime fits in u32");
        IntPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0.iter().map(|e| e * p).collect()), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn mul_monomial(&self, exps: &[u32]) -> IntPoly {
        let shift = Monomial(exps.to_vec());
        IntPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.mul(&shift), c.clone())).collect(),
        }
    }

    /// Splits into single-term polynomials, ascending graded-lex.
    pub fn monomials(&self) -> impl Iterator<Item = IntPoly> + '_ {
        self.terms.iter().map(|(m, c)| IntPoly::monomial(self.vars, m.0.clone(), c.clone()))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    fn check_vars(&self, other: &IntPoly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable counts");
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.check_vars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        self.check_vars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.check_vars(rhs);
        let mut acc: std::collections::HashMap<Monomial, BigInt> =
            std::collections::HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        IntPoly { vars: self.vars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $f(self, rhs: IntPoly) -> IntPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $f(self, rhs: &IntPoly) -> IntPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $f(self, rhs: IntPoly) -> IntPoly {
                self.$f(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Variable names used by `Display`: `t` for one variable, `x, y, z` for
/// up to three, `x1..xt` beyond that.
pub fn var_name(vars: usize, i: usize) -> String {
    match vars {
        1 => "t".to_string(),
        2 | 3 => ["x", "y", "z"][i].to_string(),
        _ => format!("x{}", i + 1),
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let mon: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let v = var_name(self.vars, i);
                    if e == 1 {
                        v
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mon.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mon.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mon.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]({self})", self.vars)
    }
}
