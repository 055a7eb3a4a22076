use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::{IntPoly, Monomial};
use crate::error::{Error, Result};

/// Polynomial with coefficients in ℤ/N, stored as residues in `[0, N)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    modulus: u64,
    vars: usize,
    terms: BTreeMap<Monomial, u64>,
}

/// Reduces an integer into `[0, modulus)`.
pub fn reduce_big(c: &BigInt, modulus: u64) -> u64 {
    c.mod_floor(&BigInt::from(modulus)).to_u64().expect("residue fits in u64")
}

impl ModPoly {
    pub fn zero(vars: usize, modulus: u64) -> Result<Self> {
        if modulus == 0 || modulus > (1 << 62) {
            return Err(Error::BadModulus(modulus.to_string()));
        }
        Ok(ModPoly { modulus, vars, terms: BTreeMap::new() })
    }

    pub fn from_int(f: &IntPoly, modulus: u64) -> Result<Self> {
        let mut out = Self::zero(f.vars(), modulus)?;
        for (m, c) in f.terms() {
            let r = reduce_big(c, modulus);
            if r != 0 {
                out.terms.insert(m.clone(), r);
            }
        }
        Ok(out)
    }

    /// Lifts to the integer polynomial of representatives in `[0, N)`.
    pub fn to_int(&self) -> IntPoly {
        IntPoly::from_terms(
            self.vars,
            self.terms.iter().map(|(m, &c)| (BigInt::from(c), m.exps().to_vec())),
        )
        .expect("consistent variable count")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Monomial, c: u64) {
        let n = self.modulus as u128;
        let e = self.terms.entry(m).or_insert(0);
        *e = ((*e as u128 + c as u128) % n) as u64;
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        assert_eq!(self.modulus, other.modulus);
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.insert_add(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> ModPoly {
        ModPoly {
            modulus: self.modulus,
            vars: self.vars,
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), self.modulus - c)).collect(),
        }
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.add(&other.neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_lift() {
        let t = IntPoly::var(1, 0);
        let f = &t.scale_i64(-3) + &IntPoly::constant(1, 8);
        let m = ModPoly::from_int(&f, 4).unwrap();
        assert_eq!(m.to_int(), t.scale_i64(1));
        assert!(m.sub(&m).is_zero());
        assert!(ModPoly::zero(1, 0).is_err());
    }
}
