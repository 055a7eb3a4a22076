//! Generator expressions: explicit sums of products of `V_n⟨r⟩` and
//! `𝕕V_n⟨r⟩`, serving as membership certificates for `X_S^q`.

use num_bigint::BigInt;
use num_traits::One;

use super::form::DrwForm;
use crate::error::{Error, Result};
use crate::ring::{IntPoly, TruncationSet};

/// `V_n⟨r⟩`, or `𝕕V_n⟨r⟩` when `dd` is set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub n: u64,
    pub r: IntPoly,
    pub dd: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GenTerm {
    /// `coeff · Π factors`; the empty product is `1`.
    Product { coeff: BigInt, factors: Vec<Factor> },
    /// `V_n(ā; b̄) = Σ_i V_n⟨a_{i,0}⟩𝕕V_n⟨a_{i,1}⟩⋯𝕕V_n⟨a_{i,q}⟩ + Σ_i 𝕕V_n⟨b_{i,1}⟩⋯𝕕V_n⟨b_{i,q}⟩`.
    ///
    /// Rows of `a` have length `q+1`, rows of `b` length `q`; the two row
    /// counts are independent (a missing row stands for zeros). `b` is
    /// empty in degree 0.
    Block { n: u64, a: Vec<Vec<IntPoly>>, b: Vec<Vec<IntPoly>> },
}

impl Factor {
    pub fn v(n: u64, r: IntPoly) -> Self {
        Factor { n, r, dd: false }
    }

    pub fn dv(n: u64, r: IntPoly) -> Self {
        Factor { n, r, dd: true }
    }
}

impl GenTerm {
    pub fn product(coeff: impl Into<BigInt>, factors: Vec<Factor>) -> Self {
        GenTerm::Product { coeff: coeff.into(), factors }
    }

    pub fn degree(&self) -> Result<usize> {
        match self {
            GenTerm::Product { factors, .. } => Ok(factors.iter().filter(|f| f.dd).count()),
            GenTerm::Block { a, b, .. } => {
                let q = match (a.first(), b.first()) {
                    (Some(row), _) if !row.is_empty() => row.len() - 1,
                    (None, Some(row)) if !row.is_empty() => row.len(),
                    (None, None) => return Ok(0),
                    _ => return Err(Error::Invalid("block with an empty row".into())),
                };
                if a.iter().any(|row| row.len() != q + 1) || b.iter().any(|row| row.len() != q) {
                    return Err(Error::Invalid("block rows of inconsistent length".into()));
                }
                if q == 0 && !b.is_empty() {
                    return Err(Error::Invalid("degree-0 block with b rows".into()));
                }
                Ok(q)
            }
        }
    }

    /// The equivalent list of product terms.
    pub fn expand(&self) -> Vec<(BigInt, Vec<Factor>)> {
        match self {
            GenTerm::Product { coeff, factors } => vec![(coeff.clone(), factors.clone())],
            GenTerm::Block { n, a, b } => {
                let mut out = Vec::new();
                for row in a {
                    let mut fs = vec![Factor::v(*n, row[0].clone())];
                    fs.extend(row[1..].iter().map(|r| Factor::dv(*n, r.clone())));
                    out.push((BigInt::one(), fs));
                }
                for row in b {
                    out.push((BigInt::one(), row.iter().map(|r| Factor::dv(*n, r.clone())).collect()));
                }
                out
            }
        }
    }
}

/// A formal sum of generator terms of a fixed degree over `ℤ[x₁..x_t]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenExpr {
    pub q: usize,
    pub vars: usize,
    pub terms: Vec<GenTerm>,
}

fn eval_factor(f: &Factor, set: &TruncationSet, vars: usize) -> Result<DrwForm> {
    if f.r.vars() != vars {
        return Err(Error::VarMismatch(vars, f.r.vars()));
    }
    let g = DrwForm::generator(f.n, &f.r, set)?;
    if f.dd {
        g.dd()
    } else {
        Ok(g)
    }
}

impl GenExpr {
    pub fn new(q: usize, vars: usize, terms: Vec<GenTerm>) -> Result<Self> {
        for term in &terms {
            let d = term.degree()?;
            let empty_block = matches!(term, GenTerm::Block { a, b, .. } if a.is_empty() && b.is_empty());
            if d != q && !empty_block {
                return Err(Error::DegreeMismatch(q, d));
            }
        }
        Ok(GenExpr { q, vars, terms })
    }

    pub fn empty(q: usize, vars: usize) -> Self {
        GenExpr { q, vars, terms: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates to a certified element of `X_S^q`.
    pub fn evaluate(&self, set: &TruncationSet) -> Result<DrwForm> {
        let mut acc = DrwForm::zero(self.q, self.vars, set.clone());
        for term in &self.terms {
            for (coeff, factors) in term.expand() {
                let mut prod = DrwForm::one(self.vars, set.clone());
                for f in &factors {
                    prod = prod.mul(&eval_factor(f, set, self.vars)?)?;
                }
                if prod.degree() != self.q {
                    return Err(Error::DegreeMismatch(self.q, prod.degree()));
                }
                acc = acc.add(&prod.scale(&coeff))?;
            }
        }
        Ok(acc)
    }
}
