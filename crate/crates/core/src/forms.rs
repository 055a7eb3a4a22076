//! Differential forms on ℤ[x₁..x_t].
//!
//! A q-form is stored as a map from strictly increasing index tuples
//! `J = (j₁ < … < j_q)` (0-based variable indices) to coefficient
//! polynomials, meaning `Σ_J f_J dx_{j₁}∧…∧dx_{j_q}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{var_name, IntPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffForm {
    q: usize,
    vars: usize,
    comps: BTreeMap<Vec<usize>, IntPoly>,
}

/// Merges two increasing tuples, returning the sign of the sorting
/// permutation, or `None` if they share an index.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut inversions = 0usize;
    for &x in a {
        for &y in b {
            match x.cmp(&y) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
    merged.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, merged))
}

impl DiffForm {
    pub fn zero(q: usize, vars: usize) -> Self {
        DiffForm { q, vars, comps: BTreeMap::new() }
    }

    /// Degree-0 form from a polynomial.
    pub fn from_poly(f: IntPoly) -> Self {
        let vars = f.vars();
        let mut out = DiffForm::zero(0, vars);
        out.add_comp(Vec::new(), f);
        out
    }

    /// `f dx_J` for an increasing tuple `J`.
    pub fn term(f: IntPoly, idx: Vec<usize>) -> Result<Self> {
        let vars = f.vars();
        Self::new(idx.len(), vars, [(idx, f)])
    }

    /// `dx_{j₁}∧…∧dx_{j_q}`.
    pub fn basis(vars: usize, idx: Vec<usize>) -> Result<Self> {
        Self::term(IntPoly::one(vars), idx)
    }

    pub fn new(
        q: usize,
        vars: usize,
        comps: impl IntoIterator<Item = (Vec<usize>, IntPoly)>,
    ) -> Result<Self> {
        let mut out = DiffForm::zero(q, vars);
        for (idx, f) in comps {
            if idx.len() != q
                || idx.windows(2).any(|w| w[0] >= w[1])
                || idx.iter().any(|&j| j >= vars)
            {
                return Err(Error::InvalidIndexTuple(idx));
            }
            if f.vars() != vars {
                return Err(Error::VarMismatch(vars, f.vars()));
            }
            out.add_comp(idx, f);
        }
        Ok(out)
    }

    fn add_comp(&mut self, idx: Vec<usize>, f: IntPoly) {
        if f.is_zero() {
            return;
        }
        match self.comps.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &f;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn comps(&self) -> impl Iterator<Item = (&Vec<usize>, &IntPoly)> + '_ {
        self.comps.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> IntPoly {
        self.comps.get(idx).cloned().unwrap_or_else(|| IntPoly::zero(self.vars))
    }

    /// The coefficient of a degree-0 form.
    pub fn as_poly(&self) -> IntPoly {
        assert_eq!(self.q, 0, "as_poly on a form of positive degree");
        self.coeff(&[])
    }

    /// Largest total degree among the coefficient polynomials.
    pub fn max_coeff_degree(&self) -> Option<u32> {
        self.comps.values().filter_map(IntPoly::total_degree).max()
    }

    pub fn map_coeffs(&self, f: impl Fn(&IntPoly) -> IntPoly) -> DiffForm {
        let mut out = DiffForm::zero(self.q, self.vars);
        for (idx, c) in &self.comps {
            out.add_comp(idx.clone(), f(c));
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> DiffForm {
        if c.is_zero() {
            return DiffForm::zero(self.q, self.vars);
        }
        self.map_coeffs(|f| f.scale(c))
    }

    pub fn scale_i64(&self, c: i64) -> DiffForm {
        self.scale(&BigInt::from(c))
    }

    pub fn mul_poly(&self, f: &IntPoly) -> DiffForm {
        self.map_coeffs(|c| c * f)
    }

    pub fn exact_div(&self, n: &BigInt) -> Result<DiffForm> {
        let mut out = DiffForm::zero(self.q, self.vars);
        for (idx, c) in &self.comps {
            out.add_comp(idx.clone(), c.exact_div(n)?);
        }
        Ok(out)
    }

    pub fn is_divisible_by(&self, n: &BigInt) -> bool {
        self.comps.values().all(|c| c.is_divisible_by(n))
    }

    /// The exterior derivative.
    pub fn differential(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.q + 1, self.vars);
        for (idx, f) in &self.comps {
            for i in 0..self.vars {
                let df = f.derivative(i);
                if df.is_zero() {
                    continue;
                }
                if let Some((sign, merged)) = merge_sign(&[i], idx) {
                    out.add_comp(merged, df.scale_i64(sign));
                }
            }
        }
        out
    }

    pub fn wedge(&self, other: &DiffForm) -> DiffForm {
        assert_eq!(self.vars, other.vars, "wedge of forms over different variable counts");
        let mut out = DiffForm::zero(self.q + other.q, self.vars);
        for (ja, fa) in &self.comps {
            for (jb, fb) in &other.comps {
                if let Some((sign, merged)) = merge_sign(ja, jb) {
                    let c = fa * fb;
                    out.add_comp(merged, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Expansion into elementary terms `c·x^a dx_J`, ascending by index
    /// tuple then by graded-lex monomial.
    pub fn monomial_decompose(&self) -> Vec<(IntPoly, Vec<usize>)> {
        self.comps
            .iter()
            .flat_map(|(idx, f)| f.monomials().map(move |m| (m, idx.clone())))
            .collect()
    }

    /// `r₀ dr₁∧…∧dr_q` for `rs = [r₀, …, r_q]`.
    pub fn elementary(rs: &[IntPoly]) -> DiffForm {
        let (r0, rest) = rs.split_first().expect("elementary form needs r0");
        let mut out = DiffForm::from_poly(r0.clone());
        for r in rest {
            out = out.wedge(&d_poly(r));
        }
        out
    }

    /// Pulls back along `x_i ↦ x_i^p`: `f dx_J ↦ φ(f)·d(x_{j₁}^p)∧…`.
    pub fn frobenius_pullback(&self, p: u64) -> DiffForm {
        let e = u32::try_from(p - 1).expect("prime fits in u32");
        let pq = BigInt::from(p).pow(self.q as u32);
        let mut out = DiffForm::zero(self.q, self.vars);
        for (idx, f) in &self.comps {
            let mut shift = vec![0u32; self.vars];
            for &j in idx {
                shift[j] = e;
            }
            out.add_comp(idx.clone(), f.frobenius_lift(p).mul_monomial(&shift).scale(&pq));
        }
        out
    }

    fn check_compatible(&self, other: &DiffForm) {
        assert_eq!(self.q, other.q, "adding forms of different degrees");
        assert_eq!(self.vars, other.vars, "adding forms over different variable counts");
    }
}

/// `df` as a 1-form.
pub fn d_poly(f: &IntPoly) -> DiffForm {
    DiffForm::from_poly(f.clone()).differential()
}

impl Add<&DiffForm> for &DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (idx, f) in &rhs.comps {
            out.add_comp(idx.clone(), f.clone());
        }
        out
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        self.map_coeffs(|f| -f)
    }
}

impl Sub<&DiffForm> for &DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        self + &(-rhs)
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(idx, c)| {
                if idx.is_empty() {
                    return c.to_string();
                }
                let dx: Vec<String> =
                    idx.iter().map(|&j| format!("d{}", var_name(self.vars, j))).collect();
                if c.is_one() {
                    dx.join("∧")
                } else if (-c).is_one() {
                    format!("-{}", dx.join("∧"))
                } else if c.num_terms() == 1 {
                    format!("{c} {}", dx.join("∧"))
                } else {
                    format!("({c}) {}", dx.join("∧"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffForm[q={}, t={}]({self})", self.q, self.vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (IntPoly, IntPoly) {
        (IntPoly::var(2, 0), IntPoly::var(2, 1))
    }

    #[test]
    fn differential_examples() {
        let (x, y) = xy();
        let f = &x.pow(2) * &y;
        let df = d_poly(&f);
        let expected = DiffForm::new(
            1,
            2,
            [(vec![0], (&x * &y).scale_i64(2)), (vec![1], x.pow(2))],
        )
        .unwrap();
        assert_eq!(df, expected);
        assert!(d_poly(&IntPoly::constant(2, 7)).is_zero());
        let x_dx = DiffForm::term(x.clone(), vec![0]).unwrap();
        assert!(x_dx.differential().is_zero());
    }

    #[test]
    fn wedge_examples() {
        let (x, y) = xy();
        let dx = DiffForm::basis(2, vec![0]).unwrap();
        let dy = DiffForm::basis(2, vec![1]).unwrap();
        let dxdy = DiffForm::basis(2, vec![0, 1]).unwrap();
        assert_eq!(dx.wedge(&dy), dxdy);
        assert_eq!(dy.wedge(&dx), -&dxdy);
        assert!(dx.wedge(&dx).is_zero());
        let a = DiffForm::term(x.clone(), vec![1]).unwrap();
        let b = DiffForm::term(y.clone(), vec![0]).unwrap();
        assert_eq!(a.wedge(&b), DiffForm::term(-(&x * &y), vec![0, 1]).unwrap());
    }

    #[test]
    fn decompose_examples() {
        let (x, y) = xy();
        let w = &DiffForm::term(x.scale_i64(2), vec![0]).unwrap()
            + &DiffForm::term(IntPoly::constant(2, 3), vec![1]).unwrap();
        assert_eq!(
            w.monomial_decompose(),
            vec![(x.scale_i64(2), vec![0]), (IntPoly::constant(2, 3), vec![1])]
        );
        assert!(DiffForm::zero(1, 2).monomial_decompose().is_empty());
        let v = DiffForm::term(&x + &y, vec![0, 1]).unwrap();
        let parts = v.monomial_decompose();
        assert_eq!(parts.len(), 2);
        assert!(parts.contains(&(x.clone(), vec![0, 1])));
        assert!(parts.contains(&(y.clone(), vec![0, 1])));
    }

    #[test]
    fn rejects_bad_tuples() {
        let one = IntPoly::one(2);
        assert!(DiffForm::term(one.clone(), vec![1, 0]).is_err());
        assert!(DiffForm::term(one.clone(), vec![0, 0]).is_err());
        assert!(DiffForm::term(one, vec![2]).is_err());
    }

    #[test]
    fn forms_above_dimension_vanish() {
        let (x, y) = xy();
        let w = d_poly(&x).wedge(&d_poly(&y)).wedge(&d_poly(&(&x * &y)));
        assert!(w.is_zero());
        assert_eq!(w.degree(), 3);
    }
}
