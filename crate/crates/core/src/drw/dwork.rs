//! Dwork-type congruences for tuples of forms, and the constructive lift
//! from the p-typical congruences to a generator expression.

use num_bigint::BigInt;

use super::form::DrwForm;
use super::genexpr::{GenExpr, GenTerm};
use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::linalg::{exactness_mod, member_mod};
use crate::ring::{is_prime, ord_p, IntPoly};

/// `φ_p(r₀dr₁⋯dr_q) = p^{−q}·φ_p(r₀)dφ_p(r₁)⋯dφ_p(r_q)`, i.e.
/// `f dx_J ↦ φ_p(f)·Π_{j∈J} x_j^{p−1} dx_J`.
pub fn phi_form(omega: &DiffForm, p: u64) -> DiffForm {
    let pq = BigInt::from(p).pow(omega.degree() as u32);
    omega.frobenius_pullback(p).exact_div(&pq).expect("p^q divides the pulled-back form")
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// First `k` with `φ_p(ω_{p^k}) − ω_{p^{k+1}} ∉ p^{k+1}Ω^q + dΩ^{q−1}`, over
/// a p-typical `S = {1, p, …, p^n}`.
pub fn drw_dwork_failure(raw: &DrwForm, p: u64) -> Result<Option<usize>> {
    require_prime(p)?;
    let n = raw.set().require_p_typical(p)?;
    for k in 0..n {
        let pk = p.pow(k);
        let diff = &phi_form(raw.at(pk), p) - raw.at(pk * p);
        if !member_mod(&diff, p, k + 1)? {
            return Ok(Some(k as usize));
        }
    }
    Ok(None)
}

/// Whether a raw tuple over a p-typical set lies in `X_S^q`, by the
/// de Rham–Witt form of Dwork's lemma.
pub fn drw_dwork_check(raw: &DrwForm, p: u64) -> Result<bool> {
    Ok(drw_dwork_failure(raw, p)?.is_none())
}

/// One congruence of the multi-prime necessity test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiCheckEntry {
    /// `k ∈ S/p`.
    pub k: u64,
    /// The congruence is taken modulo `p^exponent`, `exponent = ord_p(k)+1`.
    pub exponent: u32,
    /// `φ_p(ω_k) − ω_{kp}`.
    pub difference: DiffForm,
    /// `g` with `dg ≡ difference` modulo `p^exponent` (degree ≥ 1 only).
    pub witness: Option<DiffForm>,
    pub holds: bool,
}

/// Evaluates `φ_p(ω_k) − ω_{kp} ∈ p^{ord_p(k)+1}Ω^q + dΩ^{q−1}` for every
/// `k ∈ S/p`, on the 𝕕-convention components (which are the ghost values
/// the congruence is stated for).
pub fn drw_multi_report(omega: &DrwForm, p: u64) -> Result<Vec<MultiCheckEntry>> {
    require_prime(p)?;
    omega.set().require(p)?;
    let mut out = Vec::new();
    for &k in omega.set().quotient(p).elems() {
        let exponent = ord_p(k, p) + 1;
        let difference = &phi_form(omega.at(k), p) - omega.at(k * p);
        let (holds, witness) = if omega.degree() == 0 {
            (member_mod(&difference, p, exponent)?, None)
        } else {
            let g = exactness_mod(&difference, p, exponent)?;
            (g.is_some(), g)
        };
        out.push(MultiCheckEntry { k, exponent, difference, witness, holds });
    }
    Ok(out)
}

/// The necessary congruences for membership over an arbitrary `S` at the
/// prime `p`. True for every certified form; a `false` answer certifies
/// non-membership, a `true` answer alone does not certify membership.
pub fn drw_multi_check(omega: &DrwForm, p: u64) -> Result<bool> {
    Ok(drw_multi_report(omega, p)?.iter().all(|e| e.holds))
}

/// `ω_r̄^{(m)} = r₀^{p^m}·Π_{j≥1} r_j^{p^m−1} dr₁⋯dr_q`.
pub fn omega_power(rs: &[IntPoly], p: u64, m: u32) -> DiffForm {
    let e = p.pow(m);
    let mut coeff = rs[0].pow(e);
    for r in &rs[1..] {
        coeff = &coeff * &r.pow(e - 1);
    }
    let mut head = vec![coeff];
    head.extend_from_slice(&rs[1..]);
    DiffForm::elementary(&head)
}

/// `ω_{(1,s̄)}^{(m)}`.
fn exact_power(ss: &[IntPoly], p: u64, m: u32) -> DiffForm {
    let vars = ss[0].vars();
    let mut rs = vec![IntPoly::one(vars)];
    rs.extend_from_slice(ss);
    omega_power(&rs, p, m)
}

/// Rows `(c·x^a, x_{j₁}, …, x_{j_q})` with `Σ ω_row = θ`.
fn elementary_rows(theta: &DiffForm) -> Vec<Vec<IntPoly>> {
    let vars = theta.vars();
    theta
        .monomial_decompose()
        .into_iter()
        .map(|(mono, idx)| {
            let mut row = vec![mono];
            row.extend(idx.into_iter().map(|j| IntPoly::var(vars, j)));
            row
        })
        .collect()
}

/// Rows `(h_J, x_{j₁}, …, x_{j_{q−1}})` with `Σ ω_{(1,row)} = dg` for
/// `g = Σ h_J dx_J`.
fn antiderivative_rows(g: &DiffForm) -> Vec<Vec<IntPoly>> {
    let vars = g.vars();
    g.comps()
        .map(|(idx, h)| {
            let mut row = vec![h.clone()];
            row.extend(idx.iter().map(|&j| IntPoly::var(vars, j)));
            row
        })
        .collect()
}

/// Writes a tuple over `S = {1, p, …, p^n}` as `Σ_m V_{p^m}(ā_m; b̄_m)`.
///
/// Level `k` peels off the contributions of the earlier blocks at `p^k`;
/// the remainder `ρ` is split as `p^k·θ + dg` with `g` from the exactness
/// solver, giving `ā_k` from the monomials of `θ` and `b̄_k` from `g`.
/// Fails with `NotInImage { level }` where `level` is the first failing
/// congruence index of [`drw_dwork_check`]. The evaluation of the result is
/// verified to reproduce `raw` exactly.
pub fn drw_lift(raw: &DrwForm, p: u64) -> Result<GenExpr> {
    Ok(drw_lift_certified(raw, p)?.0)
}

/// [`drw_lift`] together with the certified evaluation.
pub fn drw_lift_certified(raw: &DrwForm, p: u64) -> Result<(GenExpr, DrwForm)> {
    require_prime(p)?;
    let n = raw.set().require_p_typical(p)?;
    let q = raw.degree();
    let mut a_rows: Vec<Vec<Vec<IntPoly>>> = Vec::new();
    let mut b_rows: Vec<Vec<Vec<IntPoly>>> = Vec::new();
    for k in 0..=n {
        let pk = p.pow(k);
        let mut rho = raw.at(pk).clone();
        for m in 0..k {
            let weight = BigInt::from(p.pow(m));
            for row in &a_rows[m as usize] {
                rho = &rho - &omega_power(row, p, k - m).scale(&weight);
            }
            for row in &b_rows[m as usize] {
                rho = &rho - &exact_power(row, p, k - m);
            }
        }
        let not_in_image = || Error::NotInImage { level: k as usize - 1 };
        let (theta, g) = if k == 0 {
            (rho, None)
        } else if q == 0 {
            (rho.exact_div(&BigInt::from(pk)).map_err(|_| not_in_image())?, None)
        } else {
            let g = exactness_mod(&rho, p, k)?.ok_or_else(not_in_image)?;
            let theta = (&rho - &g.differential()).exact_div(&BigInt::from(pk)).expect("solver witness is sound");
            (theta, Some(g))
        };
        a_rows.push(elementary_rows(&theta));
        b_rows.push(g.as_ref().map(antiderivative_rows).unwrap_or_default());
    }
    let terms = a_rows
        .into_iter()
        .zip(b_rows)
        .enumerate()
        .filter(|(_, (a, b))| !a.is_empty() || !b.is_empty())
        .map(|(m, (a, b))| GenTerm::Block { n: p.pow(m as u32), a, b })
        .collect();
    let expr = GenExpr::new(q, raw.vars(), terms)?;
    let value = expr.evaluate(raw.set())?;
    if &value != raw {
        return Err(Error::Invalid(format!("lift does not reproduce the input: {value:?}")));
    }
    Ok((expr, value))
}
