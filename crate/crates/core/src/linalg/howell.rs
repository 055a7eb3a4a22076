use super::ring::{Integers, SolveRing, ZMod};
use crate::error::{Error, Result};

/// A dense matrix over ℤ/N with entries reduced to `[0, N)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn new(modulus: u64, rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if modulus == 0 || modulus > (1 << 62) {
            return Err(Error::BadModulus(modulus.to_string()));
        }
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, got: entries.len() });
        }
        let m = modulus as i128;
        let entries = entries.into_iter().map(|e| (e as i128).rem_euclid(m) as u64).collect();
        Ok(ModMatrix { modulus, rows, cols, entries })
    }

    pub fn from_rows(modulus: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Self::new(modulus, rows.len(), cols, rows.concat())
    }

    pub fn identity(modulus: u64, n: usize) -> Result<Self> {
        let mut e = vec![0i64; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Self::new(modulus, n, n, e)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    /// `A·x` over ℤ/N.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        let ring = ZMod::new(self.modulus);
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(0, |acc, c| ring.add(&acc, &ring.mul(&self.get(r, c), &x[c])))
            })
            .collect()
    }

    fn transpose_rows(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self.get(r, c)).collect()).collect()
    }
}

/// Row echelon form with the Howell property: for every pivot column `c`,
/// the rows whose pivot lies at or after `c` span every vector of the row
/// module that vanishes before `c`. Over ℤ (no zero divisors) this is the
/// Hermite normal form.
///
/// Each row remembers its coefficients with respect to the input rows.
#[derive(Clone, Debug)]
pub struct HowellForm<R: SolveRing> {
    ring: R,
    width: usize,
    rows: Vec<EchelonRow<R::Elem>>,
}

#[derive(Clone, Debug)]
struct EchelonRow<E> {
    pivot: usize,
    row: Vec<E>,
    combo: Vec<E>,
}

fn lin_comb<R: SolveRing>(ring: &R, a: &R::Elem, x: &[R::Elem], b: &R::Elem, y: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().zip(y).map(|(u, v)| ring.add(&ring.mul(a, u), &ring.mul(b, v))).collect()
}

fn scaled<R: SolveRing>(ring: &R, a: &R::Elem, x: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().map(|u| ring.mul(a, u)).collect()
}

fn axpy<R: SolveRing>(ring: &R, acc: &mut [R::Elem], a: &R::Elem, x: &[R::Elem]) {
    for (s, u) in acc.iter_mut().zip(x) {
        *s = ring.add(s, &ring.mul(a, u));
    }
}

impl<R: SolveRing> HowellForm<R> {
    /// Computes the form of the module spanned by `generators`, each of
    /// length `width`.
    pub fn new(ring: R, generators: Vec<Vec<R::Elem>>, width: usize) -> Self {
        let count = generators.len();
        let mut work: Vec<(Vec<R::Elem>, Vec<R::Elem>)> = generators
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                let mut combo = vec![ring.zero(); count];
                combo[i] = ring.from_big(&1.into());
                (row, combo)
            })
            .collect();
        let mut done: Vec<EchelonRow<R::Elem>> = Vec::new();
        for c in 0..width {
            // gather the gcd of column c into the first working row
            let Some(first) = work.iter().position(|(r, _)| !ring.is_zero(&r[c])) else {
                continue;
            };
            work.swap(0, first);
            for i in 1..work.len() {
                if ring.is_zero(&work[i].0[c]) {
                    continue;
                }
                let [_, s, t, u, v] = ring.gcdex(&work[0].0[c], &work[i].0[c]);
                let (r0, c0) = &work[0];
                let (ri, ci) = &work[i];
                let new0 = (lin_comb(&ring, &s, r0, &t, ri), lin_comb(&ring, &s, c0, &t, ci));
                let newi = (lin_comb(&ring, &u, r0, &v, ri), lin_comb(&ring, &u, c0, &v, ci));
                work[0] = new0;
                work[i] = newi;
            }
            let (mut row, mut combo) = work.remove(0);
            let unit = ring.unit_normal(&row[c]);
            row = scaled(&ring, &unit, &row);
            combo = scaled(&ring, &unit, &combo);
            // the annihilator multiple vanishes at c and joins the working set
            let ann = ring.annihilator(&row[c]);
            if !ring.is_zero(&ann) {
                let extra = (scaled(&ring, &ann, &row), scaled(&ring, &ann, &combo));
                if extra.0.iter().any(|e| !ring.is_zero(e)) {
                    work.push(extra);
                }
            }
            // reduce earlier rows at this pivot column
            for prev in done.iter_mut() {
                let q = ring.reduce_quotient(&prev.row[c], &row[c]);
                if !ring.is_zero(&q) {
                    let neg = ring.sub(&ring.zero(), &q);
                    axpy(&ring, &mut prev.row, &neg, &row);
                    axpy(&ring, &mut prev.combo, &neg, &combo);
                }
            }
            done.push(EchelonRow { pivot: c, row, combo });
            work.retain(|(r, _)| r.iter().any(|e| !ring.is_zero(e)));
        }
        HowellForm { ring, width, rows: done }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.rows[i].row
    }

    /// Coefficients expressing `target` in terms of the input generators,
    /// or `None` if it is outside their span.
    pub fn express(&self, target: &[R::Elem]) -> Option<Vec<R::Elem>> {
        assert_eq!(target.len(), self.width);
        let ring = &self.ring;
        let count = self.rows.first().map_or(0, |r| r.combo.len());
        let mut residual = target.to_vec();
        let mut coeffs = vec![ring.zero(); count];
        for er in &self.rows {
            let entry = &residual[er.pivot];
            if ring.is_zero(entry) {
                continue;
            }
            let q = ring.divide(entry, &er.row[er.pivot])?;
            let neg = ring.sub(&ring.zero(), &q);
            axpy(ring, &mut residual, &neg, &er.row);
            axpy(ring, &mut coeffs, &q, &er.combo);
        }
        residual.iter().all(|e| ring.is_zero(e)).then_some(coeffs)
    }
}

/// Solves `A·x = b` over ℤ/N, returning some solution or `None` when the
/// system is inconsistent.
pub fn howell_solve(a: &ModMatrix, b: &[i64]) -> Result<Option<Vec<u64>>> {
    if b.len() != a.rows {
        return Err(Error::LengthMismatch { expected: a.rows, got: b.len() });
    }
    let ring = ZMod::new(a.modulus);
    let m = a.modulus as i128;
    let target: Vec<u64> = b.iter().map(|&e| (e as i128).rem_euclid(m) as u64).collect();
    if a.cols == 0 {
        return Ok(target.iter().all(|&e| e == 0).then(Vec::new));
    }
    let form = HowellForm::new(ring, a.transpose_rows(), a.rows);
    Ok(form.express(&target))
}

/// Generic column-span solve: `columns[j]` is the j-th column of A.
pub(crate) fn solve_columns<R: SolveRing + Clone>(
    ring: &R,
    columns: Vec<Vec<R::Elem>>,
    target: &[R::Elem],
) -> Option<Vec<R::Elem>> {
    if columns.is_empty() {
        return target.iter().all(|e| ring.is_zero(e)).then(Vec::new);
    }
    HowellForm::new(ring.clone(), columns, target.len()).express(target)
}

/// Exact solve of `A·x = b` over ℤ, with `A` given by rows.
pub fn solve_integer(
    a: &[Vec<num_bigint::BigInt>],
    b: &[num_bigint::BigInt],
) -> Option<Vec<num_bigint::BigInt>> {
    let cols = a.first().map_or(0, Vec::len);
    let columns: Vec<Vec<_>> = (0..cols).map(|c| a.iter().map(|r| r[c].clone()).collect()).collect();
    solve_columns(&Integers, columns, b)
}
