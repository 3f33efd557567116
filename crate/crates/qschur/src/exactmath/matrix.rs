//! Dense matrices over Q(zeta_e) and the exact linear algebra the
//! representation-theoretic modules need: rank, nullspace, inversion,
//! echelon spans with coordinate solving, and generalized eigenprojections
//! onto root-of-unity eigenvalues.

use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::cyclo::CycloNum;

#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    e: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

impl CycloMatrix {
    pub fn zero(e: u32, rows: usize, cols: usize) -> Self {
        CycloMatrix {
            e,
            rows,
            cols,
            data: vec![CycloNum::zero(e); rows * cols],
        }
    }

    pub fn identity(e: u32, n: usize) -> Self {
        let mut m = Self::zero(e, n, n);
        for i in 0..n {
            m.set(i, i, CycloNum::one(e));
        }
        m
    }

    pub fn from_rows(e: u32, rows: Vec<Vec<CycloNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        CycloMatrix {
            e,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(e: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycloNum) -> Self {
        let mut m = Self::zero(e, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Integer-entry convenience constructor.
    pub fn from_ints(e: u32, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            e,
            rows.iter()
                .map(|r| r.iter().map(|&x| CycloNum::from_int(e, x)).collect())
                .collect(),
        )
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycloNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        CycloMatrix {
            e: self.e,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        CycloMatrix {
            e: self.e,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        CycloMatrix {
            e: self.e,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        CycloMatrix {
            e: self.e,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.e, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.e, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.e, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        self.pow(self.rows as u32).is_zero()
    }

    /// Left-multiply a row vector: y = x * self.
    pub fn apply_row(&self, x: &[CycloNum]) -> Vec<CycloNum> {
        assert_eq!(x.len(), self.rows);
        let mut y = vec![CycloNum::zero(self.e); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let m = self.get(i, j);
                if !m.is_zero() {
                    y[j] = y[j].add(&xi.mul(m));
                }
            }
        }
        y
    }

    /// Exact rank and a basis of the right nullspace.
    pub fn rank_nullspace(&self) -> (usize, Vec<Vec<CycloNum>>) {
        let mut rows: Vec<Vec<CycloNum>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols);
        let rank = pivots.len();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut nullspace = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![CycloNum::zero(self.e); self.cols];
            v[free] = CycloNum::one(self.e);
            for (r, &p) in pivots.iter().enumerate() {
                // pivot entry is 1 after rref
                v[p] = rows[r][free].neg();
            }
            nullspace.push(v);
        }
        (rank, nullspace)
    }

    pub fn rank(&self) -> usize {
        self.rank_nullspace().0
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn invert(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut rows: Vec<Vec<CycloNum>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                for j in 0..n {
                    r.push(if i == j {
                        CycloNum::one(self.e)
                    } else {
                        CycloNum::zero(self.e)
                    });
                }
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::SingularError(format!("{n}x{n} matrix has rank {}", pivots.len())));
        }
        let mut out = Self::zero(self.e, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, rows[i][n + j].clone());
            }
        }
        Ok(out)
    }

    /// Exact inverse of a unipotent-style matrix (scalar plus nilpotent) or
    /// any invertible matrix; errors when singular.
    pub fn nilpotent_inverse(&self) -> Result<Self> {
        self.invert()
    }

    /// Projection onto the generalized eigenspace of `eigenvalue`, via the
    /// interpolation polynomial p with p = 1 mod (x - eigenvalue)^bound and
    /// p = 0 mod (x - mu)^bound at every other eigenvalue mu in the spectrum.
    ///
    /// The spectrum is required to lie inside {zeta_e^i}; anything else is a
    /// `SpectrumError`.
    pub fn generalized_eigenprojection(
        &self,
        eigenvalue: &CycloNum,
        nilpotency_bound: usize,
    ) -> Result<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let e = self.e;
        if n == 0 {
            return Ok(self.clone());
        }
        // Generalized eigenspace dimensions over the candidate eigenvalues.
        let mut spectrum: Vec<(CycloNum, usize)> = Vec::new();
        let mut total = 0usize;
        for i in 0..e {
            let ev = CycloNum::zeta_pow(e, i as i64);
            let shifted = self.sub(&CycloMatrix::identity(e, n).scale(&ev));
            let dim = n - shifted.pow(n as u32).rank();
            if dim > 0 {
                spectrum.push((ev, dim));
                total += dim;
            }
        }
        if total != n {
            return Err(Error::SpectrumError(format!(
                "generalized eigenspaces for zeta^i span only {total} of {n} dimensions"
            )));
        }
        if !spectrum.iter().any(|(ev, _)| ev == eigenvalue) {
            return Ok(Self::zero(e, n, n));
        }
        if spectrum.len() == 1 {
            return Ok(Self::identity(e, n));
        }
        let b = nilpotency_bound.max(1);
        // g(x) = prod_{mu != eigenvalue} (x - mu)^b, then invert g as a power
        // series in y = x - eigenvalue up to y^b and set p = g * g^{-1}.
        let mut g = CycloPoly::one(e);
        for (ev, _) in spectrum.iter().filter(|(ev, _)| ev != eigenvalue) {
            let lin = CycloPoly::new(e, vec![ev.neg(), CycloNum::one(e)]);
            for _ in 0..b {
                g = g.mul(&lin);
            }
        }
        let g_shifted = g.shift(eigenvalue); // coefficients in y = x - eigenvalue
        let h_shifted = g_shifted.series_inverse(b)?;
        let h = h_shifted.shift(&eigenvalue.neg()); // back to x
        let p = g.mul(&h);
        Ok(p.eval_matrix(self))
    }
}

impl std::fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CycloMatrix(e={}, {}x{}):", self.e, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Rows beyond the rank are left as zero rows (not removed).
pub fn rref_in_place(rows: &mut [Vec<CycloNum>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            rows[r][j] = rows[r][j].mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..cols {
                    let t = factor.mul(&rows[r][j]);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A reduced row echelon span supporting residue computation.
pub struct Echelon {
    e: u32,
    cols: usize,
    rows: Vec<Vec<CycloNum>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(e: u32, cols: usize) -> Self {
        Echelon {
            e,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(e: u32, cols: usize, rows: Vec<Vec<CycloNum>>) -> Self {
        let mut rows = rows;
        let pivots = rref_in_place(&mut rows, cols);
        rows.truncate(pivots.len());
        Echelon {
            e,
            cols,
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` modulo the span; the result has zeros in all pivot columns.
    pub fn reduce(&self, v: &[CycloNum]) -> Vec<CycloNum> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for j in 0..self.cols {
                    if !row[j].is_zero() {
                        let t = factor.mul(&row[j]);
                        v[j] = v[j].sub(&t);
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[CycloNum]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[CycloNum]) -> bool {
        let red = self.reduce(v);
        let Some(p) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[p].inv().expect("nonzero leading entry");
        let mut row: Vec<CycloNum> = red.iter().map(|x| x.mul(&inv)).collect();
        // Normalize earlier rows against the new pivot column.
        for (r, old) in self.rows.iter_mut().enumerate() {
            let _ = r;
            if !old[p].is_zero() {
                let factor = old[p].clone();
                for j in 0..self.cols {
                    let t = factor.mul(&row[j]);
                    old[j] = old[j].sub(&t);
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, p);
        // Keep row entries referenced before move.
        row.truncate(self.cols);
        self.rows.insert(pos, row);
        true
    }
}

/// Expresses vectors exactly in a fixed (independent) spanning set, by
/// carrying the transform matrix alongside the echelonized span.
pub struct SpanSolver {
    e: u32,
    cols: usize,
    k: usize,
    /// (echelon row, its expression in the original spanning vectors)
    rows: Vec<(Vec<CycloNum>, Vec<CycloNum>)>,
    pivots: Vec<usize>,
}

impl SpanSolver {
    /// `spanning` must be linearly independent; errors with RankError otherwise.
    pub fn new(e: u32, cols: usize, spanning: &[Vec<CycloNum>]) -> Result<Self> {
        let k = spanning.len();
        let mut solver = SpanSolver {
            e,
            cols,
            k,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for (idx, v) in spanning.iter().enumerate() {
            let mut coord = vec![CycloNum::zero(e); k];
            coord[idx] = CycloNum::one(e);
            let (mut red, mut expr) = solver.reduce_tracked(v, &coord);
            let Some(p) = red.iter().position(|x| !x.is_zero()) else {
                return Err(Error::RankError(format!(
                    "spanning vector {idx} is dependent on its predecessors"
                )));
            };
            let inv = red[p].inv().expect("nonzero");
            for x in red.iter_mut() {
                *x = x.mul(&inv);
            }
            for x in expr.iter_mut() {
                *x = x.mul(&inv);
            }
            solver.pivots.push(p);
            solver.rows.push((red, expr));
        }
        Ok(solver)
    }

    fn reduce_tracked(&self, v: &[CycloNum], coord: &[CycloNum]) -> (Vec<CycloNum>, Vec<CycloNum>) {
        let mut v = v.to_vec();
        let mut expr = coord.to_vec();
        for ((row, rexpr), &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for j in 0..self.cols {
                    if !row[j].is_zero() {
                        let t = factor.mul(&row[j]);
                        v[j] = v[j].sub(&t);
                    }
                }
                for j in 0..self.k {
                    if !rexpr[j].is_zero() {
                        let t = factor.mul(&rexpr[j]);
                        expr[j] = expr[j].sub(&t);
                    }
                }
            }
        }
        (v, expr)
    }

    /// Coordinates of `v` in the spanning set, or None if `v` lies outside.
    pub fn solve(&self, v: &[CycloNum]) -> Option<Vec<CycloNum>> {
        let zero_coord = vec![CycloNum::zero(self.e); self.k];
        let (red, expr) = self.reduce_tracked(v, &zero_coord);
        if red.iter().any(|x| !x.is_zero()) {
            return None;
        }
        // v - sum c_i row_i = 0 with expr tracking -c in original coordinates.
        Some(expr.iter().map(|x| x.neg()).collect())
    }
}

/// Dense univariate polynomial over Q(zeta_e); ascending coefficients.
#[derive(Clone)]
struct CycloPoly {
    e: u32,
    coeffs: Vec<CycloNum>,
}

impl CycloPoly {
    fn new(e: u32, coeffs: Vec<CycloNum>) -> Self {
        let mut p = CycloPoly { e, coeffs };
        p.trim();
        p
    }

    fn one(e: u32) -> Self {
        CycloPoly {
            e,
            coeffs: vec![CycloNum::one(e)],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return CycloPoly {
                e: self.e,
                coeffs: vec![],
            };
        }
        let mut out = vec![CycloNum::zero(self.e); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        CycloPoly::new(self.e, out)
    }

    /// Rewrite in powers of y = x - a: p(x) = sum c_k (x - a)^k. Passing -a
    /// undoes the shift.
    fn shift(&self, a: &CycloNum) -> Self {
        // Horner in (y + a): process coefficients from the top.
        let mut out = CycloPoly {
            e: self.e,
            coeffs: vec![],
        };
        let y_plus_a = CycloPoly::new(self.e, vec![a.clone(), CycloNum::one(self.e)]);
        for c in self.coeffs.iter().rev() {
            out = out.mul(&y_plus_a);
            if out.coeffs.is_empty() {
                out.coeffs.push(c.clone());
            } else {
                out.coeffs[0] = out.coeffs[0].add(c);
            }
            out.trim();
        }
        out
    }

    /// Multiplicative inverse as a power series, truncated below y^order.
    fn series_inverse(&self, order: usize) -> Result<Self> {
        let c0 = self
            .coeffs
            .first()
            .cloned()
            .unwrap_or_else(|| CycloNum::zero(self.e));
        if c0.is_zero() {
            return Err(Error::SingularError("series has zero constant term".into()));
        }
        let c0_inv = c0.inv()?;
        let mut inv = vec![CycloNum::zero(self.e); order];
        inv[0] = c0_inv.clone();
        for k in 1..order {
            let mut acc = CycloNum::zero(self.e);
            for j in 1..=k {
                if j < self.coeffs.len() {
                    acc = acc.add(&self.coeffs[j].mul(&inv[k - j]));
                }
            }
            inv[k] = acc.neg().mul(&c0_inv);
        }
        Ok(CycloPoly::new(self.e, inv))
    }

    fn eval_matrix(&self, m: &CycloMatrix) -> CycloMatrix {
        let n = m.rows();
        let mut acc = CycloMatrix::zero(self.e, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            acc = acc.add(&CycloMatrix::identity(self.e, n).scale(c));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(e: u32, i: i64) -> CycloNum {
        CycloNum::zeta_pow(e, i)
    }

    #[test]
    fn test_rank_identity_and_zero() {
        let (r, ns) = CycloMatrix::identity(4, 3).rank_nullspace();
        assert_eq!((r, ns.len()), (3, 0));
        let (r, ns) = CycloMatrix::zero(4, 2, 2).rank_nullspace();
        assert_eq!((r, ns.len()), (0, 2));
    }

    #[test]
    fn test_rank_one_matrix() {
        // [[1, z], [z, z^2]]: second row is z times the first.
        let z = zeta(4, 1);
        let m = CycloMatrix::from_rows(
            4,
            vec![
                vec![CycloNum::one(4), z.clone()],
                vec![z.clone(), z.mul(&z)],
            ],
        );
        let (r, ns) = m.rank_nullspace();
        assert_eq!(r, 1);
        assert_eq!(ns.len(), 1);
        // nullspace vectors really annihilate.
        for v in ns {
            let y = m.apply_row(&[v[0].clone(), v[1].clone()]);
            // right nullspace: m * v = 0, i.e. apply to columns
            let prod0 = m.get(0, 0).mul(&v[0]).add(&m.get(0, 1).mul(&v[1]));
            let prod1 = m.get(1, 0).mul(&v[0]).add(&m.get(1, 1).mul(&v[1]));
            assert!(prod0.is_zero() && prod1.is_zero());
            let _ = y;
        }
    }

    #[test]
    fn test_invert() {
        let m = CycloMatrix::from_ints(4, &[&[1, 1], &[0, 1]]);
        let inv = m.invert().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(inv, CycloMatrix::from_ints(4, &[&[1, -1], &[0, 1]]));
        assert!(CycloMatrix::zero(4, 2, 2).invert().is_err());
        assert!(CycloMatrix::identity(5, 3).nilpotent_inverse().unwrap().is_identity());
    }

    #[test]
    fn test_eigenprojection_diagonal() {
        let e = 4;
        let m = CycloMatrix::from_rows(
            e,
            vec![
                vec![zeta(e, 1), CycloNum::zero(e)],
                vec![CycloNum::zero(e), zeta(e, 3)],
            ],
        );
        let p = m.generalized_eigenprojection(&zeta(e, 1), 2).unwrap();
        assert_eq!(p, CycloMatrix::from_ints(e, &[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn test_eigenprojection_jordan_block() {
        let e = 4;
        let mut m = CycloMatrix::zero(e, 2, 2);
        m.set(0, 0, zeta(e, 1));
        m.set(0, 1, CycloNum::one(e));
        m.set(1, 1, zeta(e, 1));
        let p = m.generalized_eigenprojection(&zeta(e, 1), 2).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn test_eigenprojection_properties() {
        // Upper triangular with prescribed root-of-unity diagonal.
        let e = 5;
        let mut m = CycloMatrix::zero(e, 4, 4);
        let diag = [0i64, 0, 2, 3];
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, zeta(e, d));
        }
        m.set(0, 1, CycloNum::one(e));
        m.set(0, 2, zeta(e, 1));
        m.set(1, 3, CycloNum::from_int(e, 2));
        let mut sum = CycloMatrix::zero(e, 4, 4);
        for i in 0..e as i64 {
            let p = m.generalized_eigenprojection(&zeta(e, i), 4).unwrap();
            assert_eq!(p.mul(&p), p, "idempotent");
            assert_eq!(p.mul(&m), m.mul(&p), "commutes");
            sum = sum.add(&p);
        }
        assert!(sum.is_identity(), "projections resolve the identity");
    }

    #[test]
    fn test_spectrum_error() {
        let m = CycloMatrix::from_ints(4, &[&[2]]);
        assert!(matches!(
            m.generalized_eigenprojection(&zeta(4, 0), 1),
            Err(Error::SpectrumError(_))
        ));
    }

    #[test]
    fn test_span_solver() {
        let e = 3;
        let v1 = vec![CycloNum::one(e), CycloNum::zero(e), CycloNum::one(e)];
        let v2 = vec![CycloNum::zero(e), CycloNum::one(e), zeta(e, 1)];
        let solver = SpanSolver::new(e, 3, &[v1.clone(), v2.clone()]).unwrap();
        // 2*v1 - z*v2
        let z = zeta(e, 1);
        let two = CycloNum::from_int(e, 2);
        let target: Vec<CycloNum> = (0..3)
            .map(|j| two.mul(&v1[j]).sub(&z.mul(&v2[j])))
            .collect();
        let coeffs = solver.solve(&target).unwrap();
        assert_eq!(coeffs[0], two);
        assert_eq!(coeffs[1], z.neg());
        let outside = vec![CycloNum::one(e), CycloNum::zero(e), CycloNum::zero(e)];
        assert!(solver.solve(&outside).is_none());
        // dependent spanning set is rejected
        assert!(SpanSolver::new(e, 3, &[v1.clone(), v1]).is_err());
    }

    #[test]
    fn test_echelon() {
        let e = 4;
        let mut ech = Echelon::new(e, 3);
        assert!(ech.insert(&[CycloNum::one(e), CycloNum::one(e), CycloNum::zero(e)]));
        assert!(ech.insert(&[CycloNum::zero(e), CycloNum::one(e), CycloNum::one(e)]));
        assert!(!ech.insert(&[CycloNum::one(e), CycloNum::from_int(e, 2), CycloNum::one(e)]));
        assert_eq!(ech.rank(), 2);
        assert!(ech.contains(&[CycloNum::one(e), CycloNum::zero(e), CycloNum::one(e).neg()]));
    }

    proptest::proptest! {
        // rank + nullity = cols for random small matrices over e in {3,4,5}.
        #[test]
        fn prop_rank_nullity(
            eidx in 0usize..3,
            rows in 1usize..4,
            cols in 1usize..4,
            entries in proptest::collection::vec((-3i64..4, 0i64..5), 16),
        ) {
            let e = [3u32, 4, 5][eidx];
            let mut m = CycloMatrix::zero(e, rows, cols);
            let mut it = entries.iter();
            for i in 0..rows {
                for j in 0..cols {
                    let &(c, zp) = it.next().unwrap();
                    let val = CycloNum::from_int(e, c).mul(&zeta(e, zp));
                    m.set(i, j, val);
                }
            }
            let (r, ns) = m.rank_nullspace();
            proptest::prop_assert_eq!(r + ns.len(), cols);
            for v in &ns {
                for i in 0..rows {
                    let mut acc = CycloNum::zero(e);
                    for j in 0..cols {
                        acc = acc.add(&m.get(i, j).mul(&v[j]));
                    }
                    proptest::prop_assert!(acc.is_zero());
                }
            }
        }
    }
}
