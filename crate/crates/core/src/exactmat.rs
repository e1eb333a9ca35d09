//! Dense exact matrices and the elimination routines everything else is
//! built on.
//!
//! A linear map `k^n -> k^m` is stored as an `m x n` matrix acting on column
//! vectors, so the composite "first `a`, then `b`" is `b * a`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row-major entries. Panics if the length is wrong.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { field, rows: r, cols, data }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(move |&v| field.from_i64(v))
            })
            .collect();
        Matrix { field, rows: rows.len(), cols, data }
    }

    /// A single column vector.
    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Matrix { field, rows: n, cols: 1, data: entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix { field: self.field, rows: self.rows, cols, data }
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack_all(field: Field, rows: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, rows, 0), |acc, m| acc.hstack(m))
    }

    pub fn vstack_all(field: Field, cols: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, 0, cols), |acc, m| acc.vstack(m))
    }

    pub fn block_diag(field: Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols, self.cols);
        let data = rows.into_iter().flatten().collect();
        (Matrix { field: self.field, rows: self.rows, cols: self.cols, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Columns form a basis of the right null space.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, self.field.one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                if !v.is_zero() {
                    k.set(p, j, -v);
                }
            }
        }
        k
    }

    /// Solves `self * x = b`. Returns a particular solution together with a
    /// kernel basis of `self`, or `None` when the system is inconsistent.
    pub fn solve_linear(&self, b: &Matrix) -> Result<Option<(Matrix, Matrix)>> {
        match self.solve(b)? {
            Some(x) => Ok(Some((x, self.kernel_basis()))),
            None => Ok(None),
        }
    }

    /// Particular solution of `self * x = b` with free variables set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.rows });
        }
        let n = self.cols;
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                v.extend_from_slice(b.row(r));
                v
            })
            .collect();
        let pivots = rref_in_place(&mut rows, n, n + b.cols);
        // Inconsistent iff some row is zero on the left but not on the right.
        for row in rows.iter().skip(pivots.len()) {
            if row[n..].iter().any(|v| !v.is_zero()) {
                return Ok(None);
            }
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, rows[i][n + j].clone());
            }
        }
        Ok(Some(x))
    }

    /// A maximal linearly independent subset of the columns, in order.
    pub fn column_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let n = self.cols;
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                v.extend_from_slice(id.row(r));
                v
            })
            .collect();
        let pivots = rref_in_place(&mut rows, n, 2 * n);
        if pivots.len() < n {
            return None;
        }
        let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Some(Matrix { field: self.field, rows: n, cols: n, data })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                rows.swap(p, c);
                det = -&det;
            }
            det = &det * &rows[c][c];
            let inv = rows[c][c].inv();
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let f = &rows[r][c] * &inv;
                for k in c..n {
                    let t = &f * &rows[c][k];
                    rows[r][k] = &rows[r][k] - &t;
                }
            }
        }
        det
    }

    /// For a matrix of full column rank, a left inverse `l` with `l * self = 1`.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let (_, rows) = self.transpose().rref();
        if rows.len() != self.cols {
            return None;
        }
        let sq = self.select_rows(&rows).inverse()?;
        let mut l = Matrix::zeros(self.field, self.cols, self.rows);
        for (j, &r) in rows.iter().enumerate() {
            for i in 0..self.cols {
                l.set(i, r, sq.get(i, j).clone());
            }
        }
        Some(l)
    }

    /// Standard basis vectors completing the column space of `self` (assumed
    /// independent columns) to the whole ambient space.
    pub fn complement_columns(&self) -> Matrix {
        let m = self.rows;
        let ext = self.hstack(&Matrix::identity(self.field, m));
        let (_, pivots) = ext.rref();
        let extra: Vec<usize> = pivots.into_iter().filter(|&p| p >= self.cols).collect();
        ext.select_columns(&extra)
    }

    /// Whether every column of `other` lies in the column span of `self`.
    pub fn spans(&self, other: &Matrix) -> bool {
        if other.cols == 0 {
            return true;
        }
        self.rank() == self.hstack(other).rank()
    }

    /// Characteristic polynomial coefficients `c_0..c_n` of `det(x - self)`,
    /// lowest degree first, via Hessenberg reduction.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let f = self.field;
        let mut h: Vec<Vec<Scalar>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        // Reduce to upper Hessenberg form by similarity transformations.
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = h[m][m - 1].inv();
            for i in m + 1..n {
                if h[i][m - 1].is_zero() {
                    continue;
                }
                let u = &h[i][m - 1] * &inv;
                for j in 0..n {
                    let t = &u * &h[m][j];
                    h[i][j] = &h[i][j] - &t;
                }
                for row in h.iter_mut() {
                    let t = &u * &row[i];
                    row[m] = &row[m] + &t;
                }
            }
        }
        // p[k] = char poly of leading k x k block.
        let mut p: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for k in 1..=n {
            let mut next = vec![f.zero(); k + 1];
            // (x - h[k-1][k-1]) * p[k-1]
            for (d, c) in p[k - 1].iter().enumerate() {
                next[d + 1] = &next[d + 1] + c;
                let t = c * &h[k - 1][k - 1];
                next[d] = &next[d] - &t;
            }
            let mut prod = f.one();
            for i in (1..k).rev() {
                prod = &prod * &h[i][i - 1];
                if prod.is_zero() {
                    break;
                }
                let coef = &prod * &h[i - 1][k - 1];
                for (d, c) in p[i - 1].iter().enumerate() {
                    let t = &coef * c;
                    next[d] = &next[d] - &t;
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }
}

/// In-place Gauss-Jordan elimination on the first `pivot_cols` columns of
/// `rows` (each of length `width`). Pivots are normalized to one. Returns the
/// pivot columns.
fn rref_in_place(rows: &mut [Vec<Scalar>], pivot_cols: usize, width: usize) -> Vec<usize> {
    let n_rows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut nz: Vec<usize> = Vec::with_capacity(width);
    for c in 0..pivot_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        nz.clear();
        for j in c..width {
            if !rows[r][j].is_zero() {
                nz.push(j);
            }
        }
        if !inv.is_one() {
            for &j in &nz {
                rows[r][j] = &rows[r][j] * &inv;
            }
        }
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &nz {
                let t = &factor * &pivot_row[j];
                row[j] = &row[j] - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
