//! Dense exact matrix algebra over a [`FieldCtx`]: reduced echelon form,
//! kernels, Kronecker products, eigenspace dimensions. Everything in scope is
//! at most a few hundred rows, so dense row-major storage is used throughout.

use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldCtx, FieldElement};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LinalgError {
    #[error("matrices belong to different field contexts")]
    ContextMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
    ctx: Arc<FieldCtx>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}
impl Eq for Matrix {}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}^{}", self.rows, self.cols, self.ctx.p(), self.ctx.k())?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.ctx.element_string(self.at(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(ctx: &Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ctx.zero(); rows * cols], ctx: Arc::clone(ctx) }
    }

    pub fn identity(ctx: &Arc<FieldCtx>, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn from_fn(ctx: &Arc<FieldCtx>, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> Self {
        let mut m = Self::zeros(ctx, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Entries given row-major as integers, reduced mod p.
    pub fn from_ints(ctx: &Arc<FieldCtx>, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self::from_fn(ctx, rows, cols, |i, j| ctx.from_int(entries[i * cols + j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let one = self.ctx.one();
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let e = self.at(i, j);
                if i == j {
                    e == one
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.at(j, i))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = self.ctx.add(*a, *b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = self.ctx.sub(*a, *b);
        }
        out
    }

    pub fn scale(&self, c: FieldElement) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.ctx.mul(*a, c);
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let ctx = &self.ctx;
        let mut out = Matrix::zeros(ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j);
                    out.set(i, j, ctx.add(cur, ctx.mul(a, b)));
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        let ctx = &self.ctx;
        let mut out = vec![ctx.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = ctx.zero();
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc = ctx.add(acc, ctx.mul(a, v[j]));
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(&self.ctx, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Unique reduced row-echelon form with rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let ctx = self.ctx.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let mut pr = None;
            for i in r..m.rows {
                if !m.at(i, c).is_zero() {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != r {
                for j in 0..m.cols {
                    let tmp = m.at(r, j);
                    m.set(r, j, m.at(pr, j));
                    m.set(pr, j, tmp);
                }
            }
            let inv = ctx.inv(m.at(r, c));
            for j in c..m.cols {
                m.set(r, j, ctx.mul(m.at(r, j), inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.at(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = ctx.sub(m.at(i, j), ctx.mul(f, m.at(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical basis of the right null space: one vector per free column,
    /// with a 1 in the free coordinate, ordered by free column index.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let ctx = &self.ctx;
        let (r, _, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![ctx.zero(); self.cols];
            v[free] = ctx.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = ctx.neg(r.at(row, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let ctx = &self.ctx;
        let mut aug = Matrix::zeros(ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j));
            }
            aug.set(i, n + i, ctx.one());
        }
        let (r, rank, pivots) = aug.rref();
        if rank < n || pivots.iter().take(n).any(|&c| c >= n) {
            return None;
        }
        Some(Matrix::from_fn(ctx, n, n, |i, j| r.at(i, n + j)))
    }

    pub fn kron(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.ctx.id() != other.ctx.id() {
            return Err(LinalgError::ContextMismatch);
        }
        let ctx = &self.ctx;
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(ctx, ra * rb, ca * cb);
        for i1 in 0..ra {
            for j1 in 0..ca {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rb {
                    for j2 in 0..cb {
                        let b = other.at(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * rb + i2, j1 * cb + j2, ctx.mul(a, b));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `dim ker(A - lambda I)`.
    pub fn eigenspace_dim(&self, lambda: FieldElement) -> usize {
        assert_eq!(self.rows, self.cols);
        let shifted = self.sub(&Matrix::identity(&self.ctx, self.rows).scale(lambda));
        self.cols - shifted.rank()
    }

    /// Byte key of the entries (packed field values, row-major); used for
    /// canonical orderings.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.data.len() * 3);
        for &e in &self.data {
            let v = self.ctx.pack(e);
            out.extend_from_slice(&(v as u32).to_be_bytes()[1..]);
        }
        out
    }

    /// Re-base all entries into `dst` via the canonical tower embedding.
    pub fn embed_into(&self, dst: &Arc<FieldCtx>) -> Result<Matrix, crate::field::FieldError> {
        let mut out = Matrix::zeros(dst, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, crate::field::embed(&self.ctx, dst, self.at(i, j))?);
            }
        }
        Ok(out)
    }
}

/// Stack matrices vertically.
pub fn vstack(mats: &[Matrix]) -> Matrix {
    assert!(!mats.is_empty());
    let cols = mats[0].cols;
    let rows: usize = mats.iter().map(|m| m.rows).sum();
    let ctx = mats[0].ctx.clone();
    let mut out = Matrix::zeros(&ctx, rows, cols);
    let mut r0 = 0;
    for m in mats {
        assert_eq!(m.cols, cols);
        for i in 0..m.rows {
            for j in 0..cols {
                out.set(r0 + i, j, m.at(i, j));
            }
        }
        r0 += m.rows;
    }
    out
}

/// Matrix whose rows are the given vectors.
pub fn from_rows(ctx: &Arc<FieldCtx>, rows: &[Vec<FieldElement>]) -> Matrix {
    assert!(!rows.is_empty());
    let cols = rows[0].len();
    Matrix::from_fn(ctx, rows.len(), cols, |i, j| rows[i][j])
}
