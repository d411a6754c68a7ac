//! Dense matrices over a finite field.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::field::{Embedding, Field};
use crate::error::{Error, Result};

/// A dense row-major matrix whose entries are element indices of `GF(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    q: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of a reduced row-echelon computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The reduced matrix with zero rows removed.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn check_field(m: &Matrix, f: &Field) -> Result<()> {
    if m.q != f.order() {
        return Err(Error::FieldMismatch {
            left: m.q,
            right: f.order(),
        });
    }
    Ok(())
}

impl Matrix {
    pub fn zeros(q: u32, rows: usize, cols: usize) -> Self {
        Matrix {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(q: u32, n: usize) -> Self {
        let mut m = Self::zeros(q, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(q: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        if data.iter().any(|&x| x >= q) {
            return Err(Error::Parameter(format!("entry outside GF({q})")));
        }
        Ok(Matrix { q, rows, cols, data })
    }

    pub fn from_rows(q: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_vec(q, rows.len(), cols, rows.concat())
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.q, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        check_field(self, f)?;
        check_field(other, f)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("addition of differently shaped matrices".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn sub(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        let neg = other.scale(f.neg(1), f)?;
        self.add(&neg, f)
    }

    pub fn scale(&self, c: u32, f: &Field) -> Result<Matrix> {
        check_field(self, f)?;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        check_field(self, f)?;
        check_field(other, f)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.q, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let idx = i * out.cols + j;
                        out.data[idx] = f.add(out.data[idx], f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32], f: &Field) -> Vec<u32> {
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let b = self.get(k, j);
                if b != 0 {
                    *slot = f.add(*slot, f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u64, f: &Field) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Shape("power of a non-square matrix".into()));
        }
        let mut result = Matrix::identity(self.q, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, f)?;
            }
            base = base.mul(&base, f)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Kronecker product with row-major block layout: entry
    /// `(i*c + k, j*d + l)` equals `a_ij * b_kl`.
    pub fn kronecker(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        check_field(self, f)?;
        check_field(other, f)?;
        let (r, c) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.q, self.rows * r, self.cols * c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r {
                    for l in 0..c {
                        out.set(i * r + k, j * c + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.q != other.q {
            return Err(Error::FieldMismatch {
                left: self.q,
                right: other.q,
            });
        }
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Shape("vstack column mismatch".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            q: self.q,
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Shape("hstack row mismatch".into()));
        }
        let mut out = Matrix::zeros(self.q, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(self.q, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row-echelon form; zero rows are dropped from the result.
    pub fn rref(&self, f: &Field) -> Result<Rref> {
        check_field(self, f)?;
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m.data, m.rows, m.cols, f);
        let rank = pivots.len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        Ok(Rref {
            matrix: m,
            rank,
            pivots,
        })
    }

    pub fn rank(&self, f: &Field) -> Result<usize> {
        check_field(self, f)?;
        let mut data = self.data.clone();
        Ok(rref_in_place(&mut data, self.rows, self.cols, f).len())
    }

    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.q, n))?;
        let r = aug.rref(f)?;
        if r.rank < n || r.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(r.matrix.submatrix(0..n, n..2 * n))
    }

    /// Basis (as rows) of the right kernel `{v : M v = 0}`.
    pub fn right_kernel(&self, f: &Field) -> Result<Matrix> {
        let r = self.rref(f)?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.q, free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.set(row, fc, 1);
            for (i, &pc) in r.pivots.iter().enumerate() {
                out.set(row, pc, f.neg(r.matrix.get(i, fc)));
            }
        }
        Ok(out)
    }

    /// Basis (as rows) of the left kernel `{v : v M = 0}`.
    pub fn left_kernel(&self, f: &Field) -> Result<Matrix> {
        self.transpose().right_kernel(f)
    }

    /// Applies a subfield embedding entrywise.
    pub fn embed(&self, e: &Embedding) -> Result<Matrix> {
        if self.q != e.small().order() {
            return Err(Error::FieldMismatch {
                left: self.q,
                right: e.small().order(),
            });
        }
        Ok(Matrix {
            q: e.big().order(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| e.embed(a)).collect(),
        })
    }

    /// Pulls every entry back into the subfield, if possible.
    pub fn restrict(&self, e: &Embedding) -> Option<Matrix> {
        let data: Option<Vec<u32>> = self.data.iter().map(|&a| e.restrict(a)).collect();
        Some(Matrix {
            q: e.small().order(),
            rows: self.rows,
            cols: self.cols,
            data: data?,
        })
    }
}

/// In-place Gauss-Jordan elimination on a flat row-major buffer. Returns the
/// pivot columns; the first `pivots.len()` rows hold the reduced basis.
pub fn rref_in_place(data: &mut [u32], rows: usize, cols: usize, f: &Field) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(data[r * cols + c]).expect("pivot is nonzero");
        if inv != 1 {
            for j in c..cols {
                data[r * cols + j] = f.mul(data[r * cols + j], inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * cols + c];
            if factor == 0 {
                continue;
            }
            let nf = f.neg(factor);
            for j in c..cols {
                let v = data[r * cols + j];
                if v != 0 {
                    data[i * cols + j] = f.add(data[i * cols + j], f.mul(nf, v));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
