//! Hermitian forms on `GF(q^2)^N`.

use alloc::vec::Vec;

use super::subspace::Subspace;
use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};

/// The variety `sum_ij x_i H_ij x_j^q = 0` of a Hermitian Gram matrix `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianVariety {
    q: u32,
    gram: Matrix,
}

impl HermitianVariety {
    /// `big` is `GF(q^2)`; `gram` must satisfy `H_ji = H_ij^q`.
    pub fn new(gram: Matrix, big: &Field, q: u32) -> Result<Self> {
        if big.order() != q * q || gram.field_order() != big.order() {
            return Err(Error::FieldMismatch {
                left: gram.field_order(),
                right: q * q,
            });
        }
        let n = gram.rows();
        if gram.cols() != n {
            return Err(Error::Shape("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if gram.get(j, i) != big.pow(gram.get(i, j), q as u64) {
                    return Err(Error::Parameter("Gram matrix is not Hermitian".into()));
                }
            }
        }
        Ok(HermitianVariety { q, gram })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn ambient(&self) -> usize {
        self.gram.rows()
    }

    /// `h(u, v) = sum u_i H_ij v_j^q`.
    pub fn sesquilinear(&self, u: &[u32], v: &[u32], big: &Field) -> u32 {
        let n = self.ambient();
        let mut acc = 0;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                let h = self.gram.get(i, j);
                if h != 0 && v[j] != 0 {
                    acc = big.add(acc, big.mul(u[i], big.mul(h, big.pow(v[j], self.q as u64))));
                }
            }
        }
        acc
    }

    pub fn value(&self, v: &[u32], big: &Field) -> u32 {
        self.sesquilinear(v, v, big)
    }

    pub fn is_nondegenerate(&self, big: &Field) -> Result<bool> {
        Ok(self.gram.rank(big)? == self.ambient())
    }

    pub fn is_totally_isotropic(&self, u: &Subspace, big: &Field) -> Result<bool> {
        let rows: Vec<Vec<u32>> = (0..u.dim()).map(|i| u.row_vec(i)).collect();
        Ok(rows
            .iter()
            .all(|a| rows.iter().all(|b| self.sesquilinear(a, b, big) == 0)))
    }

    /// Points of the variety as normalised vectors.
    pub fn points(&self, big: &Field) -> Result<Vec<Vec<u32>>> {
        Ok(Subspace::full(big.order(), self.ambient())
            .points(big)?
            .into_iter()
            .filter(|v| self.value(v, big) == 0)
            .collect())
    }
}
