//! Field reduction: `GF(q^e)`-subspaces of `GF(q^e)^d` as `GF(q)`-subspaces of `GF(q)^{ed}`.

use alloc::vec;
use alloc::vec::Vec;

use super::subspace::Subspace;
use crate::algebra::{Embedding, Field, Matrix};
use crate::error::{Error, Result};

/// A `GF(q)`-linear isomorphism `GF(q^e)^d -> GF(q)^{ed}`.
///
/// The element `beta_j e_i` is sent to row `i*e + j` of `images`, where
/// `beta_0, ..., beta_{e-1}` is the declared `GF(q)`-basis of `GF(q^e)`.
#[derive(Clone, Debug)]
pub struct FieldReduction {
    embedding: Embedding,
    len: usize,
    basis: Vec<u32>,
    coords: Vec<u32>,
    images: Matrix,
    images_inv: Matrix,
}

impl FieldReduction {
    /// Reduction with the polynomial basis `1, w, ..., w^{e-1}` and the
    /// coordinate images `e_{i*e + j}`.
    pub fn polynomial(small: &Field, big: &Field, len: usize) -> Result<Self> {
        let embedding = Embedding::new(small, big)?;
        let e = (big.degree() / small.degree()) as usize;
        let basis: Vec<u32> = (0..e).map(|j| big.omega_pow(j as u64)).collect();
        let images = Matrix::identity(small.order(), len * e);
        Self::with_images(embedding, len, basis, images)
    }

    /// Reduction with an explicit basis and explicit images.
    pub fn with_images(embedding: Embedding, len: usize, basis: Vec<u32>, images: Matrix) -> Result<Self> {
        let small = embedding.small();
        let big = embedding.big();
        let e = (big.degree() / small.degree()) as usize;
        if basis.len() != e {
            return Err(Error::Shape("basis size differs from the extension degree".into()));
        }
        if images.rows() != len * e || images.cols() != len * e {
            return Err(Error::Shape("image matrix must be square of size d*e".into()));
        }
        let q = small.order() as usize;
        let mut coords = vec![u32::MAX; big.order() as usize * e];
        let mut c = vec![0u32; e];
        for idx in 0..q.pow(e as u32) {
            let mut t = idx;
            for slot in c.iter_mut() {
                *slot = (t % q) as u32;
                t /= q;
            }
            let z = c
                .iter()
                .zip(&basis)
                .fold(0, |acc, (&cj, &b)| big.add(acc, big.mul(embedding.embed(cj), b)));
            if coords[z as usize * e] != u32::MAX {
                return Err(Error::Parameter("declared basis is linearly dependent".into()));
            }
            coords[z as usize * e..(z as usize + 1) * e].copy_from_slice(&c);
        }
        let images_inv = images.inverse(small)?;
        Ok(FieldReduction {
            embedding,
            len,
            basis,
            coords,
            images,
            images_inv,
        })
    }

    pub fn small(&self) -> &Field {
        self.embedding.small()
    }

    pub fn big(&self) -> &Field {
        self.embedding.big()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// Extension degree `e`.
    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    /// Number of coordinates over the big field.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn images(&self) -> &Matrix {
        &self.images
    }

    /// Coordinates of `z` in the declared basis.
    pub fn coords(&self, z: u32) -> &[u32] {
        let e = self.degree();
        &self.coords[z as usize * e..(z as usize + 1) * e]
    }

    fn coefficient_vector(&self, v: &[u32]) -> Vec<u32> {
        v.iter().flat_map(|&z| self.coords(z).iter().copied()).collect()
    }

    /// Image of a vector of `GF(q^e)^d`.
    pub fn image_vector(&self, v: &[u32]) -> Vec<u32> {
        self.images.vec_mul(&self.coefficient_vector(v), self.small())
    }

    /// Inverse of [`Self::image_vector`].
    pub fn preimage_vector(&self, w: &[u32]) -> Vec<u32> {
        let c = self.images_inv.vec_mul(w, self.small());
        let e = self.degree();
        let big = self.big();
        c.chunks(e)
            .map(|chunk| {
                chunk
                    .iter()
                    .zip(&self.basis)
                    .fold(0, |acc, (&cj, &b)| big.add(acc, big.mul(self.embedding.embed(cj), b)))
            })
            .collect()
    }

    /// `phi(U)`, of dimension `e * dim U`.
    pub fn image(&self, u: &Subspace) -> Result<Subspace> {
        if u.field_order() != self.big().order() || u.ambient() != self.len {
            return Err(Error::Shape("subspace does not live in the reduced space".into()));
        }
        let big = self.big();
        let mut rows = Vec::with_capacity(u.dim() * self.degree());
        for i in 0..u.dim() {
            let v = u.row_vec(i);
            for &b in &self.basis {
                let scaled: Vec<u32> = v.iter().map(|&x| big.mul(x, b)).collect();
                rows.push(self.image_vector(&scaled));
            }
        }
        Subspace::span(&rows, self.len * self.degree(), self.small())
    }

    /// `phi(<v>)` for a nonzero vector.
    pub fn image_point(&self, v: &[u32]) -> Result<Subspace> {
        let m = Matrix::from_rows(self.big().order(), &[v.to_vec()])?;
        self.image(&Subspace::from_rows(&m, self.big())?)
    }

    /// Matrix of `w -> phi(lambda phi^{-1}(w))`.
    pub fn multiplication_matrix(&self, lambda: u32) -> Result<Matrix> {
        let e = self.degree();
        let small = self.small();
        let big = self.big();
        let mut block = Matrix::zeros(small.order(), self.len * e, self.len * e);
        for j in 0..e {
            let c = self.coords(big.mul(lambda, self.basis[j]));
            for i in 0..self.len {
                for (k, &ck) in c.iter().enumerate() {
                    block.set(i * e + j, i * e + k, ck);
                }
            }
        }
        self.images_inv.mul(&block, small)?.mul(&self.images, small)
    }
}
