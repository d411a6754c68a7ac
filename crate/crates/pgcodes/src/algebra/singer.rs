//! Singer cycles and their diagonalisation over `GF(q^n)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::field::{Embedding, Field};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Minimal polynomial over `GF(q)` of `x` in `GF(q^n)`, monic, constant term
/// first. `x` is given as an element of the big field of the embedding.
pub fn minimal_polynomial(x: u32, e: &Embedding) -> Result<Vec<u32>> {
    let big = e.big();
    let d = e.small().degree();
    let mut conj = vec![x];
    loop {
        let next = big.frobenius(*conj.last().unwrap(), d);
        if next == x {
            break;
        }
        conj.push(next);
    }
    let mut poly = vec![1u32];
    for &c in &conj {
        let mut next = vec![0u32; poly.len() + 1];
        for (i, &a) in poly.iter().enumerate() {
            next[i + 1] = big.add(next[i + 1], a);
            next[i] = big.sub(next[i], big.mul(a, c));
        }
        poly = next;
    }
    poly.iter()
        .map(|&a| {
            e.restrict(a)
                .ok_or_else(|| Error::Verification("minimal polynomial left the subfield".into()))
        })
        .collect()
}

/// Companion matrix of a monic polynomial, acting on column vectors:
/// `C e_j = e_{j+1}` and `C e_{n-1} = -(a_0, ..., a_{n-1})`.
pub fn companion(poly: &[u32], f: &Field) -> Matrix {
    let n = poly.len() - 1;
    let mut c = Matrix::zeros(f.order(), n, n);
    for j in 0..n - 1 {
        c.set(j + 1, j, 1);
    }
    for i in 0..n {
        c.set(i, n - 1, f.neg(poly[i]));
    }
    c
}

/// The Singer frame: `E^{-1} C E = D` with `D = diag(w, w^q, ..., w^{q^{n-1}})`.
#[derive(Clone, Debug)]
pub struct SingerFrame {
    n: usize,
    base: Field,
    ext: Field,
    embedding: Embedding,
    companion: Matrix,
    diagonal: Matrix,
    eigenbasis: Matrix,
    eigenbasis_inv: Matrix,
}

impl SingerFrame {
    /// Builds the frame for `PG(n-1, q)` from the Conway fields `GF(q)` and `GF(q^n)`.
    pub fn new(n: usize, base: &Field) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter("Singer frame needs n >= 2".into()));
        }
        let p = base.characteristic();
        let ext = Field::new(p, base.degree() * n as u32)?;
        let embedding = Embedding::new(base, &ext)?;
        let omega = ext.omega();
        let poly = minimal_polynomial(omega, &embedding)?;
        if poly.len() != n + 1 {
            return Err(Error::Verification(format!(
                "primitive element has degree {} over GF({})",
                poly.len() - 1,
                base.order()
            )));
        }
        let companion = companion(&poly, base);
        let c_big = companion.embed(&embedding)?;
        let d = base.degree();
        let mut diagonal = Matrix::zeros(ext.order(), n, n);
        let mut eigenbasis = Matrix::zeros(ext.order(), n, n);
        let mut lambda = omega;
        for i in 0..n {
            diagonal.set(i, i, lambda);
            let mut shifted = c_big.clone();
            for k in 0..n {
                shifted.set(k, k, ext.sub(shifted.get(k, k), lambda));
            }
            let kernel = shifted.right_kernel(&ext)?;
            if kernel.rows() != 1 {
                return Err(Error::Verification(format!(
                    "eigenspace of dimension {}",
                    kernel.rows()
                )));
            }
            let v = kernel.row(0);
            let lead = v.iter().copied().find(|&x| x != 0).unwrap();
            let scale = ext.inv(lead)?;
            for k in 0..n {
                eigenbasis.set(k, i, ext.mul(v[k], scale));
            }
            lambda = ext.frobenius(lambda, d);
        }
        let eigenbasis_inv = eigenbasis.inverse(&ext)?;
        let frame = SingerFrame {
            n,
            base: base.clone(),
            ext,
            embedding,
            companion,
            diagonal,
            eigenbasis,
            eigenbasis_inv,
        };
        let check = frame
            .eigenbasis_inv
            .mul(&c_big, &frame.ext)?
            .mul(&frame.eigenbasis, &frame.ext)?;
        if check != frame.diagonal {
            return Err(Error::Verification("E^-1 C E is not diagonal".into()));
        }
        Ok(frame)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// The extension field `GF(q^n)`.
    pub fn extension(&self) -> &Field {
        &self.ext
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// The Singer companion matrix over `GF(q)`.
    pub fn companion(&self) -> &Matrix {
        &self.companion
    }

    pub fn diagonal(&self) -> &Matrix {
        &self.diagonal
    }

    /// Columns are eigenvectors of the companion matrix.
    pub fn eigenbasis(&self) -> &Matrix {
        &self.eigenbasis
    }

    pub fn eigenbasis_inverse(&self) -> &Matrix {
        &self.eigenbasis_inv
    }

    /// The primitive element whose conjugates form the diagonal.
    pub fn primitive_element(&self) -> u32 {
        self.ext.omega()
    }

    /// `C^{(q^n - 1)/(q^e - 1)}`, which generates the copy of `GF(q^e)` inside
    /// the centraliser of the Singer cycle; its minimal polynomial is that of a
    /// primitive element of `GF(q^e)` over `GF(q)`.
    pub fn subfield_generator(&self, e: usize) -> Result<Matrix> {
        if e == 0 || self.n % e != 0 {
            return Err(Error::Parameter(format!("{e} does not divide {}", self.n)));
        }
        let q = self.base.order() as u64;
        let k = (q.pow(self.n as u32) - 1) / (q.pow(e as u32) - 1);
        self.companion.pow(k, &self.base)
    }

    /// Multiplicative order of the companion matrix.
    pub fn order(&self) -> Result<u64> {
        let id = Matrix::identity(self.base.order(), self.n);
        let top = (self.base.order() as u64).pow(self.n as u32) - 1;
        let mut order = top;
        for pf in prime_factors(top) {
            while order % pf == 0 && self.companion.pow(order / pf, &self.base)? == id {
                order /= pf;
            }
        }
        Ok(order)
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
