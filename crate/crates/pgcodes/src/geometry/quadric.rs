//! Quadratic forms on `GF(q)^N`, their polarity and their generators.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::census;
use super::subspace::Subspace;
use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};

/// A quadratic form `Q(v) = sum_{i <= j} c_ij v_i v_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    q: u32,
    dim: usize,
    coeffs: Matrix,
    bilinear: Matrix,
}

impl Quadric {
    /// Builds the form from an upper-triangular coefficient grid.
    pub fn new(coeffs: Matrix, f: &Field) -> Result<Self> {
        let n = coeffs.rows();
        if coeffs.cols() != n {
            return Err(Error::Shape("coefficient grid must be square".into()));
        }
        if (0..n).any(|i| (0..i).any(|j| coeffs.get(i, j) != 0)) {
            return Err(Error::Shape("coefficient grid must be upper triangular".into()));
        }
        let bilinear = coeffs.add(&coeffs.transpose(), f)?;
        Ok(Quadric {
            q: f.order(),
            dim: n,
            coeffs,
            bilinear,
        })
    }

    /// `Q(x, y) = x P y^T` on `GF(q)^{2n}` written as `(x | y)`.
    pub fn from_pairing(p: &Matrix, f: &Field) -> Result<Self> {
        let n = p.rows();
        if p.cols() != n {
            return Err(Error::Shape("pairing matrix must be square".into()));
        }
        let mut c = Matrix::zeros(f.order(), 2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                c.set(i, n + j, p.get(i, j));
            }
        }
        Self::new(c, f)
    }

    /// `X_1 X_{n+1} + ... + X_n X_{2n}`.
    pub fn split(n: usize, f: &Field) -> Result<Self> {
        Self::from_pairing(&Matrix::identity(f.order(), n), f)
    }

    /// `X_1 X_{2n} + X_2 X_{2n-1} + ... + X_n X_{n+1}`.
    pub fn hyperbolic(n: usize, f: &Field) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parameter("hyperbolic quadric needs n >= 1".into()));
        }
        let mut c = Matrix::zeros(f.order(), 2 * n, 2 * n);
        for i in 0..n {
            c.set(i, 2 * n - 1 - i, 1);
        }
        Self::new(c, f)
    }

    /// The Klein quadric `p12 p34 - p13 p24 + p14 p23` on Plücker coordinates
    /// ordered `(p12, p13, p14, p23, p24, p34)`.
    pub fn klein(f: &Field) -> Result<Self> {
        let mut c = Matrix::zeros(f.order(), 6, 6);
        c.set(0, 5, 1);
        c.set(1, 4, f.neg(1));
        c.set(2, 3, 1);
        Self::new(c, f)
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    /// Vector dimension of the ambient space.
    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> &Matrix {
        &self.coeffs
    }

    /// Gram matrix of `b(x, y) = Q(x + y) - Q(x) - Q(y)`.
    pub fn bilinear_matrix(&self) -> &Matrix {
        &self.bilinear
    }

    pub fn value(&self, v: &[u32], f: &Field) -> u32 {
        let mut acc = 0;
        for i in 0..self.dim {
            if v[i] == 0 {
                continue;
            }
            let mut row = 0;
            for j in i..self.dim {
                let c = self.coeffs.get(i, j);
                if c != 0 && v[j] != 0 {
                    row = f.add(row, f.mul(c, v[j]));
                }
            }
            acc = f.add(acc, f.mul(v[i], row));
        }
        acc
    }

    pub fn polar_value(&self, u: &[u32], v: &[u32], f: &Field) -> u32 {
        let mut acc = 0;
        for i in 0..self.dim {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.dim {
                let b = self.bilinear.get(i, j);
                if b != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(u[i], f.mul(b, v[j])));
                }
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self, f: &Field) -> Result<bool> {
        Ok(self.bilinear.rank(f)? == self.dim)
    }

    /// Whether `Q` vanishes identically on `U`.
    pub fn is_totally_singular(&self, u: &Subspace, f: &Field) -> Result<bool> {
        if u.ambient() != self.dim {
            return Err(Error::Shape("subspace and form live in different spaces".into()));
        }
        let rows: Vec<Vec<u32>> = (0..u.dim()).map(|i| u.row_vec(i)).collect();
        for (i, a) in rows.iter().enumerate() {
            if self.value(a, f) != 0 {
                return Ok(false);
            }
            for b in &rows[i + 1..] {
                if self.polar_value(a, b, f) != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `U^⊥` with respect to the polar form.
    pub fn polar(&self, u: &Subspace, f: &Field) -> Result<Subspace> {
        if !self.is_nondegenerate(f)? {
            return Err(Error::DegenerateForm);
        }
        if u.ambient() != self.dim {
            return Err(Error::Shape("subspace and form live in different spaces".into()));
        }
        if u.dim() == 0 {
            return Ok(Subspace::full(self.q, self.dim));
        }
        let m = u.basis().mul(&self.bilinear, f)?;
        Subspace::from_rows(&m.right_kernel(f)?, f)
    }

    /// Projective points of the zero set, each as its normalised vector.
    pub fn points(&self, f: &Field) -> Result<Vec<Vec<u32>>> {
        Ok(Subspace::full(self.q, self.dim)
            .points(f)?
            .into_iter()
            .filter(|v| self.value(v, f) == 0)
            .collect())
    }

    /// Every totally singular subspace of dimension `N/2`, each produced once
    /// by extending canonical bases one row at a time.
    pub fn maximal_singular_subspaces(&self, f: &Field) -> Result<Vec<Subspace>> {
        let target = self.dim / 2;
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        self.extend(&mut rows, target, f, &mut out)?;
        out.sort_unstable();
        Ok(out)
    }

    /// The generators of a hyperbolic quadric, checked against the census count.
    pub fn generators(&self, f: &Field) -> Result<Vec<Subspace>> {
        if self.dim % 2 != 0 {
            return Err(Error::Parameter("hyperbolic quadrics live in even dimension".into()));
        }
        if !self.is_nondegenerate(f)? {
            return Err(Error::DegenerateForm);
        }
        let gens = self.maximal_singular_subspaces(f)?;
        let expected = census::quadric_generators((self.dim / 2) as u64, self.q as u64)?;
        if BigUint::from(gens.len()) != expected {
            return Err(Error::Cardinality {
                what: "generators".into(),
                expected: format!("{expected}"),
                found: format!("{}", gens.len()),
            });
        }
        Ok(gens)
    }

    fn extend(&self, rows: &mut Vec<Vec<u32>>, target: usize, f: &Field, out: &mut Vec<Subspace>) -> Result<()> {
        if rows.len() == target {
            let m = Matrix::from_rows(self.q, rows)?;
            out.push(Subspace::from_canonical(&m)?);
            return Ok(());
        }
        let n = self.dim;
        let start = rows
            .last()
            .map_or(0, |r| r.iter().position(|&x| x != 0).unwrap() + 1);
        // b(e_j, w) for every row w.
        let bw: Vec<Vec<u32>> = rows
            .iter()
            .map(|w| (0..n).map(|j| self.polar_value(&unit(n, j), w, f)).collect())
            .collect();
        for c in start..n {
            if n - c < target - rows.len() {
                break;
            }
            if rows.iter().any(|r| r[c] != 0) {
                continue;
            }
            let free: Vec<usize> = (c + 1..n).collect();
            let sys: Vec<Vec<u32>> = bw.iter().map(|b| free.iter().map(|&j| b[j]).collect()).collect();
            let rhs: Vec<u32> = bw.iter().map(|b| f.neg(b[c])).collect();
            let Some((part, kernel)) = solve_affine(&sys, &rhs, free.len(), f) else {
                continue;
            };
            let count = (self.q as u64).pow(kernel.len() as u32);
            let mut coeff = vec![0u32; kernel.len()];
            for idx in 0..count {
                let mut t = idx;
                for slot in coeff.iter_mut().rev() {
                    *slot = (t % self.q as u64) as u32;
                    t /= self.q as u64;
                }
                let mut z = part.clone();
                for (k, &a) in kernel.iter().zip(&coeff) {
                    if a != 0 {
                        for (zi, &ki) in z.iter_mut().zip(k) {
                            *zi = f.add(*zi, f.mul(a, ki));
                        }
                    }
                }
                let mut p = vec![0u32; n];
                p[c] = 1;
                for (&j, &zj) in free.iter().zip(&z) {
                    p[j] = zj;
                }
                if self.value(&p, f) != 0 {
                    continue;
                }
                rows.push(p);
                self.extend(rows, target, f, out)?;
                rows.pop();
            }
        }
        Ok(())
    }

    /// System of a generator relative to `reference`: 1 when
    /// `dim(G ∩ ref) ≡ N/2 (mod 2)`, otherwise 2.
    pub fn classify_system(&self, g: &Subspace, reference: &Subspace, f: &Field) -> Result<u8> {
        let n = self.dim / 2;
        for s in [g, reference] {
            if s.dim() != n || !self.is_totally_singular(s, f)? {
                return Err(Error::NotGenerator);
            }
        }
        let m = g.meet_dim(reference, f)?;
        Ok(if (m + n) % 2 == 0 { 1 } else { 2 })
    }
}

fn unit(n: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[j] = 1;
    v
}

/// Solves `A z = rhs`; returns a particular solution and a kernel basis.
pub(crate) fn solve_affine(a: &[Vec<u32>], rhs: &[u32], vars: usize, f: &Field) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
    let rows = a.len();
    let cols = vars + 1;
    let mut data = Vec::with_capacity(rows * cols);
    for (r, &b) in a.iter().zip(rhs) {
        data.extend_from_slice(r);
        data.push(b);
    }
    let pivots = crate::algebra::matrix::rref_in_place(&mut data, rows, cols, f);
    if pivots.last() == Some(&vars) {
        return None;
    }
    let mut part = vec![0u32; vars];
    for (i, &p) in pivots.iter().enumerate() {
        part[p] = data[i * cols + vars];
    }
    let mut kernel = Vec::new();
    for fc in (0..vars).filter(|c| !pivots.contains(c)) {
        let mut k = vec![0u32; vars];
        k[fc] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            k[p] = f.neg(data[i * cols + fc]);
        }
        kernel.push(k);
    }
    Some((part, kernel))
}
