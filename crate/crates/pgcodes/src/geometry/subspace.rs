//! Subspaces of `GF(q)^N` in canonical reduced row-echelon form.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::census::gaussian_binomial;
use crate::algebra::{bits, matrix::rref_in_place, Field, Matrix};
use crate::error::{Error, Result};

/// Default cap on the number of subspaces an enumeration may produce.
pub const DEFAULT_SUBSPACE_BUDGET: u128 = 10_000_000;

/// A vector subspace of `GF(q)^N`, stored as its reduced row-echelon basis.
///
/// Equality, hashing and ordering all come from the canonical matrix, so the
/// derived `Ord` is the lexicographic order of canonical matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    q: u32,
    ambient: usize,
    dim: usize,
    data: Box<[u8]>,
}

fn same_space(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.q != b.q {
        return Err(Error::FieldMismatch {
            left: a.q,
            right: b.q,
        });
    }
    if a.ambient != b.ambient {
        return Err(Error::Shape(format!(
            "ambient dimensions {} and {}",
            a.ambient, b.ambient
        )));
    }
    Ok(())
}

fn check_field(q: u32, f: &Field) -> Result<()> {
    if q != f.order() {
        return Err(Error::FieldMismatch {
            left: q,
            right: f.order(),
        });
    }
    Ok(())
}

/// Whether a flat `k x n` buffer is in reduced row-echelon form of full rank.
fn is_rref(data: &[u32], k: usize, n: usize) -> bool {
    let mut last: Option<usize> = None;
    let mut pivots = Vec::with_capacity(k);
    for i in 0..k {
        let row = &data[i * n..(i + 1) * n];
        let Some(p) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        if row[p] != 1 || last.is_some_and(|l| p <= l) {
            return false;
        }
        last = Some(p);
        pivots.push(p);
    }
    pivots
        .iter()
        .enumerate()
        .all(|(i, &p)| (0..k).all(|r| r == i || data[r * n + p] == 0))
}

impl Subspace {
    fn from_flat(q: u32, ambient: usize, dim: usize, data: &[u32]) -> Self {
        Subspace {
            q,
            ambient,
            dim,
            data: data[..dim * ambient].iter().map(|&x| x as u8).collect(),
        }
    }

    /// The zero subspace.
    pub fn zero(q: u32, ambient: usize) -> Self {
        Subspace {
            q,
            ambient,
            dim: 0,
            data: Box::new([]),
        }
    }

    /// The whole space `GF(q)^N`.
    pub fn full(q: u32, ambient: usize) -> Self {
        Self::from_flat(q, ambient, ambient, Matrix::identity(q, ambient).data())
    }

    /// The span of the rows of `rows`.
    pub fn from_rows(rows: &Matrix, f: &Field) -> Result<Self> {
        check_field(rows.field_order(), f)?;
        if f.order() > 256 {
            return Err(Error::Parameter("subspaces are stored for q <= 256".into()));
        }
        let (k, n) = (rows.rows(), rows.cols());
        if f.order() == 2 && n <= 64 {
            let packed: Vec<u64> = (0..k).map(|i| bits::pack(rows.row(i))).collect();
            return Ok(Self::from_packed(&packed, n));
        }
        let mut data = rows.data().to_vec();
        let pivots = rref_in_place(&mut data, k, n, f);
        Ok(Self::from_flat(f.order(), n, pivots.len(), &data))
    }

    /// The span of a list of vectors of length `ambient`.
    pub fn span(vectors: &[Vec<u32>], ambient: usize, f: &Field) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(f.order(), ambient));
        }
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::Shape("vector length differs from the ambient dimension".into()));
        }
        Self::from_rows(&Matrix::from_rows(f.order(), vectors)?, f)
    }

    /// Accepts a basis that is already canonical; anything else is rejected.
    pub fn from_canonical(rows: &Matrix) -> Result<Self> {
        if rows.field_order() > 256 {
            return Err(Error::Parameter("subspaces are stored for q <= 256".into()));
        }
        if !is_rref(rows.data(), rows.rows(), rows.cols()) {
            return Err(Error::Shape("basis is not in reduced row-echelon form".into()));
        }
        Ok(Self::from_flat(rows.field_order(), rows.cols(), rows.rows(), rows.data()))
    }

    /// Span of packed GF(2) rows.
    pub fn from_packed(rows: &[u64], ambient: usize) -> Self {
        let reduced = bits::rref(rows);
        let mut data = Vec::with_capacity(reduced.len() * ambient);
        for &r in &reduced {
            data.extend(bits::unpack(r, ambient).map(|b| b as u8));
        }
        Subspace {
            q: 2,
            ambient,
            dim: reduced.len(),
            data: data.into_boxed_slice(),
        }
    }

    /// Packed rows for GF(2) subspaces of length at most 64.
    pub fn packed(&self) -> Option<Vec<u64>> {
        (self.q == 2 && self.ambient <= 64).then(|| {
            (0..self.dim)
                .map(|i| self.row(i).iter().fold(0u64, |acc, &b| (acc << 1) | b as u64))
                .collect()
        })
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    /// Vector dimension of the ambient space.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Vector dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.ambient + j] as u32
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.ambient..(i + 1) * self.ambient]
    }

    pub fn row_vec(&self, i: usize) -> Vec<u32> {
        self.row(i).iter().map(|&x| x as u32).collect()
    }

    /// Raw canonical entries, row-major.
    pub fn as_bytes(&self) -> &[u8] {
        &self.data
    }

    /// The canonical basis as a matrix.
    pub fn basis(&self) -> Matrix {
        let data = self.data.iter().map(|&x| x as u32).collect();
        Matrix::from_vec(self.q, self.dim, self.ambient, data).expect("canonical basis has valid shape")
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim)
            .map(|i| self.row(i).iter().position(|&x| x != 0).unwrap())
            .collect()
    }

    /// Whether `v` lies in the subspace.
    pub fn contains_vector(&self, v: &[u32], f: &Field) -> Result<bool> {
        check_field(self.q, f)?;
        if v.len() != self.ambient {
            return Err(Error::Shape("vector length differs from the ambient dimension".into()));
        }
        let mut r = v.to_vec();
        for (i, p) in self.pivots().into_iter().enumerate() {
            let c = r[p];
            if c == 0 {
                continue;
            }
            let nc = f.neg(c);
            for (j, slot) in r.iter_mut().enumerate() {
                let b = self.entry(i, j);
                if b != 0 {
                    *slot = f.add(*slot, f.mul(nc, b));
                }
            }
        }
        Ok(r.iter().all(|&x| x == 0))
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace, f: &Field) -> Result<bool> {
        same_space(self, other)?;
        for i in 0..other.dim {
            if !self.contains_vector(&other.row_vec(i), f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn stacked_rank(&self, other: &Subspace, f: &Field) -> Result<usize> {
        same_space(self, other)?;
        check_field(self.q, f)?;
        if let (Some(a), Some(b)) = (self.packed(), other.packed()) {
            return Ok(bits::joint_rank(&a, &b));
        }
        let n = self.ambient;
        let mut data: Vec<u32> = self.data.iter().chain(other.data.iter()).map(|&x| x as u32).collect();
        Ok(rref_in_place(&mut data, self.dim + other.dim, n, f).len())
    }

    /// `U + V`.
    pub fn join(&self, other: &Subspace, f: &Field) -> Result<Subspace> {
        same_space(self, other)?;
        check_field(self.q, f)?;
        let rows = self.basis().vstack(&other.basis())?;
        if rows.rows() == 0 {
            return Ok(Self::zero(self.q, self.ambient));
        }
        Self::from_rows(&rows, f)
    }

    /// `U ∩ V`, computed from the kernel of the stacked bases.
    pub fn meet(&self, other: &Subspace, f: &Field) -> Result<Subspace> {
        same_space(self, other)?;
        check_field(self.q, f)?;
        let n = self.ambient;
        let (a, b) = (self.dim, other.dim);
        if a == 0 || b == 0 {
            return Ok(Self::zero(self.q, n));
        }
        // Rows (u | u) for u in U and (v | 0) for v in V; after reduction the
        // rows with zero left half carry U ∩ V on the right.
        let mut data = vec![0u32; (a + b) * 2 * n];
        for i in 0..a {
            for j in 0..n {
                let x = self.entry(i, j);
                data[i * 2 * n + j] = x;
                data[i * 2 * n + n + j] = x;
            }
        }
        for i in 0..b {
            for j in 0..n {
                data[(a + i) * 2 * n + j] = other.entry(i, j);
            }
        }
        let pivots = rref_in_place(&mut data, a + b, 2 * n, f);
        let rows: Vec<Vec<u32>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| data[i * 2 * n + n..(i + 1) * 2 * n].to_vec())
            .collect();
        Self::span(&rows, n, f)
    }

    /// `dim(U ∩ V)`.
    pub fn meet_dim(&self, other: &Subspace, f: &Field) -> Result<usize> {
        Ok(self.dim + other.dim - self.stacked_rank(other, f)?)
    }

    /// Subspace distance `dim(U + V) - dim(U ∩ V) = 2 rank[U; V] - dim U - dim V`.
    pub fn distance(&self, other: &Subspace, f: &Field) -> Result<usize> {
        Ok(2 * self.stacked_rank(other, f)? - self.dim - other.dim)
    }

    /// Image under `v -> v M`.
    pub fn transform(&self, m: &Matrix, f: &Field) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::Shape("transformation size differs from the ambient dimension".into()));
        }
        if self.dim == 0 {
            return Ok(Self::zero(self.q, m.cols()));
        }
        Self::from_rows(&self.basis().mul(m, f)?, f)
    }

    /// Every nonzero vector with first nonzero coordinate 1, i.e. the points
    /// of the projective subspace, as coordinate vectors.
    pub fn points(&self, f: &Field) -> Result<Vec<Vec<u32>>> {
        check_field(self.q, f)?;
        let q = self.q as usize;
        let mut out = Vec::new();
        // Coefficient vectors whose first nonzero entry is 1 give each point once.
        let mut coeff = vec![0u32; self.dim];
        for lead in 0..self.dim {
            let free = self.dim - lead - 1;
            let count = q.pow(free as u32);
            for idx in 0..count {
                coeff.iter_mut().for_each(|c| *c = 0);
                coeff[lead] = 1;
                let mut t = idx;
                for slot in coeff[lead + 1..].iter_mut().rev() {
                    *slot = (t % q) as u32;
                    t /= q;
                }
                let mut v = vec![0u32; self.ambient];
                for (i, &c) in coeff.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for (j, slot) in v.iter_mut().enumerate() {
                        let b = self.entry(i, j);
                        if b != 0 {
                            *slot = f.add(*slot, f.mul(c, b));
                        }
                    }
                }
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Coordinate subspace spanned by the unit vectors `e_i`, `i` in `coords`.
    pub fn coordinate(q: u32, ambient: usize, coords: core::ops::Range<usize>) -> Self {
        let dim = coords.len();
        let mut data = vec![0u8; dim * ambient];
        for (i, c) in coords.enumerate() {
            data[i * ambient + c] = 1;
        }
        Subspace {
            q,
            ambient,
            dim,
            data: data.into_boxed_slice(),
        }
    }
}

/// Every `k`-dimensional subspace of `GF(q)^N`, in lexicographic order of
/// canonical matrices. Fails when the count exceeds `budget`.
pub fn enumerate_subspaces(ambient: usize, q: u32, k: usize, budget: u128) -> Result<Vec<Subspace>> {
    let count = gaussian_binomial(ambient as u64, k as u64, q as u64);
    if count > BigUint::from(budget) {
        let needed = u128::try_from(&count).unwrap_or(u128::MAX);
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if q > 256 {
        return Err(Error::Parameter("subspaces are stored for q <= 256".into()));
    }
    if k > ambient {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(u128::try_from(&count).unwrap_or(0) as usize);
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let p = pivots[i];
                let piv = &pivots;
                (p + 1..ambient)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut base = vec![0u8; k * ambient];
        for (i, &p) in pivots.iter().enumerate() {
            base[i * ambient + p] = 1;
        }
        let mut digits = vec![0u8; free.len()];
        loop {
            let mut data = base.clone();
            for (&(i, c), &d) in free.iter().zip(&digits) {
                data[i * ambient + c] = d;
            }
            out.push(Subspace {
                q,
                ambient,
                dim: k,
                data: data.into_boxed_slice(),
            });
            let mut pos = digits.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if (digits[pos] as u32) + 1 < q {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
        // Next pivot combination.
        let mut i = k;
        loop {
            if i == 0 {
                out.sort_unstable();
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < ambient - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}
