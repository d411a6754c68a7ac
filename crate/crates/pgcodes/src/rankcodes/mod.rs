//! Matrix spaces: rank tests, the symmetric and alternating spaces, the
//! Singer construction of a rank-distance-2 space, MRD and constant-rank
//! codes, and the two lifting maps.
//!
//! An `n x n` matrix `A` is identified with the point of `PG(n^2 - 1, q)`
//! whose coordinate `i*n + j` is `a_ij` (zero-based, row-major).

mod lift;
mod mrd;
mod scan;
mod singer_y;

pub use lift::{lift_left, lift_right, matrix_of_left_lift, matrix_of_right_lift};
pub use mrd::{crc_extract, mrd_code, MatrixCode};
pub use scan::{enumerate_span, scan_ranks, RankScan, DEFAULT_MEMBER_BUDGET};
pub use singer_y::{construct_y, construct_y_with, fixed_space_coordinates, Reading};

use alloc::vec::Vec;

use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};
use crate::geometry::Subspace;

/// The matrix of a point of `PG(n^2 - 1, q)`.
pub fn matrix_of_point(v: &[u32], n: usize, q: u32) -> Result<Matrix> {
    if v.len() != n * n {
        return Err(Error::Shape("point length is not n^2".into()));
    }
    Matrix::from_vec(q, n, n, v.to_vec())
}

/// Coordinates of a square matrix as a point of `PG(n^2 - 1, q)`.
pub fn point_of_matrix(a: &Matrix) -> Vec<u32> {
    a.data().to_vec()
}

/// Rank of the matrix of a nonzero point; 1 exactly on the Segre variety.
pub fn segre_rank(v: &[u32], n: usize, f: &Field) -> Result<usize> {
    if v.iter().all(|&x| x == 0) {
        return Err(Error::Parameter("the zero vector is not a point".into()));
    }
    matrix_of_point(v, n, f.order())?.rank(f)
}

/// The symmetric space `Gamma` and the alternating space `Gamma'` (zero
/// diagonal, `a_ji = -a_ij`) inside `GF(q)^{n^2}`.
pub fn gamma_spaces(n: usize, f: &Field) -> Result<(Subspace, Subspace)> {
    if n < 2 {
        return Err(Error::Parameter("matrix spaces need n >= 2".into()));
    }
    let mut sym = Vec::new();
    let mut alt = Vec::new();
    for i in 0..n {
        let mut v = alloc::vec![0u32; n * n];
        v[i * n + i] = 1;
        sym.push(v);
        for j in i + 1..n {
            let mut s = alloc::vec![0u32; n * n];
            s[i * n + j] = 1;
            s[j * n + i] = 1;
            sym.push(s);
            let mut a = alloc::vec![0u32; n * n];
            a[i * n + j] = 1;
            a[j * n + i] = f.neg(1);
            alt.push(a);
        }
    }
    Ok((Subspace::span(&sym, n * n, f)?, Subspace::span(&alt, n * n, f)?))
}

/// Image of a matrix subspace under transposition.
pub fn transpose_space(y: &Subspace, n: usize, f: &Field) -> Result<Subspace> {
    let rows: Vec<Vec<u32>> = (0..y.dim())
        .map(|i| {
            let r = y.row_vec(i);
            (0..n * n).map(|k| r[(k % n) * n + k / n]).collect()
        })
        .collect();
    Subspace::span(&rows, n * n, f)
}
