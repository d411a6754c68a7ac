use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::scan::{scan_ranks, DEFAULT_MEMBER_BUDGET};
use super::{gamma_spaces, transpose_space};
use crate::algebra::{Field, Matrix, SingerFrame};
use crate::error::{Error, Result};
use crate::geometry::Subspace;

/// Index ranges for the fixed spaces `X_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// `k <= a1 <= n` and `1 <= a2 <= k - 1`.
    Literal,
    /// `k <= a1 <= n` and `1 <= a2 <= k`.
    Extended,
}

/// Zero-based coordinates of `X_k = <U_{(a1-k)n+a1}, U_{(n-k)n+a2(n+1)}>`
/// in `PG(n^2 - 1, q^n)`.
pub fn fixed_space_coordinates(n: usize, k: usize, reading: Reading) -> Result<Vec<usize>> {
    if k < 2 || k > n {
        return Err(Error::Parameter(format!("X_k needs 2 <= k <= n, got k = {k}")));
    }
    let top = match reading {
        Reading::Literal => k - 1,
        Reading::Extended => k,
    };
    let mut out = Vec::new();
    let ones = (k..=n).map(|a1| (a1 - k) * n + a1);
    let twos = (1..=top).map(|a2| (n - k) * n + a2 * (n + 1));
    for m in ones.chain(twos) {
        if m == 0 || m > n * n {
            return Err(Error::Parameter(format!("coordinate U_{m} lies outside PG({}, q)", n * n - 1)));
        }
        out.push(m - 1);
    }
    Ok(out)
}

/// The space `Y` of `n x n` matrices over `GF(q)` of dimension `n^2 - n`,
/// meeting no rank-one matrix and containing every alternating matrix.
///
/// Tries the literal index reading first and the extended one second.
pub fn construct_y(n: usize, q: u32) -> Result<Subspace> {
    let base = Field::of_order(q)?;
    let frame = SingerFrame::new(n, &base)?;
    match construct_y_with(&frame, Reading::Literal, DEFAULT_MEMBER_BUDGET) {
        Ok(y) => Ok(y),
        Err(first) => construct_y_with(&frame, Reading::Extended, DEFAULT_MEMBER_BUDGET).map_err(|_| first),
    }
}

/// `Y` for a given frame and reading. The span of the fixed spaces is built in
/// the eigenbasis coordinates, moved by `E (x) E`, and reduced; the reduced
/// basis of a Frobenius-stable space has entries in `GF(q)`.
pub fn construct_y_with(frame: &SingerFrame, reading: Reading, budget: u128) -> Result<Subspace> {
    let n = frame.n();
    let base = frame.base();
    let ext = frame.extension();
    let mut coords = BTreeSet::new();
    for k in 2..=n {
        coords.extend(fixed_space_coordinates(n, k, reading)?);
    }
    let e = frame.eigenbasis();
    let mut rows = Vec::with_capacity(coords.len());
    for &m in &coords {
        let (i, j) = (m / n, m % n);
        let mut v = vec![0u32; n * n];
        for r in 0..n {
            for c in 0..n {
                v[r * n + c] = ext.mul(e.get(r, i), e.get(c, j));
            }
        }
        rows.push(v);
    }
    let reduced = Matrix::from_rows(ext.order(), &rows)?.rref(ext)?;
    let rational = reduced
        .matrix
        .restrict(frame.embedding())
        .ok_or_else(|| Error::Verification("transported space is not defined over GF(q)".into()))?;
    let y = Subspace::from_canonical(&rational)?;
    if y.dim() != n * n - n {
        return Err(Error::Verification(format!(
            "Y has dimension {} instead of {}",
            y.dim(),
            n * n - n
        )));
    }
    let scan = scan_ranks(&y, n, base, budget)?;
    if scan.min_nonzero.unwrap_or(0) < 2 {
        return Err(Error::Verification("Y contains a rank-one matrix".into()));
    }
    let (_, alt) = gamma_spaces(n, base)?;
    if !y.contains(&alt, base)? {
        return Err(Error::Verification("Y misses an alternating matrix".into()));
    }
    if transpose_space(&y, n, base)? != y {
        return Err(Error::Verification("Y is not closed under transposition".into()));
    }
    Ok(y)
}
