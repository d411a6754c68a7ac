use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{bits, Field, Matrix};
use crate::error::{Error, Result};
use crate::geometry::Subspace;

/// Default cap on the number of members a matrix-space scan may visit.
pub const DEFAULT_MEMBER_BUDGET: u128 = 1 << 24;

fn member_count(space: &Subspace, budget: u128) -> Result<u128> {
    let count = (space.field_order() as u128)
        .checked_pow(space.dim() as u32)
        .unwrap_or(u128::MAX);
    if count > budget {
        return Err(Error::BudgetExceeded { needed: count, budget });
    }
    Ok(count)
}

/// Visits every vector of `space` in lexicographic order.
///
/// The basis is in reduced row-echelon form, so the order of coefficient
/// vectors coincides with the order of the vectors themselves.
pub fn enumerate_span(space: &Subspace, f: &Field, budget: u128, mut visit: impl FnMut(&[u32])) -> Result<()> {
    let count = member_count(space, budget)?;
    let k = space.dim();
    let q = f.order();
    let rows: Vec<Vec<u32>> = (0..k).map(|i| space.row_vec(i)).collect();
    let mut digits = vec![0u32; k];
    let mut v = vec![0u32; space.ambient()];
    visit(&v);
    for _ in 1..count {
        let mut pos = k;
        loop {
            pos -= 1;
            let old = digits[pos];
            let new = if old + 1 == q { 0 } else { old + 1 };
            digits[pos] = new;
            let delta = f.sub(new, old);
            for (slot, &r) in v.iter_mut().zip(&rows[pos]) {
                if r != 0 {
                    *slot = f.add(*slot, f.mul(delta, r));
                }
            }
            if new != 0 {
                break;
            }
        }
        visit(&v);
    }
    Ok(())
}

/// Rank distribution of all members of a space of `n x n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankScan {
    /// `counts[r]` members of rank `r`.
    pub counts: Vec<u128>,
    pub min_nonzero: Option<usize>,
    /// A member attaining the minimum nonzero rank.
    pub witness: Option<Vec<u32>>,
}

/// Exhaustive rank census of a matrix space.
pub fn scan_ranks(space: &Subspace, n: usize, f: &Field, budget: u128) -> Result<RankScan> {
    if space.ambient() != n * n {
        return Err(Error::Shape("space does not consist of n x n matrices".into()));
    }
    let mut counts = vec![0u128; n + 1];
    let mut best: Option<(usize, Vec<u32>)> = None;
    if f.order() == 2 && n <= 8 {
        let count = member_count(space, budget)?;
        let rows = space.packed().expect("GF(2) rows fit in a word");
        let mut v = 0u64;
        counts[0] += 1;
        for i in 1..count {
            v ^= rows[rows.len() - 1 - i.trailing_zeros() as usize];
            let r = bits::square_rank(v, n);
            counts[r] += 1;
            if best.as_ref().is_none_or(|(b, _)| r < *b) {
                best = Some((r, bits::unpack(v, n * n).collect()));
            }
        }
    } else {
        enumerate_span(space, f, budget, |v| {
            let r = Matrix::from_vec(f.order(), n, n, v.to_vec())
                .and_then(|m| m.rank(f))
                .unwrap_or(0);
            counts[r] += 1;
            if r > 0 && best.as_ref().is_none_or(|(b, _)| r < *b) {
                best = Some((r, v.to_vec()));
            }
        })?;
    }
    Ok(RankScan {
        counts,
        min_nonzero: best.as_ref().map(|b| b.0),
        witness: best.map(|b| b.1),
    })
}
