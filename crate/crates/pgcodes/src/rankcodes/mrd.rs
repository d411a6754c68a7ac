use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::scan::{enumerate_span, scan_ranks};
use crate::algebra::{bits, Field, Matrix};
use crate::error::{Error, Result};
use crate::geometry::census;
use crate::geometry::Subspace;

/// A set of `n x n` matrices stored contiguously, one byte per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCode {
    n: usize,
    q: u32,
    entries: Vec<u8>,
    linear: bool,
    min_rank_distance: usize,
    tag: String,
}

impl MatrixCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.entries.len() / (self.n * self.n)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.linear
    }

    /// For a linear code, the minimum nonzero rank; for a subcode, the
    /// distance of the code it was extracted from (a lower bound).
    pub fn min_rank_distance(&self) -> usize {
        self.min_rank_distance
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    /// Row-major entries of member `i`.
    pub fn member_entries(&self, i: usize) -> &[u8] {
        let s = self.n * self.n;
        &self.entries[i * s..(i + 1) * s]
    }

    pub fn member(&self, i: usize) -> Matrix {
        let data = self.member_entries(i).iter().map(|&x| x as u32).collect();
        Matrix::from_vec(self.q, self.n, self.n, data).expect("stored member has valid shape")
    }

    pub fn iter(&self) -> impl Iterator<Item = Matrix> + '_ {
        (0..self.len()).map(|i| self.member(i))
    }

    fn rank_of(&self, i: usize, f: &Field) -> usize {
        if self.q == 2 && self.n <= 8 {
            let w = self.member_entries(i).iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
            bits::square_rank(w, self.n)
        } else {
            self.member(i).rank(f).unwrap_or(0)
        }
    }
}

/// Every matrix of the linear space `Y`, in lexicographic order.
pub fn mrd_code(y: &Subspace, n: usize, f: &Field, budget: u128) -> Result<MatrixCode> {
    if y.ambient() != n * n {
        return Err(Error::Shape("space does not consist of n x n matrices".into()));
    }
    let scan = scan_ranks(y, n, f, budget)?;
    let mut entries = Vec::new();
    enumerate_span(y, f, budget, |v| entries.extend(v.iter().map(|&x| x as u8)))?;
    Ok(MatrixCode {
        n,
        q: f.order(),
        entries,
        linear: true,
        min_rank_distance: scan.min_nonzero.unwrap_or(0),
        tag: "mrd".into(),
    })
}

/// Members of rank exactly `r`, checked against the constant-rank count.
pub fn crc_extract(code: &MatrixCode, r: usize, f: &Field) -> Result<MatrixCode> {
    let n = code.n;
    if r < 2 || r + 2 > n {
        return Err(Error::Parameter(format!("constant-rank subcode needs 2 <= r <= n-2, got r = {r}")));
    }
    let mut entries = Vec::new();
    for i in 0..code.len() {
        if code.rank_of(i, f) == r {
            entries.extend_from_slice(code.member_entries(i));
        }
    }
    let out = MatrixCode {
        n,
        q: code.q,
        entries,
        linear: false,
        min_rank_distance: code.min_rank_distance,
        tag: format!("crc{r}"),
    };
    let expected = census::crc_cardinality(n as u64, r as u64, code.q as u64)?;
    if BigUint::from(out.len()) != expected {
        return Err(Error::Cardinality {
            what: format!("rank-{r} subcode"),
            expected: format!("{expected}"),
            found: format!("{}", out.len()),
        });
    }
    Ok(out)
}
