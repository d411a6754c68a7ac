//! Spreads and partial spreads.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::census;
use super::reduction::FieldReduction;
use super::subspace::Subspace;
use crate::algebra::Field;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpreadKind {
    DesarguesianLine,
    PartialLine,
    Generic,
}

/// Mutually disjoint subspaces of equal dimension inside an ambient subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadFamily {
    ambient: Subspace,
    members: Vec<Subspace>,
    kind: SpreadKind,
}

impl SpreadFamily {
    /// Checks dimensions, containment and pairwise disjointness.
    pub fn new(ambient: Subspace, members: Vec<Subspace>, kind: SpreadKind, f: &Field) -> Result<Self> {
        if let Some(first) = members.first() {
            if members.iter().any(|m| m.dim() != first.dim()) {
                return Err(Error::Shape("spread members differ in dimension".into()));
            }
        }
        for m in &members {
            if !ambient.contains(m, f)? {
                return Err(Error::Verification("spread member outside its ambient space".into()));
            }
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if a.meet_dim(b, f)? != 0 {
                    return Err(Error::Verification("spread members intersect".into()));
                }
            }
        }
        Ok(SpreadFamily {
            ambient,
            members,
            kind,
        })
    }

    pub fn ambient(&self) -> &Subspace {
        &self.ambient
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn kind(&self) -> SpreadKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of points lying on some member.
    pub fn covered_points(&self) -> BigUint {
        let q = self.ambient.field_order() as u64;
        self.members
            .iter()
            .map(|m| census::gaussian_binomial(m.dim() as u64, 1, q))
            .sum()
    }

    /// Whether every point of the ambient space lies on a member.
    pub fn is_cover(&self) -> bool {
        let q = self.ambient.field_order() as u64;
        self.covered_points() == census::gaussian_binomial(self.ambient.dim() as u64, 1, q)
    }
}

/// The spread `{phi(P) : P a point of PG(d-1, q^e)}`.
pub fn desarguesian_spread(reduction: &FieldReduction) -> Result<SpreadFamily> {
    let big = reduction.big();
    let small = reduction.small();
    let mut members = Vec::new();
    for p in Subspace::full(big.order(), reduction.len()).points(big)? {
        members.push(reduction.image_point(&p)?);
    }
    let ambient = Subspace::full(small.order(), reduction.len() * reduction.degree());
    SpreadFamily::new(ambient, members, SpreadKind::Generic, small)
}

/// A partial line spread of `PG(n-1, q)`, `n >= 5` odd, of size
/// `q^{n-2} + q^{n-4} + ... + q^3 + 1`.
///
/// Writing `GF(q)^k = <e_1, e_2> + W` with `W = GF(q^{k-2})`, the lines
/// `<(1, 0, a), (0, 1, a w)>` for `a` in `GF(q^{k-2})` are pairwise disjoint
/// and miss `W`; the construction recurses into `W` and ends with one line
/// when `k = 3`.
pub fn partial_line_spread(n: usize, q: u32) -> Result<SpreadFamily> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::Parameter(format!("partial line spread needs odd n >= 5, got {n}")));
    }
    let small = Field::of_order(q)?;
    let mut lines: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut offset = 0;
    let mut k = n;
    while k > 3 {
        let big = Field::new(small.characteristic(), small.degree() * (k - 2) as u32)?;
        let red = FieldReduction::polynomial(&small, &big, 1)?;
        let w = big.omega();
        for a in 0..big.order() {
            let mut u = vec![0u32; n];
            let mut v = vec![0u32; n];
            u[offset] = 1;
            v[offset + 1] = 1;
            for (j, &c) in red.coords(a).iter().enumerate() {
                u[offset + 2 + j] = c;
            }
            for (j, &c) in red.coords(big.mul(a, w)).iter().enumerate() {
                v[offset + 2 + j] = c;
            }
            lines.push(vec![u, v]);
        }
        offset += 2;
        k -= 2;
    }
    let mut u = vec![0u32; n];
    let mut v = vec![0u32; n];
    u[offset] = 1;
    v[offset + 1] = 1;
    lines.push(vec![u, v]);
    let mut members = Vec::with_capacity(lines.len());
    for l in &lines {
        members.push(Subspace::span(l, n, &small)?);
    }
    members.sort_unstable();
    let spread = SpreadFamily::new(Subspace::full(q, n), members, SpreadKind::PartialLine, &small)?;
    let expected = census::partial_spread_y(n as u64, q as u64)?;
    if BigUint::from(spread.len()) != expected {
        return Err(Error::Cardinality {
            what: "partial line spread".into(),
            expected: format!("{expected}"),
            found: format!("{}", spread.len()),
        });
    }
    Ok(spread)
}
