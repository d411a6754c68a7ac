use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};
use crate::geometry::{census, common_generators_from, partial_line_spread, Quadric, QuadricPencil, Subspace};
use crate::rankcodes::lift_right;

pub(crate) fn expect_count(what: &str, expected: BigUint, found: usize) -> Result<()> {
    if expected != BigUint::from(found) {
        return Err(Error::Cardinality {
            what: what.into(),
            expected: format!("{expected}"),
            found: format!("{found}"),
        });
    }
    Ok(())
}

/// The system of generators containing `S` split by how its members meet `S` and `S'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFamilies {
    pub system: Vec<Subspace>,
    /// `D(S)`: disjoint from `S`.
    pub disjoint_s: Vec<Subspace>,
    /// `D(S') ∩ I(S)`.
    pub disjoint_s_prime: Vec<Subspace>,
    /// `I(S) ∩ I(S')`.
    pub meeting_both: Vec<Subspace>,
}

fn split_system(quadric: &Quadric, all: &[Subspace], s: &Subspace, s_prime: &Subspace, f: &Field) -> Result<SystemFamilies> {
    let mut out = SystemFamilies {
        system: Vec::new(),
        disjoint_s: Vec::new(),
        disjoint_s_prime: Vec::new(),
        meeting_both: Vec::new(),
    };
    for g in all {
        if quadric.classify_system(g, s, f)? != 1 {
            continue;
        }
        out.system.push(g.clone());
        if g.meet_dim(s, f)? == 0 {
            out.disjoint_s.push(g.clone());
        } else if g.meet_dim(s_prime, f)? == 0 {
            out.disjoint_s_prime.push(g.clone());
        } else {
            out.meeting_both.push(g.clone());
        }
    }
    Ok(out)
}

/// Generator bookkeeping for the codes built on hyperbolic quadrics.
#[derive(Clone, Debug)]
pub struct GeneratorFamilies {
    pub n: usize,
    pub q: u32,
    /// One entry per pencil member (a single entry for odd `n`).
    pub members: Vec<SystemFamilies>,
    /// `G`: common generators meeting `S` and `S'`.
    pub common: Vec<Subspace>,
    /// `D`: members of `G` meeting `S` in a line.
    pub spread: Vec<Subspace>,
    /// `D_S`, aligned with `spread` for even `n`; the partial spread for odd `n`.
    pub spread_s: Vec<Subspace>,
    /// `A_l`: the partner of `spread_s[i]` in `S'`.
    pub spread_s_prime: Vec<Subspace>,
    /// `I`: lifts `(A | I)` of skew matrices of rank `n - 1` (odd `n` only).
    pub skew: Vec<Subspace>,
}

/// Families for even `n` from the quadric pencil.
pub fn generator_families(fp: &QuadricPencil) -> Result<GeneratorFamilies> {
    let f = fp.field();
    let n = fp.n();
    let q = f.order();
    let expected = census::even_families(n as u64, q as u64)?;
    let mut members = Vec::new();
    let mut first_all = Vec::new();
    for (i, quad) in fp.members().iter().enumerate() {
        let all = quad.generators(f)?;
        let fam = split_system(quad, &all, fp.s(), fp.s_prime(), f)?;
        expect_count("system containing S", expected.system.clone(), fam.system.len())?;
        expect_count("D(S)", expected.disjoint_from_s.clone(), fam.disjoint_s.len())?;
        expect_count(
            "D(S') ∩ I(S)",
            expected.disjoint_from_s_prime_meeting_s.clone(),
            fam.disjoint_s_prime.len(),
        )?;
        expect_count("I(S) ∩ I(S')", expected.meeting_both.clone(), fam.meeting_both.len())?;
        if i == 0 {
            first_all = all;
        }
        members.push(fam);
    }
    let common = common_generators_from(fp, &first_all)?;
    for fam in &members {
        for g in &common {
            if fam.meeting_both.binary_search(g).is_err() {
                return Err(Error::Verification("a common generator lies outside some I(S) ∩ I(S')".into()));
            }
        }
    }
    let mut spread = Vec::new();
    let mut spread_s = Vec::new();
    let mut spread_s_prime = Vec::new();
    for g in &common {
        let on_s = g.meet(fp.s(), f)?;
        if on_s.dim() != 2 {
            continue;
        }
        let on_s_prime = g.meet(fp.s_prime(), f)?;
        if on_s_prime.dim() != n - 2 {
            return Err(Error::Verification("a spread generator meets S' in the wrong dimension".into()));
        }
        spread.push(g.clone());
        spread_s.push(on_s);
        spread_s_prime.push(on_s_prime);
    }
    let th = census::gaussian_binomial(n as u64 / 2, 1, (q * q) as u64);
    expect_count("D", th, spread.len())?;
    let mut lines = spread_s.clone();
    lines.sort_unstable();
    let mut desarguesian = fp.spread_s()?.members().to_vec();
    desarguesian.sort_unstable();
    if lines != desarguesian {
        return Err(Error::Verification("D_S is not the Desarguesian line spread of S".into()));
    }
    Ok(GeneratorFamilies {
        n,
        q,
        members,
        common,
        spread,
        spread_s,
        spread_s_prime,
        skew: Vec::new(),
    })
}

/// `D'`: the spans `<l, B>` with `l` in `D_S` and `B` a partner other than `A_l`.
pub fn family_d_prime(gf: &GeneratorFamilies) -> Result<Vec<Subspace>> {
    let f = Field::of_order(gf.q)?;
    let mut out = Vec::new();
    for (i, l) in gf.spread_s.iter().enumerate() {
        for (j, b) in gf.spread_s_prime.iter().enumerate() {
            if i == j {
                continue;
            }
            let w = l.join(b, &f)?;
            if w.dim() != gf.n {
                return Err(Error::Verification(format!(
                    "span of a spread line and a partner has dimension {}",
                    w.dim()
                )));
            }
            out.push(w);
        }
    }
    out.sort_unstable();
    out.dedup();
    let expected = gf.spread_s.len() * gf.spread_s.len().saturating_sub(1);
    expect_count("D'", BigUint::from(expected), out.len())?;
    if gf.spread.iter().any(|g| out.binary_search(g).is_ok()) {
        return Err(Error::Verification("D' meets D".into()));
    }
    Ok(out)
}

fn all_vectors(len: usize, q: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (q as u64).pow(len as u32);
    (0..count).map(move |mut idx| {
        let mut v = vec![0u32; len];
        for slot in v.iter_mut().rev() {
            *slot = (idx % q as u64) as u32;
            idx /= q as u64;
        }
        v
    })
}

/// Every `n x n` alternating matrix over `GF(q)`, in lexicographic order of
/// the strictly upper triangle.
pub fn alternating_matrices(n: usize, f: &Field) -> Vec<Matrix> {
    let q = f.order();
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    all_vectors(slots.len(), q)
        .map(|v| {
            let mut m = Matrix::zeros(q, n, n);
            for (&(i, j), &c) in slots.iter().zip(&v) {
                m.set(i, j, c);
                m.set(j, i, f.neg(c));
            }
            m
        })
        .collect()
}

/// Whether `a` is alternating: `a^T = -a` with zero diagonal.
pub fn is_alternating(a: &Matrix, f: &Field) -> bool {
    let n = a.rows();
    n == a.cols() && (0..n).all(|i| a.get(i, i) == 0 && (i + 1..n).all(|j| a.get(j, i) == f.neg(a.get(i, j))))
}

/// Families for odd `n` from the split quadric `x . y` in `PG(2n - 1, q)`.
pub fn odd_generator_families(n: usize, q: u32) -> Result<GeneratorFamilies> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::Parameter(format!("odd families need odd n >= 5, got {n}")));
    }
    let f = Field::of_order(q)?;
    let quad = Quadric::split(n, &f)?;
    let s = Subspace::coordinate(q, 2 * n, n..2 * n);
    let s_prime = Subspace::coordinate(q, 2 * n, 0..n);
    let all = quad.generators(&f)?;
    let fam = split_system(&quad, &all, &s, &s_prime, &f)?;
    let half = num_traits::pow(BigUint::from(q), n * (n - 1) / 2);
    expect_count("system containing S", census::generators_per_system(n as u64, q as u64)?, fam.system.len())?;
    expect_count("D(S)", BigUint::from(0u32), fam.disjoint_s.len())?;
    expect_count("D(S') ∩ I(S)", half.clone(), fam.disjoint_s_prime.len())?;
    expect_count(
        "I(S) ∩ I(S')",
        census::generators_per_system(n as u64, q as u64)? - half,
        fam.meeting_both.len(),
    )?;
    let mut skew = Vec::new();
    for a in alternating_matrices(n, &f) {
        if a.rank(&f)? == n - 1 {
            skew.push(lift_right(&a, &f)?);
        }
    }
    skew.sort_unstable();
    expect_count("I", census::skew_rank_count(n as u64, n as u64 - 1, q as u64)?, skew.len())?;
    let partial = partial_line_spread(n, q)?;
    let mut spread_s = Vec::new();
    let mut spread_s_prime = Vec::new();
    for line in partial.members() {
        let rows: Vec<Vec<u32>> = (0..line.dim())
            .map(|i| {
                let mut v = vec![0u32; n];
                v.extend(line.row_vec(i));
                v
            })
            .collect();
        let l = Subspace::span(&rows, 2 * n, &f)?;
        let partner = quad.polar(&l, &f)?.meet(&s_prime, &f)?;
        if partner.dim() != n - 2 {
            return Err(Error::Verification("polar of a spread line meets S' wrongly".into()));
        }
        spread_s.push(l);
        spread_s_prime.push(partner);
    }
    Ok(GeneratorFamilies {
        n,
        q,
        members: vec![fam],
        common: Vec::new(),
        spread: Vec::new(),
        spread_s,
        spread_s_prime,
        skew,
    })
}
