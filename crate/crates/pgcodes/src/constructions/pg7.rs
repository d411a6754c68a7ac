//! The `n = 4` improvement: solids `<r', l>` with `r'` a line of `S'` and `l`
//! a line of `S`, both outside the spreads, taken as one orbit of the spread
//! stabilizer.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::assemble::{build_even, even_parts, lifted_blocks, pencil_families, EvenParts};
use super::code::SubspaceCode;
use super::families::expect_count;
use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};
use crate::geometry::{census, enumerate_subspaces, hermitian_pencil, quadric_pencil, QuadricPencil, Subspace, DEFAULT_SUBSPACE_BUDGET};

/// How the orbit family was fitted into the code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pg7Route {
    /// An orbit of `q^6 - q^2` solids added to the even code.
    Orbit,
    /// An orbit of `(q^2 - q + 1)(q^2 + 1)(q^2 + q)` solids replacing the
    /// first pencil member's generators outside `G`.
    Exchange,
}

/// Diagnostics of [`code_pg7_with_report`].
#[derive(Clone, Debug)]
pub struct Pg7Report {
    pub route: Pg7Route,
    pub seed: Subspace,
    /// Sizes of all orbits on the candidate solids, in seed order.
    pub orbit_sizes: Vec<usize>,
    /// Order of the group generated on `S`, when small enough to close.
    pub group_order: Option<u128>,
}

/// One orbit of candidate solids together with its least seed.
#[derive(Clone, Debug)]
pub struct SeedOrbit {
    pub seed: Subspace,
    pub members: Vec<Subspace>,
}

/// Generators of the stabilizer `H` of the pencil and of both spreads, as
/// `2n x 2n` block matrices `diag(M^{-T}, M)` acting on row vectors.
///
/// `M` runs over generators of `GL(n/2, q^2)` acting on `S` through the
/// field reduction: a diagonal scaling by `w`, a transvection, a transposition
/// and a cycle of coordinates.
pub fn spread_stabilizer(fp: &QuadricPencil) -> Result<Vec<Matrix>> {
    Ok(spread_stabilizer_on_s(fp)?.into_iter().map(|(full, _)| full).collect())
}

fn spread_stabilizer_on_s(fp: &QuadricPencil) -> Result<Vec<(Matrix, Matrix)>> {
    let red = fp.reduction();
    let big = red.big();
    let f = fp.field();
    let q = f.order();
    let n = fp.n();
    let half = n / 2;
    let mut maps: Vec<Matrix> = Vec::new();
    let mut scale = Matrix::identity(big.order(), half);
    scale.set(0, 0, big.omega());
    maps.push(scale);
    if half >= 2 {
        let mut tv = Matrix::identity(big.order(), half);
        tv.set(0, 1, 1);
        maps.push(tv);
        let mut swap = Matrix::zeros(big.order(), half, half);
        for i in 0..half {
            let j = match i {
                0 => 1,
                1 => 0,
                _ => i,
            };
            swap.set(i, j, 1);
        }
        maps.push(swap);
        let mut cycle = Matrix::zeros(big.order(), half, half);
        for i in 0..half {
            cycle.set(i, (i + 1) % half, 1);
        }
        maps.push(cycle);
    }
    let transport = |act: &dyn Fn(&[u32]) -> Vec<u32>| -> Result<Matrix> {
        let mut m = Matrix::zeros(q, n, n);
        for k in 0..n {
            let mut w = vec![0u32; 2 * n];
            w[n + k] = 1;
            let pre = red.preimage_vector(&w);
            let mut moved = vec![0u32; half];
            moved.extend(act(&pre[half..]));
            let img = red.image_vector(&moved);
            if img[..n].iter().any(|&x| x != 0) {
                return Err(Error::Verification("semilinear map leaves S".into()));
            }
            for c in 0..n {
                m.set(k, c, img[n + c]);
            }
        }
        Ok(m)
    };
    let mut on_s = Vec::new();
    for g in &maps {
        on_s.push(transport(&|y: &[u32]| g.vec_mul(y, big))?);
    }
    let mut pairings: Vec<Vec<u32>> = fp.pairings().iter().map(|p| projective(p, f)).collect::<Result<_>>()?;
    pairings.sort_unstable();
    let spread_x: BTreeSet<Subspace> = fp.spread_s_prime()?.members().iter().cloned().collect();
    let spread_y: BTreeSet<Subspace> = fp.spread_s()?.members().iter().cloned().collect();
    let mut out = Vec::new();
    for m in on_s {
        let dual = m.inverse(f)?.transpose();
        let mut full = Matrix::zeros(q, 2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                full.set(r, c, dual.get(r, c));
                full.set(n + r, n + c, m.get(r, c));
            }
        }
        // Q_P(x M^{-T}, y M) = x (M^{-T} P M^T) y^T must be a pencil member again.
        let mut moved: Vec<Vec<u32>> = Vec::new();
        for p in fp.pairings() {
            moved.push(projective(&dual.mul(p, f)?.mul(&m.transpose(), f)?, f)?);
        }
        moved.sort_unstable();
        if moved != pairings {
            return Err(Error::Verification("stabilizer generator does not preserve the pencil".into()));
        }
        for (spread, label) in [(&spread_x, "S'"), (&spread_y, "S")] {
            for l in spread {
                if !spread.contains(&l.transform(&full, f)?) {
                    return Err(Error::Verification(format!("stabilizer generator moves the spread of {label}")));
                }
            }
        }
        out.push((full, m));
    }
    Ok(out)
}

/// Entries of `m` scaled so the first nonzero one is 1.
fn projective(m: &Matrix, f: &Field) -> Result<Vec<u32>> {
    let lead = m.data().iter().copied().find(|&x| x != 0).ok_or(Error::DegenerateForm)?;
    let inv = f.inv(lead)?;
    Ok(m.data().iter().map(|&x| f.mul(x, inv)).collect())
}

/// `|GL(n/2, q^2)|`, the order of the group generated by [`spread_stabilizer`].
pub fn expected_stabilizer_order(n: usize, q: u32) -> BigUint {
    let big_q = BigUint::from(q) * BigUint::from(q);
    let m = n / 2;
    let qm = num_traits::pow(big_q.clone(), m);
    let mut order = BigUint::from(1u32);
    for i in 0..m {
        order *= &qm - num_traits::pow(big_q.clone(), i);
    }
    order
}

/// Order of the matrix group generated by `gens`, or `None` past `limit`.
pub fn closure_order(gens: &[Matrix], f: &Field, limit: usize) -> Result<Option<usize>> {
    let Some(first) = gens.first() else {
        return Ok(Some(1));
    };
    let id = Matrix::identity(f.order(), first.rows());
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(id.data().to_vec());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g, f)?;
            if seen.insert(y.data().to_vec()) {
                if seen.len() > limit {
                    return Ok(None);
                }
                queue.push_back(y);
            }
        }
    }
    Ok(Some(seen.len()))
}

/// Orbit of `seed` under the group generated by `gens`, sorted.
pub fn orbit(seed: &Subspace, gens: &[Matrix], f: &Field) -> Result<Vec<Subspace>> {
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    seen.insert(seed.clone());
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.transform(g, f)?;
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn embed_lines(lines: &[Subspace], n: usize, upper: bool, f: &Field) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for l in lines {
        let rows: Vec<Vec<u32>> = (0..l.dim())
            .map(|i| {
                let v = l.row_vec(i);
                let zero = vec![0u32; n];
                if upper {
                    [zero, v].concat()
                } else {
                    [v, zero].concat()
                }
            })
            .collect();
        out.push(Subspace::span(&rows, 2 * n, f)?);
    }
    out.sort_unstable();
    Ok(out)
}

/// Orbits of `H` on the solids `<r', l>`, `r'` a line of `S'` and `l` a line
/// of `S`, both outside the spreads. Orbits are listed by their least seed,
/// seeds ordered by `r'` first and `l` second.
pub fn seed_orbits(fp: &QuadricPencil, gens: &[Matrix]) -> Result<Vec<SeedOrbit>> {
    let f = fp.field();
    let n = fp.n();
    if n != 4 {
        return Err(Error::Parameter(format!("solid orbits need n = 4, got {n}")));
    }
    let lines = enumerate_subspaces(n, f.order(), 2, DEFAULT_SUBSPACE_BUDGET)?;
    let spread_x: BTreeSet<Subspace> = fp.spread_s_prime()?.members().iter().cloned().collect();
    let spread_y: BTreeSet<Subspace> = fp.spread_s()?.members().iter().cloned().collect();
    let xs: Vec<Subspace> = embed_lines(&lines, n, false, f)?
        .into_iter()
        .filter(|l| !spread_x.contains(l))
        .collect();
    let ys: Vec<Subspace> = embed_lines(&lines, n, true, f)?
        .into_iter()
        .filter(|l| !spread_y.contains(l))
        .collect();
    let mut covered: BTreeSet<Subspace> = BTreeSet::new();
    let mut out = Vec::new();
    for r in &xs {
        for l in &ys {
            let solid = r.join(l, f)?;
            if covered.contains(&solid) {
                continue;
            }
            let members = orbit(&solid, gens, f)?;
            covered.extend(members.iter().cloned());
            out.push(SeedOrbit { seed: solid, members });
        }
    }
    Ok(out)
}

fn compatible(orbit: &[Subspace], others: &[Subspace], n: usize, f: &Field) -> Result<bool> {
    for (i, u) in orbit.iter().enumerate() {
        for v in orbit[i + 1..].iter().chain(others) {
            if u.meet_dim(v, f)? > n - 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The orbit `Y^H` of `q^6 - q^2` solids, none a generator of a pencil
/// quadric, compatible with every non-lifted codeword of the even code.
pub fn orbit_yh(fp: &QuadricPencil, orbits: &[SeedOrbit], others: &[Subspace]) -> Result<SeedOrbit> {
    let f = fp.field();
    let q = f.order() as u64;
    let target = (q.pow(6) - q * q) as usize;
    'next: for o in orbits {
        if o.members.len() != target {
            continue;
        }
        for w in &o.members {
            for quad in fp.members() {
                if quad.is_totally_singular(w, f)? {
                    continue 'next;
                }
            }
        }
        if compatible(&o.members, others, fp.n(), f)? {
            return Ok(o.clone());
        }
    }
    Err(Error::NoSeed(format!("no orbit of {target} solids fits the code")))
}

/// An orbit of `(q^2 - q + 1)(q^2 + 1)(q^2 + q)` solids compatible with the
/// non-lifted codewords that remain once the first member's family is dropped.
pub fn exchange_orbit(fp: &QuadricPencil, orbits: &[SeedOrbit], retained: &[Subspace]) -> Result<SeedOrbit> {
    let f = fp.field();
    let q = f.order() as usize;
    let target = (q * q - q + 1) * (q * q + 1) * (q * q + q);
    for o in orbits {
        if o.members.len() == target && compatible(&o.members, retained, fp.n(), f)? {
            return Ok(o.clone());
        }
    }
    Err(Error::NoSeed(format!("no orbit of {target} solids fits the code")))
}

fn non_lifted(parts: &EvenParts, with_ii: bool) -> Vec<Subspace> {
    let gf = &parts.families;
    let mut out: Vec<Subspace> = gf.common.clone();
    for (tag, members) in pencil_families(gf) {
        if with_ii || tag != "II" {
            out.extend(members);
        }
    }
    out.extend(parts.d_prime.iter().cloned());
    out.push(parts.s.clone());
    out
}

/// The `(8, M, 4; 4)_q` code with the census size `q^12 + q^2 (q^2+1)^2 (q^2+q+1) + 1`.
pub fn code_pg7(q: u32) -> Result<SubspaceCode> {
    code_pg7_with_report(q).map(|(c, _)| c)
}

/// As [`code_pg7`], also describing which orbit was used.
///
/// The orbit of `q^6 - q^2` solids is tried first; when no such orbit is
/// compatible, the exchange orbit replaces the first member's family.
pub fn code_pg7_with_report(q: u32) -> Result<(SubspaceCode, Pg7Report)> {
    let n = 4;
    let f = Field::of_order(q)?;
    let hp = hermitian_pencil(n, q)?;
    let fp = quadric_pencil(&hp)?;
    let parts = even_parts(n, q)?;
    let stab = spread_stabilizer_on_s(&fp)?;
    let gens: Vec<Matrix> = stab.iter().map(|(full, _)| full.clone()).collect();
    let on_s: Vec<Matrix> = stab.into_iter().map(|(_, m)| m).collect();
    let expected = expected_stabilizer_order(n, q);
    let group_order = if expected <= BigUint::from(200_000u32) {
        let found = closure_order(&on_s, &f, 200_000)?.unwrap_or(0);
        expect_count("spread stabilizer order", expected, found)?;
        Some(found as u128)
    } else {
        None
    };
    let orbits = seed_orbits(&fp, &gens)?;
    let orbit_sizes = orbits.iter().map(|o| o.members.len()).collect();
    let (route, chosen) = match orbit_yh(&fp, &orbits, &non_lifted(&parts, true)) {
        Ok(o) => (Pg7Route::Orbit, o),
        Err(Error::NoSeed(_)) => (Pg7Route::Exchange, exchange_orbit(&fp, &orbits, &non_lifted(&parts, false))?),
        Err(e) => return Err(e),
    };
    let lifted = lifted_blocks(n, &f)?;
    let mut b = build_even(n, &f, &lifted, &parts, route == Pg7Route::Exchange)?;
    b.extend("YH", chosen.members.iter().cloned())?;
    let code = b.finish(q, n, "pg7", f.modulus().to_vec(), 4)?;
    expect_count("code size", census::m_pg7(q as u64)?, code.len())?;
    Ok((
        code,
        Pg7Report {
            route,
            seed: chosen.seed,
            orbit_sizes,
            group_order,
        },
    ))
}
