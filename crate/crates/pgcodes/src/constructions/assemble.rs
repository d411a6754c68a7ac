use alloc::format;
use alloc::vec::Vec;

use super::code::{CodeBuilder, SubspaceCode};
use super::families::{
    expect_count, family_d_prime, generator_families, is_alternating, odd_generator_families, GeneratorFamilies,
};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::geometry::{census, hermitian_pencil, quadric_pencil, Subspace};
use crate::rankcodes::{construct_y, crc_extract, lift_left, lift_right, mrd_code, MatrixCode, DEFAULT_MEMBER_BUDGET};

pub(crate) struct Lifted {
    pub mrd: MatrixCode,
    pub crc: Vec<(usize, MatrixCode)>,
}

pub(crate) fn lifted_blocks(n: usize, f: &Field) -> Result<Lifted> {
    let y = construct_y(n, f.order())?;
    let mrd = mrd_code(&y, n, f, DEFAULT_MEMBER_BUDGET)?;
    let mut crc = Vec::new();
    for r in 2..=n - 2 {
        crc.push((r, crc_extract(&mrd, r, f)?));
    }
    Ok(Lifted { mrd, crc })
}

fn add_right_lifts(b: &mut CodeBuilder, lifted: &Lifted, f: &Field) -> Result<()> {
    for (r, c) in &lifted.crc {
        let tag = format!("L{r}");
        for a in c.iter() {
            b.add(&tag, lift_right(&a, f)?)?;
        }
    }
    Ok(())
}

fn check_total(code: &SubspaceCode, expected: num_bigint::BigUint) -> Result<()> {
    expect_count("code size", expected, code.len())
}

/// The lifted MRD code together with the lifted constant-rank codes, `n >= 4`.
pub fn code_prop32(n: usize, q: u32) -> Result<SubspaceCode> {
    if n < 4 {
        return Err(Error::Parameter(format!("prop32 needs n >= 4, got {n}")));
    }
    let f = Field::of_order(q)?;
    let lifted = lifted_blocks(n, &f)?;
    let mut b = CodeBuilder::new();
    for a in lifted.mrd.iter() {
        b.add("L1", lift_left(&a)?)?;
    }
    add_right_lifts(&mut b, &lifted, &f)?;
    let code = b.finish(q, n, "prop32", f.modulus().to_vec(), 4)?;
    check_total(&code, census::m_prop32(n as u64, q as u64)?)?;
    Ok(code)
}

/// Everything `code_even` needs besides the lifted blocks.
pub(crate) struct EvenParts {
    pub families: GeneratorFamilies,
    pub d_prime: Vec<Subspace>,
    pub s: Subspace,
}

pub(crate) fn even_parts(n: usize, q: u32) -> Result<EvenParts> {
    let hp = hermitian_pencil(n, q)?;
    let fp = quadric_pencil(&hp)?;
    let families = generator_families(&fp)?;
    let d_prime = family_d_prime(&families)?;
    Ok(EvenParts {
        families,
        d_prime,
        s: fp.s().clone(),
    })
}

/// Pencil families outside `G`, tagged `II` for the first member and
/// `pencil{i}` for the others.
pub(crate) fn pencil_families(gf: &GeneratorFamilies) -> Vec<(alloc::string::String, Vec<Subspace>)> {
    gf.members
        .iter()
        .enumerate()
        .map(|(i, fam)| {
            let tag = if i == 0 { "II".into() } else { format!("pencil{i}") };
            let rest = fam
                .meeting_both
                .iter()
                .filter(|g| gf.common.binary_search(g).is_err())
                .cloned()
                .collect();
            (tag, rest)
        })
        .collect()
}

pub(crate) fn build_even(n: usize, f: &Field, lifted: &Lifted, parts: &EvenParts, skip_ii: bool) -> Result<CodeBuilder> {
    let gf = &parts.families;
    let mut b = CodeBuilder::new();
    for a in lifted.mrd.iter() {
        b.add("L1", lift_left(&a)?)?;
    }
    add_right_lifts(&mut b, lifted, f)?;
    b.extend("G", gf.common.iter().cloned())?;
    let pencil = pencil_families(gf);
    let expected = census::even_families(n as u64, f.order() as u64)?;
    let union: usize = pencil.iter().skip(1).map(|(_, v)| v.len()).sum();
    expect_count("pencil union outside G", expected.pencil_union, union)?;
    for (tag, members) in pencil {
        if skip_ii && tag == "II" {
            continue;
        }
        b.extend(&tag, members)?;
    }
    b.extend("Dprime", parts.d_prime.iter().cloned())?;
    b.add("S", parts.s.clone())?;
    Ok(b)
}

/// The code for even `n >= 4` built from the quadric pencil.
pub fn code_even(n: usize, q: u32) -> Result<SubspaceCode> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::Parameter(format!("even construction needs even n >= 4, got {n}")));
    }
    let f = Field::of_order(q)?;
    let lifted = lifted_blocks(n, &f)?;
    let parts = even_parts(n, q)?;
    let code = build_even(n, &f, &lifted, &parts, false)?.finish(q, n, "even", f.modulus().to_vec(), 4)?;
    check_total(&code, census::m_even(n as u64, q as u64)?)?;
    Ok(code)
}

/// `<l, B>` for `l` in the partial spread of `S` and `B` the partner of a
/// different line.
pub fn spread_pairs(gf: &GeneratorFamilies) -> Result<Vec<Subspace>> {
    let f = Field::of_order(gf.q)?;
    let mut out = Vec::new();
    for (i, l) in gf.spread_s.iter().enumerate() {
        for (j, b) in gf.spread_s_prime.iter().enumerate() {
            if i != j {
                let w = l.join(b, &f)?;
                if w.dim() != gf.n {
                    return Err(Error::Verification("spread pair spans the wrong dimension".into()));
                }
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    let y = census::partial_spread_y(gf.n as u64, gf.q as u64)?;
    expect_count("spread pairs", &y * (&y - 1u32), out.len())?;
    Ok(out)
}

/// The code for odd `n >= 5` built from the split quadric and a partial line spread.
pub fn code_odd(n: usize, q: u32) -> Result<SubspaceCode> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::Parameter(format!("odd construction needs odd n >= 5, got {n}")));
    }
    let f = Field::of_order(q)?;
    let lifted = lifted_blocks(n, &f)?;
    let gf = odd_generator_families(n, q)?;
    let pairs = spread_pairs(&gf)?;
    let s = Subspace::coordinate(q, 2 * n, n..2 * n);
    // The pairs family must be compatible with every other non-lifted family.
    let fixed: Vec<&Subspace> = gf.members[0].meeting_both.iter().chain(&gf.skew).chain([&s]).collect();
    for (i, u) in pairs.iter().enumerate() {
        for v in pairs[i + 1..].iter().chain(fixed.iter().copied()) {
            if u.meet_dim(v, &f)? > n - 2 {
                return Err(Error::Verification("spread pairs family violates distance 4".into()));
            }
        }
    }
    let mut b = CodeBuilder::new();
    for a in lifted.mrd.iter() {
        if !is_alternating(&a, &f) {
            b.add("L1prime", lift_left(&a)?)?;
        }
    }
    add_right_lifts(&mut b, &lifted, &f)?;
    b.extend("Iskew", gf.skew.iter().cloned())?;
    b.extend("II", gf.members[0].meeting_both.iter().cloned())?;
    b.extend("spreadpairs", pairs)?;
    b.add("S", s)?;
    let code = b.finish(q, n, "odd", f.modulus().to_vec(), 4)?;
    check_total(&code, census::m_odd(n as u64, q as u64)?)?;
    Ok(code)
}
