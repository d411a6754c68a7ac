use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use super::report::{CheckResult, VerificationReport, Witness};
use crate::algebra::Field;
use crate::constructions::{alternating_matrices, SubspaceCode};
use crate::error::Result;
use crate::geometry::{census, Subspace};
use crate::rankcodes::{gamma_spaces, scan_ranks};

fn qpow(q: u64, e: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), e as usize)
}

fn crc_rows(n: u64, q: u64, out: &mut Vec<(String, BigUint)>) -> Result<()> {
    for r in 2..=n - 2 {
        out.push((format!("L{r}"), census::crc_cardinality(n, r, q)?));
    }
    Ok(())
}

fn even_rows(n: u64, q: u64, with_ii: bool) -> Result<Vec<(String, BigUint)>> {
    let fam = census::even_families(n, q)?;
    let th = census::gaussian_binomial(n / 2, 1, q * q);
    let mut rows = Vec::new();
    rows.push(("L1".into(), qpow(q, n * n - n)));
    crc_rows(n, q, &mut rows)?;
    rows.push(("G".into(), fam.common.clone()));
    let outside = &fam.meeting_both - &fam.common;
    if with_ii {
        rows.push(("II".into(), outside.clone()));
    }
    for i in 1..=q {
        rows.push((format!("pencil{i}"), outside.clone()));
    }
    rows.push(("Dprime".into(), &th * (&th - 1u32)));
    rows.push(("S".into(), BigUint::from(1u32)));
    Ok(rows)
}

/// Expected family sizes and total for a construction, from the census.
pub fn expected_families(code: &SubspaceCode) -> Result<(Vec<(String, BigUint)>, BigUint)> {
    let n = code.n() as u64;
    let q = code.field_order() as u64;
    match code.construction() {
        "prop32" => {
            let mut rows = alloc::vec!(("L1".into(), qpow(q, n * n - n)));
            crc_rows(n, q, &mut rows)?;
            Ok((rows, census::m_prop32(n, q)?))
        }
        "even" => Ok((even_rows(n, q, true)?, census::m_even(n, q)?)),
        "odd" => {
            let half = qpow(q, n * (n - 1) / 2);
            let y = census::partial_spread_y(n, q)?;
            let mut rows = alloc::vec!(("L1prime".into(), qpow(q, n * n - n) - &half));
            crc_rows(n, q, &mut rows)?;
            rows.push(("Iskew".into(), census::skew_rank_count(n, n - 1, q)?));
            rows.push(("II".into(), census::generators_per_system(n, q)? - &half));
            rows.push(("spreadpairs".into(), &y * (&y - 1u32)));
            rows.push(("S".into(), BigUint::from(1u32)));
            Ok((rows, census::m_odd(n, q)?))
        }
        "pg7" => {
            // The route is read off the code: the orbit route keeps II and
            // adds q^6 - q^2 solids, the exchange route drops II.
            let orbit = qpow(q, 6) - qpow(q, 2);
            let exchange = BigUint::from((q * q - q + 1) * (q * q + 1) * (q * q + q));
            let with_ii = code.count_of("II") > 0 || BigUint::from(code.count_of("YH")) == orbit;
            let mut rows = even_rows(n, q, with_ii)?;
            rows.push(("YH".into(), if with_ii { orbit } else { exchange }));
            Ok((rows, census::m_pg7(q)?))
        }
        other => Err(crate::error::Error::Parameter(format!("unknown construction {other:?}"))),
    }
}

/// Compares the code size and every family size with the census; also
/// fails on repeated codewords.
pub fn cardinality_check(code: &SubspaceCode) -> Result<VerificationReport> {
    let mut report = VerificationReport::for_code(code);
    let mut check = CheckResult::new("cardinality");
    let (rows, total) = expected_families(code)?;
    let found = code.len();
    let delta = BigInt::from(found) - BigInt::from(total.clone());
    check.note(format!("M = {found}, census {total}, delta {delta}"));
    if delta != BigInt::from(0) {
        check.fail(Witness::Note(format!("code size differs from the census by {delta}")));
    }
    for (tag, expected) in &rows {
        let c = code.count_of(tag);
        let d = BigInt::from(c) - BigInt::from(expected.clone());
        check.note(format!("{tag}: {c} (census {expected})"));
        if d != BigInt::from(0) {
            check.fail(Witness::Note(format!("family {tag} differs from the census by {d}")));
        }
    }
    for tag in code.families() {
        if !rows.iter().any(|(t, _)| t == tag) {
            check.fail(Witness::Note(format!("family {tag} is not part of the {} construction", code.construction())));
        }
    }
    let words = code.codewords();
    let dups = code.duplicate_count();
    if dups > 0 {
        check.note(format!("{dups} repeated codewords"));
        for i in 1..words.len() {
            if words[i - 1] == words[i] {
                check.fail(Witness::Pair {
                    first: i - 1,
                    second: i,
                    meet: code.n(),
                });
            }
        }
    }
    report.checks.push(check);
    Ok(report)
}

/// Checks that `Y` has dimension `n^2 - n`, minimum nonzero rank at least 2
/// and contains every alternating matrix.
pub fn mrd_linear_check(y: &Subspace, n: usize, f: &Field, budget: u128) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("Y(q={},n={n})", f.order()), y.dim());
    let mut check = CheckResult::new("mrd-linear");
    check.note(format!("dimension {} (target {})", y.dim(), n * n - n));
    if y.dim() != n * n - n {
        check.fail(Witness::Note(format!("dimension {} instead of {}", y.dim(), n * n - n)));
    }
    let scan = scan_ranks(y, n, f, budget)?;
    let members: u128 = scan.counts.iter().sum();
    check.note(format!("rank counts {:?} over {members} members", scan.counts));
    if let (Some(r), Some(w)) = (scan.min_nonzero, &scan.witness) {
        check.note(format!("minimum nonzero rank {r}"));
        if r < 2 {
            let text: String = w.iter().map(|&x| char::from_digit(x, 36).unwrap_or('?')).collect();
            check.fail(Witness::Note(format!("member of rank {r}: {text} (row-major)")));
        }
    }
    let (_, alt) = gamma_spaces(n, f)?;
    if !y.contains(&alt, f)? {
        let missing = alternating_matrices(n, f)
            .into_iter()
            .find(|a| !y.contains_vector(a.data(), f).unwrap_or(false));
        check.fail(Witness::Note(format!(
            "alternating matrix outside Y: {:?}",
            missing.map(|m| m.data().to_vec())
        )));
    } else {
        check.note(format!("contains all {} alternating matrices", alternating_count(n, f)));
    }
    report.d_measured = scan.min_nonzero;
    report.pairs = members.saturating_sub(1);
    report.checks.push(check);
    Ok(report)
}

fn alternating_count(n: usize, f: &Field) -> BigUint {
    qpow(f.order() as u64, (n * (n - 1) / 2) as u64)
}
