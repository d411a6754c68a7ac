use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::report::{CheckResult, VerificationReport, Witness, WITNESS_CAP};
use crate::algebra::{bits, Field};
use crate::constructions::SubspaceCode;
use crate::error::{Error, Result};
use crate::geometry::{census, enumerate_subspaces, Subspace};

/// Default cap on the number of `(codeword, t-space)` incidences.
pub const DEFAULT_INCIDENCE_BUDGET: u128 = 100_000_000;

/// Canonical keys of the `t`-subspaces of codewords.
enum Keyer {
    /// GF(2) with `t * 2n <= 64`: reduced rows concatenated into one word.
    Packed { coeffs: Vec<Vec<u64>>, n: usize, width: usize },
    Generic { coeffs: Vec<crate::algebra::Matrix>, f: Field },
}

fn pack_key(rows: &[u64], width: usize) -> u64 {
    bits::rref(rows).iter().fold(0u64, |acc, &r| (acc << width) | r)
}

impl Keyer {
    fn new(q: u32, n: usize, t: usize) -> Result<Self> {
        let subs = enumerate_subspaces(n, q, t, DEFAULT_INCIDENCE_BUDGET)?;
        if q == 2 && t * 2 * n <= 64 {
            Ok(Keyer::Packed {
                coeffs: subs.iter().map(|s| s.packed().expect("GF(2)")).collect(),
                n,
                width: 2 * n,
            })
        } else {
            Ok(Keyer::Generic {
                coeffs: subs.iter().map(|s| s.basis()).collect(),
                f: Field::of_order(q)?,
            })
        }
    }

    fn per_codeword(&self) -> usize {
        match self {
            Keyer::Packed { coeffs, .. } => coeffs.len(),
            Keyer::Generic { coeffs, .. } => coeffs.len(),
        }
    }

    fn packed_keys(&self, w: &Subspace, out: &mut Vec<u64>) {
        if let Keyer::Packed { coeffs, n, width } = self {
            let basis = w.packed().expect("GF(2)");
            let mut rows = [0u64; 64];
            for c in coeffs {
                for (slot, &cr) in rows.iter_mut().zip(c) {
                    let mut v = 0u64;
                    for (k, &b) in basis.iter().enumerate() {
                        if (cr >> (n - 1 - k)) & 1 == 1 {
                            v ^= b;
                        }
                    }
                    *slot = v;
                }
                out.push(pack_key(&rows[..c.len()], *width));
            }
        }
    }

    fn generic_keys(&self, w: &Subspace, out: &mut Vec<Subspace>) -> Result<()> {
        if let Keyer::Generic { coeffs, f } = self {
            let basis = w.basis();
            for c in coeffs {
                out.push(Subspace::from_rows(&c.mul(&basis, f)?, f)?);
            }
        }
        Ok(())
    }
}

fn unpack_key(key: u64, t: usize, width: usize) -> Vec<Vec<u32>> {
    (0..t)
        .map(|i| bits::unpack(key >> ((t - 1 - i) * width), width).collect())
        .collect()
}

fn subspace_rows(s: &Subspace) -> Vec<Vec<u32>> {
    (0..s.dim()).map(|i| s.row_vec(i)).collect()
}

/// Runs of equal keys in a sorted list: (distinct count, maximum run, keys with run > 1).
fn runs<K: Ord + Clone>(keys: &[K]) -> (usize, usize, Vec<K>) {
    let mut distinct = 0;
    let mut max = 0;
    let mut repeated = Vec::new();
    let mut i = 0;
    while i < keys.len() {
        let mut j = i + 1;
        while j < keys.len() && keys[j] == keys[i] {
            j += 1;
        }
        distinct += 1;
        max = max.max(j - i);
        if j - i > 1 && repeated.len() < WITNESS_CAP {
            repeated.push(keys[i].clone());
        }
        i = j;
    }
    (distinct, max, repeated)
}

fn incidences(code: &SubspaceCode, members: usize, t: usize, budget: u128) -> Result<u128> {
    let per = census::gaussian_binomial(code.n() as u64, t as u64, code.field_order() as u64);
    let total = per * BigUint::from(members);
    let needed = total.to_u128().unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed)
}

fn selected(code: &SubspaceCode, family: Option<&str>) -> Vec<usize> {
    (0..code.len()).filter(|&i| family.is_none_or(|t| code.tag(i) == t)).collect()
}

/// Multiplicity census of the `t`-subspaces contained in codewords. Passes
/// iff no `t`-space lies in two codewords.
pub fn covering_check(code: &SubspaceCode, t: usize, budget: u128) -> Result<VerificationReport> {
    let mut report = VerificationReport::for_code(code);
    let mut check = CheckResult::new(&format!("cover(t={t})"));
    if t == 0 || t > code.n() {
        return Err(Error::Parameter(format!("cover dimension t = {t} outside 1..={}", code.n())));
    }
    let idx = selected(code, None);
    let total = incidences(code, idx.len(), t, budget)?;
    let keyer = Keyer::new(code.field_order(), code.n(), t)?;
    let (distinct, max) = match &keyer {
        Keyer::Packed { width, .. } => {
            let mut keys = Vec::with_capacity(total as usize);
            for &i in &idx {
                keyer.packed_keys(code.codeword(i), &mut keys);
            }
            keys.sort_unstable();
            let (distinct, max, repeated) = runs(&keys);
            drop(keys);
            if !repeated.is_empty() {
                let mut holders: Vec<Vec<usize>> = alloc::vec![Vec::new(); repeated.len()];
                let mut buf = Vec::with_capacity(keyer.per_codeword());
                for &i in &idx {
                    buf.clear();
                    keyer.packed_keys(code.codeword(i), &mut buf);
                    for (r, h) in repeated.iter().zip(holders.iter_mut()) {
                        if buf.contains(r) {
                            h.push(i);
                        }
                    }
                }
                for (r, h) in repeated.iter().zip(holders) {
                    check.fail(Witness::Covered {
                        rows: unpack_key(*r, t, *width),
                        codewords: h,
                    });
                }
            }
            (distinct, max)
        }
        Keyer::Generic { .. } => {
            let mut keys = Vec::new();
            let mut owners = Vec::new();
            for &i in &idx {
                let before = keys.len();
                keyer.generic_keys(code.codeword(i), &mut keys)?;
                owners.extend(core::iter::repeat_n(i, keys.len() - before));
            }
            let mut order: Vec<usize> = (0..keys.len()).collect();
            order.sort_unstable_by(|&a, &b| keys[a].cmp(&keys[b]));
            let sorted: Vec<Subspace> = order.iter().map(|&k| keys[k].clone()).collect();
            let (distinct, max, repeated) = runs(&sorted);
            for r in repeated {
                let h: Vec<usize> = order.iter().filter(|&&k| keys[k] == r).map(|&k| owners[k]).collect();
                check.fail(Witness::Covered {
                    rows: subspace_rows(&r),
                    codewords: h,
                });
            }
            (distinct, max)
        }
    };
    check.note(format!("incidences {total}, distinct {t}-spaces {distinct}, maximum multiplicity {max}"));
    if max > 1 {
        check.passed = false;
    }
    report.pairs = 0;
    report.checks.push(check);
    Ok(report)
}

/// Whether the `t`-subspaces of the codewords in `family` (all codewords for
/// `None`) cover every member of `universe` exactly once.
pub fn exact_cover_check(
    code: &SubspaceCode,
    family: Option<&str>,
    t: usize,
    universe: &[Subspace],
    budget: u128,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::for_code(code);
    let label = family.map_or_else(|| format!("exact-cover(t={t})"), |f| format!("exact-cover({f},t={t})"));
    let mut check = CheckResult::new(&label);
    let idx = selected(code, family);
    let total = incidences(code, idx.len(), t, budget)?;
    let keyer = Keyer::new(code.field_order(), code.n(), t)?;
    let mut uncovered = 0usize;
    let mut multiple = 0usize;
    let outside;
    match &keyer {
        Keyer::Packed { width, .. } => {
            let mut keys = Vec::with_capacity(total as usize);
            for &i in &idx {
                keyer.packed_keys(code.codeword(i), &mut keys);
            }
            keys.sort_unstable();
            let mut uni: Vec<u64> = universe
                .iter()
                .map(|u| pack_key(&u.packed().expect("GF(2)"), *width))
                .collect();
            uni.sort_unstable();
            uni.dedup();
            for &u in &uni {
                let lo = keys.partition_point(|&k| k < u);
                let hi = keys.partition_point(|&k| k <= u);
                match hi - lo {
                    0 => {
                        uncovered += 1;
                        check.fail(Witness::Covered {
                            rows: unpack_key(u, t, *width),
                            codewords: Vec::new(),
                        });
                    }
                    1 => {}
                    _ => {
                        multiple += 1;
                        check.fail(Witness::Note(format!("a universe {t}-space is covered {} times", hi - lo)));
                    }
                }
            }
            outside = keys.iter().filter(|k| uni.binary_search(k).is_err()).count();
        }
        Keyer::Generic { .. } => {
            let mut keys = Vec::new();
            for &i in &idx {
                keyer.generic_keys(code.codeword(i), &mut keys)?;
            }
            keys.sort_unstable();
            let mut uni = universe.to_vec();
            uni.sort_unstable();
            uni.dedup();
            for u in &uni {
                let lo = keys.partition_point(|k| k < u);
                let hi = keys.partition_point(|k| k <= u);
                match hi - lo {
                    0 => {
                        uncovered += 1;
                        check.fail(Witness::Covered {
                            rows: subspace_rows(u),
                            codewords: Vec::new(),
                        });
                    }
                    1 => {}
                    _ => {
                        multiple += 1;
                        check.fail(Witness::Note(format!("a universe {t}-space is covered {} times", hi - lo)));
                    }
                }
            }
            outside = keys.iter().filter(|k| uni.binary_search(k).is_err()).count();
        }
    }
    check.note(format!(
        "codewords {}, incidences {total}, universe {}, uncovered {uncovered}, covered more than once {multiple}, incidences outside the universe {outside}",
        idx.len(),
        universe.len()
    ));
    report.checks.push(check);
    Ok(report)
}
