use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{CheckResult, Mode, VerificationReport, Witness};
use crate::algebra::{bits, Field, Matrix};
use crate::constructions::SubspaceCode;
use crate::error::{Error, Result};
use crate::geometry::Subspace;
use crate::rankcodes::{scan_ranks, DEFAULT_MEMBER_BUDGET};

/// Codewords in a form suited to many intersection computations.
pub(crate) enum Store<'a> {
    Packed { rows: Vec<u64>, n: usize },
    Generic { words: &'a [Subspace], f: Field },
}

impl<'a> Store<'a> {
    pub(crate) fn new(code: &'a SubspaceCode) -> Result<Self> {
        let n = code.n();
        if code.field_order() == 2 && code.ambient() <= 64 {
            let mut rows = Vec::with_capacity(code.len() * n);
            for w in code.codewords() {
                rows.extend(w.packed().expect("GF(2) rows fit in a word"));
            }
            Ok(Store::Packed { rows, n })
        } else {
            Ok(Store::Generic {
                words: code.codewords(),
                f: Field::of_order(code.field_order())?,
            })
        }
    }

    #[inline]
    pub(crate) fn meet(&self, i: usize, j: usize) -> usize {
        match self {
            Store::Packed { rows, n } => {
                2 * n - bits::joint_rank(&rows[i * n..(i + 1) * n], &rows[j * n..(j + 1) * n])
            }
            Store::Generic { words, f } => words[i]
                .meet_dim(&words[j], f)
                .expect("codewords share field and ambient"),
        }
    }
}

/// Running minimum with witnesses for pairs below the claimed distance.
struct Tally<'c> {
    n: usize,
    claimed: usize,
    min: Option<usize>,
    pairs: u128,
    check: &'c mut CheckResult,
}

impl Tally<'_> {
    #[inline]
    fn record(&mut self, i: usize, j: usize, meet: usize) {
        let d = 2 * (self.n - meet);
        self.pairs += 1;
        if self.min.is_none_or(|m| d < m) {
            self.min = Some(d);
        }
        if d < self.claimed {
            let (first, second) = if i < j { (i, j) } else { (j, i) };
            self.check.fail(Witness::Pair { first, second, meet });
        }
    }
}

fn pair_count(m: usize) -> u128 {
    let m = m as u128;
    m * m.saturating_sub(1) / 2
}

fn over_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Minimum subspace distance in the requested mode; the check passes iff
/// every examined pair is at distance at least the claimed `d`.
pub fn min_distance(code: &SubspaceCode, mode: &Mode, budget: u128) -> Result<VerificationReport> {
    let mut report = VerificationReport::for_code(code);
    let mut check = CheckResult::new("distance");
    let store = Store::new(code)?;
    let mut tally = Tally {
        n: code.n(),
        claimed: code.claimed_distance(),
        min: None,
        pairs: 0,
        check: &mut check,
    };
    let m = code.len();
    match mode {
        Mode::Exhaustive => {
            over_budget(pair_count(m), budget)?;
            for i in 0..m {
                for j in i + 1..m {
                    tally.record(i, j, store.meet(i, j));
                }
            }
        }
        Mode::Sampled { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            if m >= 2 {
                for _ in 0..*samples {
                    let i = rng.random_range(0..m);
                    let mut j = rng.random_range(0..m - 1);
                    if j >= i {
                        j += 1;
                    }
                    tally.record(i, j, store.meet(i, j));
                }
            }
        }
        Mode::Structured { seed, samples } => structured(code, &store, &mut tally, *seed, *samples, budget)?,
    }
    let (min, pairs) = (tally.min, tally.pairs);
    match mode {
        Mode::Exhaustive => check.note(format!("all {pairs} pairs examined")),
        Mode::Sampled { .. } => check.note(format!(
            "{pairs} random pairs examined; the minimum over the whole code is not established"
        )),
        Mode::Structured { .. } => {}
    }
    check.note(format!(
        "measured minimum distance {} (claimed {})",
        min.map_or_else(|| "none".into(), |d| format!("{d}")),
        code.claimed_distance()
    ));
    report.d_measured = min;
    report.pairs = pairs;
    report.mode = Some(mode.clone());
    report.checks.push(check);
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Block {
    Left,
    Right,
    Other,
}

fn classify(w: &Subspace, f: &Field) -> Result<(Block, Option<Vec<u32>>)> {
    let n = w.dim();
    if w.pivots().iter().enumerate().all(|(i, &p)| p == i) {
        let a = w.basis().submatrix(0..n, n..2 * n);
        return Ok((Block::Left, Some(a.data().to_vec())));
    }
    let b = w.basis();
    let right = b.submatrix(0..n, n..2 * n);
    if right.rank(f)? == n {
        let a = right.inverse(f)?.mul(&b, f)?.submatrix(0..n, 0..n);
        return Ok((Block::Right, Some(a.data().to_vec())));
    }
    Ok((Block::Other, None))
}

/// Span of a list of vectors, reduced in batches.
fn span_of(vectors: &[Vec<u32>], len: usize, f: &Field) -> Result<Subspace> {
    let mut basis: Vec<Vec<u32>> = Vec::new();
    for chunk in vectors.chunks(256) {
        let mut rows = basis.clone();
        rows.extend(chunk.iter().cloned());
        let r = Matrix::from_rows(f.order(), &rows)?.rref(f)?;
        basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        if basis.len() == len {
            break;
        }
    }
    if basis.is_empty() {
        return Ok(Subspace::zero(f.order(), len));
    }
    Subspace::from_rows(&Matrix::from_rows(f.order(), &basis)?, f)
}

fn structured(
    code: &SubspaceCode,
    store: &Store<'_>,
    tally: &mut Tally<'_>,
    seed: u64,
    samples: u64,
    budget: u128,
) -> Result<()> {
    let f = Field::of_order(code.field_order())?;
    let n = code.n();
    let words = code.codewords();
    let mut dups = 0usize;
    for i in 1..words.len() {
        if words[i - 1] == words[i] {
            dups += 1;
            tally.record(i - 1, i, n);
        }
    }
    tally.check.note(format!("duplicate codewords: {dups}"));
    let mut groups: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut mats: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
    for (i, w) in words.iter().enumerate() {
        let (block, a) = classify(w, &f)?;
        match block {
            Block::Left => {
                groups[0].push(i);
                mats[0].push(a.unwrap());
            }
            Block::Right => {
                groups[1].push(i);
                mats[1].push(a.unwrap());
            }
            Block::Other => groups[2].push(i),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = ["left lifts (I | A)", "right lifts (A | I)"];
    for k in 0..2 {
        let members = &groups[k];
        if members.len() < 2 {
            tally.check.note(format!("{}: {} codewords", names[k], members.len()));
            continue;
        }
        let span = span_of(&mats[k], n * n, &f)?;
        let scan = scan_ranks(&span, n, &f, DEFAULT_MEMBER_BUDGET);
        let bound = scan.as_ref().ok().and_then(|s| s.min_nonzero).map(|r| 2 * r);
        match bound {
            Some(b) if b >= tally.claimed => {
                let exact = (f.order() as u128).checked_pow(span.dim() as u32) == Some(members.len() as u128);
                tally.check.note(format!(
                    "{}: {} codewords, matrix span of dimension {}, min nonzero rank {}, distance {} {}",
                    names[k],
                    members.len(),
                    span.dim(),
                    b / 2,
                    if exact { "=" } else { ">=" },
                    b
                ));
                if tally.min.is_none_or(|m| b < m) {
                    tally.min = Some(b);
                }
            }
            _ => {
                tally.check.note(format!(
                    "{}: {} codewords, rank bound inconclusive, checking pairs",
                    names[k],
                    members.len()
                ));
                within(members, store, tally, &mut rng, samples, budget);
            }
        }
    }
    let others = &groups[2];
    tally.check.note(format!("non-lifted codewords: {}", others.len()));
    if pair_count(others.len()) > budget {
        return Err(Error::BudgetExceeded {
            needed: pair_count(others.len()),
            budget,
        });
    }
    within(others, store, tally, &mut rng, samples, budget);
    let blocks = [(0, 1, "left x right"), (0, 2, "left x non-lifted"), (1, 2, "right x non-lifted")];
    for (a, b, label) in blocks {
        let (ga, gb) = (&groups[a], &groups[b]);
        let needed = ga.len() as u128 * gb.len() as u128;
        if needed == 0 {
            continue;
        }
        if needed <= budget {
            for &i in ga {
                for &j in gb {
                    tally.record(i, j, store.meet(i, j));
                }
            }
            tally.check.note(format!("{label}: all {needed} pairs examined"));
        } else {
            for _ in 0..samples {
                let i = ga[rng.random_range(0..ga.len())];
                let j = gb[rng.random_range(0..gb.len())];
                tally.record(i, j, store.meet(i, j));
            }
            tally.check.note(format!(
                "{label}: {samples} of {needed} pairs sampled (seed {seed:#x}); not exhaustive"
            ));
        }
    }
    Ok(())
}

fn within(members: &[usize], store: &Store<'_>, tally: &mut Tally<'_>, rng: &mut ChaCha8Rng, samples: u64, budget: u128) {
    let needed = pair_count(members.len());
    if needed <= budget {
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                tally.record(i, j, store.meet(i, j));
            }
        }
    } else {
        for _ in 0..samples {
            let x = rng.random_range(0..members.len());
            let mut y = rng.random_range(0..members.len() - 1);
            if y >= x {
                y += 1;
            }
            tally.record(members[x], members[y], store.meet(members[x], members[y]));
        }
        tally.check.note(format!("{samples} of {needed} pairs sampled within a block; not exhaustive"));
    }
}
