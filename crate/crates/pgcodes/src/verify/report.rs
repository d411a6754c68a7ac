use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::constructions::SubspaceCode;

/// Failing pairs or subspaces kept per check.
pub const WITNESS_CAP: usize = 16;

/// Concrete evidence for a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two codewords (by index) and the dimension of their intersection.
    Pair { first: usize, second: usize, meet: usize },
    /// A subspace, given by its rows, and the codewords containing it.
    Covered { rows: Vec<Vec<u32>>, codewords: Vec<usize> },
    /// Free-form evidence such as a matrix or a count delta.
    Note(String),
}

impl core::fmt::Display for Witness {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Witness::Pair { first, second, meet } => write!(f, "codewords {first} and {second} meet in dimension {meet}"),
            Witness::Covered { rows, codewords } => {
                write!(f, "subspace [")?;
                for (i, r) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    for &x in r {
                        write!(f, "{}", char::from_digit(x, 36).unwrap_or('?'))?;
                    }
                }
                write!(f, "] lies in codewords {codewords:?}")
            }
            Witness::Note(s) => f.write_str(s),
        }
    }
}

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: Vec<String>,
    pub witnesses: Vec<Witness>,
}

impl CheckResult {
    pub fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: true,
            detail: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn note(&mut self, line: String) {
        self.detail.push(line);
    }

    /// Marks the check failed, keeping the witness if there is room.
    pub fn fail(&mut self, w: Witness) {
        self.passed = false;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(w);
        }
    }
}

/// How distances were examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
    /// Linear blocks by rank, non-lifted codewords exhaustively, cross pairs
    /// exhaustively within budget and sampled beyond it.
    Structured { seed: u64, samples: u64 },
}

pub const DEFAULT_SEED: u64 = 0xC0DE;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_PAIR_BUDGET: u128 = 100_000_000;

impl core::fmt::Display for Mode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sampled { seed, samples } => write!(f, "sampled(seed={seed:#x},samples={samples})"),
            Mode::Structured { seed, samples } => write!(f, "structured(seed={seed:#x},samples={samples})"),
        }
    }
}

/// Outcome of one or more checks on a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub code: String,
    pub size: usize,
    pub checks: Vec<CheckResult>,
    pub d_measured: Option<usize>,
    pub pairs: u128,
    pub mode: Option<Mode>,
    /// Filled in by callers that can read a clock.
    pub wall_time_ms: Option<u128>,
}

/// `name(q=.., n=..)` identity of a code.
pub fn code_identity(code: &SubspaceCode) -> String {
    format!("{}(q={},n={})", code.construction(), code.field_order(), code.n())
}

impl VerificationReport {
    pub fn new(code: String, size: usize) -> Self {
        VerificationReport {
            code,
            size,
            checks: Vec::new(),
            d_measured: None,
            pairs: 0,
            mode: None,
            wall_time_ms: None,
        }
    }

    pub fn for_code(code: &SubspaceCode) -> Self {
        Self::new(code_identity(code), code.len())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Appends the checks of `other`, keeping the smaller measured distance.
    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.pairs += other.pairs;
        self.d_measured = match (self.d_measured, other.d_measured) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if other.mode.is_some() {
            self.mode = other.mode;
        }
        if let Some(t) = other.wall_time_ms {
            self.wall_time_ms = Some(self.wall_time_ms.unwrap_or(0) + t);
        }
    }

    /// Stable `key=value` lines.
    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        out.push(("code".into(), self.code.clone()));
        out.push(("M".into(), self.size.to_string()));
        out.push((
            "d_measured".into(),
            self.d_measured.map_or_else(|| "none".into(), |d| d.to_string()),
        ));
        out.push((
            "mode".into(),
            self.mode.as_ref().map_or_else(|| "none".into(), |m| m.to_string()),
        ));
        out.push(("pairs".into(), self.pairs.to_string()));
        out.push(("checks".into(), self.checks.iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(",")));
        if let Some(t) = self.wall_time_ms {
            out.push(("wall_time_ms".into(), t.to_string()));
        }
        out.push(("result".into(), if self.passed() { "pass" } else { "fail" }.into()));
        out
    }

    /// Human-readable block followed by the `key=value` section.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "verification of {} ({} codewords)", self.code, self.size);
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            for d in &c.detail {
                let _ = writeln!(s, "    {d}");
            }
            for w in &c.witnesses {
                let _ = writeln!(s, "    witness: {w}");
            }
        }
        let _ = writeln!(s, "---");
        for (k, v) in self.key_values() {
            let _ = writeln!(s, "{k}={v}");
        }
        s
    }
}
