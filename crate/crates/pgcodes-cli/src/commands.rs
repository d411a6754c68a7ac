use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use pgcodes::constructions::{code_pg7_with_report, construct, Pg7Route, SubspaceCode};
use pgcodes::geometry::census;
use pgcodes::verify::{
    cardinality_check, covering_check, expected_families, min_distance, Mode, VerificationReport,
    DEFAULT_INCIDENCE_BUDGET, DEFAULT_PAIR_BUDGET,
};
use thiserror::Error;

use crate::codefile::{read_code, write_code, FormatError, TOOL_VERSION};

/// Environment variable that replaces the pair and incidence budgets.
pub const BUDGET_VAR: &str = "PGCODES_PAIR_BUDGET";

/// Process exit statuses.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Code(#[from] pgcodes::Error),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    /// Verification failures inside the library exit with 1, everything else
    /// that stops a command from running exits with 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Code(pgcodes::Error::Verification(_))
            | CliError::Code(pgcodes::Error::Cardinality { .. })
            | CliError::Code(pgcodes::Error::NoSeed(_)) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Budget from the environment, or the default.
pub fn budget_from_env() -> CliResult<Option<u128>> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u128>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR}={v:?} is not a non-negative integer"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Usage(format!("{BUDGET_VAR}: {e}"))),
    }
}

fn check_params(construction: &str, q: u32, n: usize) -> CliResult<()> {
    let bad = match construction {
        "even" if n % 2 != 0 || n < 4 => Some("even needs n even and at least 4"),
        "odd" if n % 2 == 0 || n < 5 => Some("odd needs n odd and at least 5"),
        "pg7" if n != 4 => Some("pg7 needs n = 4"),
        "prop32" if n < 2 => Some("prop32 needs n at least 2"),
        _ => None,
    };
    if let Some(msg) = bad {
        return Err(CliError::Usage(format!("{msg} (got q={q}, n={n})")));
    }
    Ok(())
}

pub fn cmd_construct(q: u32, n: usize, construction: &str, out: &Path, w: &mut dyn Write) -> CliResult<i32> {
    check_params(construction, q, n)?;
    let started = Instant::now();
    let (code, route) = if construction == "pg7" {
        let (code, report) = code_pg7_with_report(q)?;
        (code, Some(report))
    } else {
        (construct(construction, n, q)?, None)
    };
    let (rows, total) = expected_families(&code)?;
    writeln!(w, "construction {construction} q={q} n={n}")?;
    for (tag, expected) in &rows {
        writeln!(w, "  {tag:<12} {:>12}  (census {expected})", code.count_of(tag))?;
    }
    writeln!(w, "M = {}", code.len())?;
    writeln!(w, "census M = {total}")?;
    if let Some(r) = &route {
        let name = match r.route {
            Pg7Route::Orbit => "orbit",
            Pg7Route::Exchange => "exchange",
        };
        writeln!(w, "route = {name}")?;
        writeln!(w, "orbit sizes = {:?}", r.orbit_sizes)?;
        if let Some(g) = r.group_order {
            writeln!(w, "group order = {g}")?;
        }
    }
    let card = cardinality_check(&code)?;
    if !card.passed() {
        write!(w, "{}", card.to_text())?;
        writeln!(w, "not written: the code disagrees with the census")?;
        return Ok(EXIT_FAIL);
    }
    let text = write_code(&code, TOOL_VERSION);
    std::fs::write(out, text).map_err(|source| CliError::Io {
        path: out.to_path_buf(),
        source,
    })?;
    writeln!(w, "wrote {} ({} ms)", out.display(), started.elapsed().as_millis())?;
    Ok(EXIT_PASS)
}

/// Checks accepted by `verify --checks`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Distance,
    Cover,
    Cardinality,
}

pub fn load(path: &Path) -> CliResult<SubspaceCode> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_code(&text)
        .map(|f| f.code)
        .map_err(|source| CliError::Format {
            path: path.to_path_buf(),
            source,
        })
}

/// Dimension of the subspaces whose multiplicity decides the distance:
/// distance `d` holds iff no `(n + 1 - d/2)`-space lies in two codewords.
pub fn cover_dimension(code: &SubspaceCode) -> CliResult<usize> {
    let (n, d) = (code.n(), code.claimed_distance());
    if d < 2 || d % 2 != 0 || d > 2 * n {
        return Err(CliError::Usage(format!("claimed distance {d} is not an even value in 2..={}", 2 * n)));
    }
    Ok(n + 1 - d / 2)
}

pub fn cmd_verify(path: &Path, checks: &[Check], mode: Mode, w: &mut dyn Write) -> CliResult<i32> {
    let budget = budget_from_env()?;
    let code = load(path)?;
    let started = Instant::now();
    let mut report = VerificationReport::for_code(&code);
    for check in checks {
        let part = match check {
            Check::Distance => min_distance(&code, &mode, budget.unwrap_or(DEFAULT_PAIR_BUDGET))?,
            Check::Cover => covering_check(
                &code,
                cover_dimension(&code)?,
                budget.unwrap_or(DEFAULT_INCIDENCE_BUDGET),
            )?,
            Check::Cardinality => cardinality_check(&code)?,
        };
        report.merge(part);
    }
    report.wall_time_ms = Some(started.elapsed().as_millis());
    write!(w, "{}", report.to_text())?;
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

pub fn cmd_formulas(q: u64, n: u64, w: &mut dyn Write) -> CliResult<i32> {
    writeln!(w, "census values for q={q} n={n}")?;
    for (name, value) in census::formula_table(q, n) {
        match value {
            Ok(v) => writeln!(w, "{name} = {v}")?,
            Err(e) => writeln!(w, "{name} = undefined ({e})")?,
        }
    }
    Ok(EXIT_PASS)
}
