//! The `SCODE v1` text format.
//!
//! ```text
//! SCODE v1
//! q=2 n=4 N=8 M=4797 d=4 construction=pg7 modulus=1,1 tool=0.1.0
//! # 0 L1
//! 10000000
//! ...
//!
//! # 1 L1
//! ...
//! ```
//!
//! Each block is the canonical reduced basis of one codeword, one base-36
//! digit per field element. The reader rejects anything it would not write.

use std::fmt::Write as _;

use pgcodes::algebra::{Field, Matrix};
use pgcodes::constructions::{valid_tag, SubspaceCode};
use pgcodes::geometry::Subspace;
use thiserror::Error;

pub const MAGIC: &str = "SCODE v1";

/// The version recorded by files written from this build.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Header { line: usize, msg: String },
    #[error("line {line}: block {block}: {msg}")]
    Block { line: usize, block: usize, msg: String },
    #[error("header declares M={declared} but the file has {found} blocks")]
    Count { declared: usize, found: usize },
    #[error("block {block} is out of lexicographic order")]
    Order { block: usize },
    #[error(transparent)]
    Code(#[from] pgcodes::Error),
}

/// A parsed code file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    /// Version of the tool that wrote the file.
    pub tool: String,
    pub code: SubspaceCode,
}

fn modulus_text(m: &[u32]) -> String {
    m.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Serializes a code with the given tool version.
pub fn write_code(code: &SubspaceCode, tool: &str) -> String {
    let n = code.n();
    let ambient = code.ambient();
    let mut out = String::with_capacity(64 + code.len() * (16 + n * (ambient + 1)));
    out.push_str(MAGIC);
    out.push('\n');
    let _ = writeln!(
        out,
        "q={} n={} N={} M={} d={} construction={} modulus={} tool={}",
        code.field_order(),
        n,
        ambient,
        code.len(),
        code.claimed_distance(),
        code.construction(),
        modulus_text(code.modulus()),
        tool
    );
    for (i, w) in code.codewords().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# {i} {}", code.tag(i));
        for r in 0..w.dim() {
            for &x in w.row(r) {
                out.push(char::from_digit(x as u32, 36).expect("q <= 36"));
            }
            out.push('\n');
        }
    }
    out
}

struct Header {
    q: u32,
    n: usize,
    m: usize,
    d: usize,
    construction: String,
    modulus: Vec<u32>,
    tool: String,
}

fn header_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Header { line, msg: msg.into() }
}

fn parse_header(text: &str) -> Result<Header, FormatError> {
    const KEYS: [&str; 8] = ["q", "n", "N", "M", "d", "construction", "modulus", "tool"];
    let fields: Vec<&str> = text.split(' ').collect();
    if fields.len() != KEYS.len() {
        return Err(header_err(2, format!("expected {} fields, found {}", KEYS.len(), fields.len())));
    }
    let mut values = Vec::with_capacity(KEYS.len());
    for (field, key) in fields.iter().zip(KEYS) {
        match field.split_once('=') {
            Some((k, v)) if k == key && !v.is_empty() => values.push(v),
            _ => return Err(header_err(2, format!("expected {key}=<value>, found {field:?}"))),
        }
    }
    let int = |i: usize| -> Result<usize, FormatError> {
        let v = values[i];
        if v.len() > 1 && v.starts_with('0') {
            return Err(header_err(2, format!("{}={v} has a leading zero", KEYS[i])));
        }
        v.parse::<usize>()
            .map_err(|_| header_err(2, format!("{}={v} is not a non-negative integer", KEYS[i])))
    };
    let q = int(0)?;
    let n = int(1)?;
    let ambient = int(2)?;
    let m = int(3)?;
    let d = int(4)?;
    if !(2..=36).contains(&q) {
        return Err(header_err(2, format!("q={q} outside 2..=36")));
    }
    if n == 0 || ambient != 2 * n {
        return Err(header_err(2, format!("N={ambient} must equal 2n={}", 2 * n)));
    }
    let modulus = values[6]
        .split(',')
        .map(|c| c.parse::<u32>())
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| header_err(2, format!("modulus={} is not a comma-separated list", values[6])))?;
    let field = Field::of_order(q as u32).map_err(|e| header_err(2, e.to_string()))?;
    if field.modulus() != modulus.as_slice() {
        return Err(header_err(
            2,
            format!(
                "modulus={} differs from the table modulus {} of GF({q})",
                values[6],
                modulus_text(field.modulus())
            ),
        ));
    }
    if !values[5].bytes().all(|b| b.is_ascii_alphanumeric()) {
        return Err(header_err(2, format!("construction={} is not alphanumeric", values[5])));
    }
    Ok(Header {
        q: q as u32,
        n,
        m,
        d,
        construction: values[5].to_string(),
        modulus,
        tool: values[7].to_string(),
    })
}

/// Parses a code file, rejecting non-canonical or inconsistent content.
pub fn read_code(text: &str) -> Result<CodeFile, FormatError> {
    if let Some(pos) = text.find('\r') {
        let line = text[..pos].matches('\n').count() + 1;
        return Err(header_err(line, "carriage return found; lines must end in LF"));
    }
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, l)) if l == MAGIC => {}
        _ => return Err(header_err(1, format!("first line must be {MAGIC:?}"))),
    }
    let header = match lines.next() {
        Some((_, l)) => parse_header(l)?,
        None => return Err(header_err(2, "missing parameter line")),
    };
    let (q, n) = (header.q, header.n);
    let mut entries: Vec<(Subspace, String)> = Vec::with_capacity(header.m);
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n);
    loop {
        let block = entries.len();
        let (line, title) = match lines.next() {
            Some(x) => x,
            None => break,
        };
        if title.is_empty() && block == 0 {
            // empty code: the file ends right after the parameter line
            if lines.next().is_none() {
                break;
            }
            return Err(header_err(line, "unexpected blank line"));
        }
        let berr = |line: usize, msg: String| FormatError::Block { line, block, msg };
        let tag = match title.strip_prefix("# ").and_then(|r| r.split_once(' ')) {
            Some((idx, tag)) if idx == block.to_string() && valid_tag(tag) => tag,
            _ => return Err(berr(line, format!("expected \"# {block} <tag>\", found {title:?}"))),
        };
        rows.clear();
        for _ in 0..n {
            let (line, row) = lines
                .next()
                .ok_or_else(|| berr(line, "file ends inside a block".into()))?;
            if row.len() != 2 * n {
                return Err(berr(line, format!("row has {} characters, expected {}", row.len(), 2 * n)));
            }
            let mut v = Vec::with_capacity(2 * n);
            for c in row.chars() {
                match c.to_digit(36) {
                    Some(x) if x < q && !c.is_ascii_uppercase() => v.push(x),
                    _ => return Err(berr(line, format!("{c:?} is not a digit of GF({q})"))),
                }
            }
            rows.push(v);
        }
        let m = Matrix::from_rows(q, &rows)?;
        let w = Subspace::from_canonical(&m).map_err(|e| berr(line + 1, e.to_string()))?;
        if entries.last().is_some_and(|(prev, _)| *prev > w) {
            return Err(FormatError::Order { block });
        }
        entries.push((w, tag.to_string()));
        match lines.next() {
            None => break,
            Some((_, "")) => {}
            Some((l, other)) => return Err(berr(l, format!("expected a blank line, found {other:?}"))),
        }
    }
    // The writer ends the last block with a newline, which split() turns
    // into one trailing empty line; a missing final newline is rejected.
    if !entries.is_empty() && !text.ends_with('\n') {
        return Err(header_err(text.lines().count(), "missing final newline"));
    }
    if entries.len() != header.m {
        return Err(FormatError::Count {
            declared: header.m,
            found: entries.len(),
        });
    }
    let code = SubspaceCode::from_sorted(q, n, &header.construction, header.modulus, header.d, entries)?;
    Ok(CodeFile { tool: header.tool, code })
}
