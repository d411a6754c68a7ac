use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::Subspace;

/// A constant-dimension code in `GF(q)^{2n}` with a family tag per codeword.
///
/// Codewords are kept in lexicographic order of canonical matrices. Codes
/// produced by the constructions never repeat a codeword; codes read from
/// outside may, and [`SubspaceCode::duplicate_count`] reports it.
///
/// Two codes are equal when their parameters, codewords and per-codeword tags
/// agree; the internal order of the tag table does not matter.
#[derive(Clone, Debug)]
pub struct SubspaceCode {
    q: u32,
    n: usize,
    construction: String,
    modulus: Vec<u32>,
    claimed_distance: usize,
    codewords: Vec<Subspace>,
    family_of: Vec<u16>,
    families: Vec<String>,
}

impl PartialEq for SubspaceCode {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
            && self.n == other.n
            && self.construction == other.construction
            && self.modulus == other.modulus
            && self.claimed_distance == other.claimed_distance
            && self.codewords == other.codewords
            && (0..self.codewords.len()).all(|i| self.tag(i) == other.tag(i))
    }
}

impl Eq for SubspaceCode {}

/// Whether a family tag is a non-empty run of printable ASCII without spaces.
pub fn valid_tag(tag: &str) -> bool {
    !tag.is_empty() && tag.bytes().all(|b| b.is_ascii_graphic())
}

impl SubspaceCode {
    /// Builds a code from tagged codewords already in non-decreasing order.
    pub fn from_sorted(
        q: u32,
        n: usize,
        construction: &str,
        modulus: Vec<u32>,
        claimed_distance: usize,
        entries: Vec<(Subspace, String)>,
    ) -> Result<Self> {
        let mut families: Vec<String> = Vec::new();
        let mut family_of = Vec::with_capacity(entries.len());
        let mut codewords = Vec::with_capacity(entries.len());
        for (i, (w, tag)) in entries.into_iter().enumerate() {
            if w.field_order() != q || w.ambient() != 2 * n || w.dim() != n {
                return Err(Error::Shape(format!("codeword {i} is not an {n}-space of GF({q})^{}", 2 * n)));
            }
            if !valid_tag(&tag) {
                return Err(Error::Parameter(format!("invalid family tag {tag:?}")));
            }
            if codewords.last().is_some_and(|prev: &Subspace| *prev > w) {
                return Err(Error::Parameter(format!("codeword {i} is out of order")));
            }
            let idx = match families.iter().position(|t| *t == tag) {
                Some(k) => k,
                None => {
                    families.push(tag);
                    families.len() - 1
                }
            };
            family_of.push(idx as u16);
            codewords.push(w);
        }
        Ok(SubspaceCode {
            q,
            n,
            construction: construction.to_string(),
            modulus,
            claimed_distance,
            codewords,
            family_of,
            families,
        })
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    /// Vector dimension of every codeword.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> usize {
        2 * self.n
    }

    pub fn construction(&self) -> &str {
        &self.construction
    }

    /// Modulus of `GF(q)` over its prime field, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn claimed_distance(&self) -> usize {
        self.claimed_distance
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codewords(&self) -> &[Subspace] {
        &self.codewords
    }

    pub fn codeword(&self, i: usize) -> &Subspace {
        &self.codewords[i]
    }

    pub fn tag(&self, i: usize) -> &str {
        &self.families[self.family_of[i] as usize]
    }

    /// Family tags in order of first appearance.
    pub fn families(&self) -> &[String] {
        &self.families
    }

    /// Index into [`Self::families`] for every codeword.
    pub fn family_indices(&self) -> &[u16] {
        &self.family_of
    }

    /// Codeword count per family, in order of first appearance.
    pub fn tag_counts(&self) -> Vec<(String, usize)> {
        let mut counts: Vec<(String, usize)> = self.families.iter().map(|t| (t.clone(), 0)).collect();
        for &k in &self.family_of {
            counts[k as usize].1 += 1;
        }
        counts
    }

    pub fn count_of(&self, tag: &str) -> usize {
        match self.families.iter().position(|t| t == tag) {
            Some(k) => self.family_of.iter().filter(|&&x| x as usize == k).count(),
            None => 0,
        }
    }

    /// Number of codewords equal to their predecessor.
    pub fn duplicate_count(&self) -> usize {
        self.codewords.windows(2).filter(|w| w[0] == w[1]).count()
    }

    /// Codewords of the given family.
    pub fn family(&self, tag: &str) -> Vec<&Subspace> {
        (0..self.len()).filter(|&i| self.tag(i) == tag).map(|i| &self.codewords[i]).collect()
    }
}

/// Collects tagged codewords and produces a sorted, duplicate-free code.
///
/// Repeats inside one family are merged silently; a codeword claimed by two
/// different families is an error.
#[derive(Clone, Debug, Default)]
pub struct CodeBuilder {
    entries: Vec<(Subspace, u16)>,
    families: Vec<String>,
}

impl CodeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn family_index(&mut self, tag: &str) -> Result<u16> {
        if !valid_tag(tag) {
            return Err(Error::Parameter(format!("invalid family tag {tag:?}")));
        }
        Ok(match self.families.iter().position(|t| t == tag) {
            Some(k) => k as u16,
            None => {
                self.families.push(tag.to_string());
                (self.families.len() - 1) as u16
            }
        })
    }

    pub fn add(&mut self, tag: &str, w: Subspace) -> Result<()> {
        let k = self.family_index(tag)?;
        self.entries.push((w, k));
        Ok(())
    }

    pub fn extend(&mut self, tag: &str, ws: impl IntoIterator<Item = Subspace>) -> Result<()> {
        let k = self.family_index(tag)?;
        self.entries.extend(ws.into_iter().map(|w| (w, k)));
        Ok(())
    }

    pub fn finish(mut self, q: u32, n: usize, construction: &str, modulus: Vec<u32>, d: usize) -> Result<SubspaceCode> {
        self.entries.sort_unstable();
        let mut out: Vec<(Subspace, String)> = Vec::with_capacity(self.entries.len());
        let mut last: Option<(Subspace, u16)> = None;
        for (w, k) in self.entries {
            if let Some((pw, pk)) = &last {
                if *pw == w {
                    if *pk != k {
                        return Err(Error::Verification(format!(
                            "a codeword lies in both {} and {}",
                            self.families[*pk as usize], self.families[k as usize]
                        )));
                    }
                    continue;
                }
            }
            out.push((w.clone(), self.families[k as usize].clone()));
            last = Some((w, k));
        }
        // Keep families in the order they were added rather than sort order.
        let mut code = SubspaceCode::from_sorted(q, n, construction, modulus, d, out)?;
        let order: Vec<usize> = self
            .families
            .iter()
            .filter_map(|t| code.families.iter().position(|c| c == t))
            .collect();
        let remap: Vec<u16> = (0..code.families.len())
            .map(|old| order.iter().position(|&o| o == old).unwrap() as u16)
            .collect();
        code.families = order.iter().map(|&o| code.families[o].clone()).collect();
        for k in code.family_of.iter_mut() {
            *k = remap[*k as usize];
        }
        Ok(code)
    }
}
