use std::fs;
use std::path::Path;

use serde::Serialize;

use super::{normalize, Token};
use crate::error::{Error, Result};
use crate::sense_class::SenseClass;

const BUNDLED: &str = include_str!("../../data/wh_table.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhEntry {
    /// Normalized phrase split into words; one or more.
    pub words: Vec<String>,
    pub class: SenseClass,
}

impl WhEntry {
    pub fn phrase(&self) -> String {
        self.words.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WhMatch {
    pub phrase: String,
    pub class: SenseClass,
    /// Token index of the first word of the phrase.
    #[serde(skip)]
    pub start: usize,
    #[serde(skip)]
    pub len: usize,
}

/// Ordered table of interrogative words and phrases with their answer class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhTable {
    entries: Vec<WhEntry>,
}

impl WhTable {
    /// The 22-row default table.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED, "wh_table.tsv").expect("bundled wh table is well formed")
    }

    pub fn new(entries: Vec<WhEntry>) -> Self {
        WhTable { entries }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path.display().to_string())
    }

    /// Parses `phrase<TAB>class` rows. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Self> {
        let source = source.into();
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 2 {
                return Err(Error::parse(
                    &source,
                    lineno,
                    format!("expected 2 columns, found {}", cols.len()),
                ));
            }
            let words: Vec<String> = normalize(cols[0])
                .split_whitespace()
                .map(str::to_string)
                .collect();
            if words.is_empty() {
                return Err(Error::parse(&source, lineno, "empty phrase"));
            }
            let class = cols[1]
                .trim()
                .parse::<SenseClass>()
                .map_err(|e| Error::parse(&source, lineno, e.to_string()))?;
            entries.push(WhEntry { words, class });
        }
        Ok(WhTable { entries })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.phrase());
            out.push('\t');
            out.push_str(e.class.as_str());
            out.push('\n');
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_tsv()).map_err(|e| Error::io(path, e))
    }

    pub fn entries(&self) -> &[WhEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Longest entry matching at `pos`; among equally long entries the
    /// earliest in table order wins.
    fn longest_at<S: AsRef<str>>(&self, surfaces: &[S], pos: usize) -> Option<&WhEntry> {
        let rest = &surfaces[pos..];
        let mut best: Option<&WhEntry> = None;
        for e in &self.entries {
            if e.words.len() > rest.len() {
                continue;
            }
            let hit = e.words.iter().zip(rest).all(|(w, s)| w == s.as_ref());
            if hit && best.is_none_or(|b| e.words.len() > b.words.len()) {
                best = Some(e);
            }
        }
        best
    }

    /// First match scanning left to right, preferring the longest phrase at
    /// each position.
    pub fn lookup_surfaces<S: AsRef<str>>(&self, surfaces: &[S]) -> Option<WhMatch> {
        (0..surfaces.len()).find_map(|pos| {
            self.longest_at(surfaces, pos).map(|e| WhMatch {
                phrase: e.phrase(),
                class: e.class,
                start: pos,
                len: e.words.len(),
            })
        })
    }

    pub fn lookup(&self, tokens: &[Token]) -> Option<WhMatch> {
        let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
        self.lookup_surfaces(&surfaces)
    }

    /// Marks every position covered by some entry (any length).
    pub(crate) fn coverage<S: AsRef<str>>(&self, surfaces: &[S]) -> Vec<bool> {
        let mut covered = vec![false; surfaces.len()];
        for pos in 0..surfaces.len() {
            if let Some(e) = self.longest_at(surfaces, pos) {
                covered[pos..pos + e.words.len()].fill(true);
            }
        }
        covered
    }
}

/// Free-function form of [`WhTable::lookup`].
pub fn wh_lookup(tokens: &[Token], table: &WhTable) -> Option<WhMatch> {
    table.lookup(tokens)
}
