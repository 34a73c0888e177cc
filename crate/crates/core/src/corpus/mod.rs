//! Corpus ingestion and the searchable sentence index.
//!
//! Two input formats are accepted:
//!
//! * **plain**: one sentence per line, `#` lines ignored, ids assigned
//!   `0..n` in file order and category `default`;
//! * **tsv**: `id<TAB>category<TAB>sense<TAB>text<TAB>tags`, where `sense` is
//!   a lowercase class name or `-`, and `tags` is `-` (auto-tag) or a
//!   space-separated tag list aligned one-to-one with the tokens of `text`.

mod index;
mod store;

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

pub use index::CorpusIndex;
pub use store::{decode, encode, load_index, save_index, MAGIC, VERSION};

use crate::error::{Error, Result};
use crate::sense_class::SenseClass;
use crate::text::{normalize, tokenize, PosTag, Tagger, Token};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sentence {
    pub id: u32,
    /// Normalized text, punctuation included.
    pub text: String,
    pub tokens: Vec<Token>,
    pub category: String,
    pub gold_sense: Option<SenseClass>,
}

impl Sentence {
    /// Normalizes, tokenizes and tags `text`.
    pub fn from_text(id: u32, text: &str, tagger: &Tagger) -> Self {
        let text = normalize(text);
        let tokens = tagger.tag(&tokenize(&text));
        Sentence {
            id,
            text,
            tokens,
            category: DEFAULT_CATEGORY.to_string(),
            gold_sense: None,
        }
    }

    pub fn content_tokens(&self) -> impl Iterator<Item = (usize, &Token)> {
        self.tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_content())
    }
}

pub const DEFAULT_CATEGORY: &str = "default";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Tsv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "tsv" => Ok(Format::Tsv),
            other => Err(Error::Config(format!("unknown corpus format `{other}`"))),
        }
    }
}

pub fn ingest(path: impl AsRef<Path>, format: Format, tagger: &Tagger) -> Result<Vec<Sentence>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    ingest_str(&text, &path.display().to_string(), format, tagger)
}

pub fn ingest_str(
    text: &str,
    source: &str,
    format: Format,
    tagger: &Tagger,
) -> Result<Vec<Sentence>> {
    match format {
        Format::Plain => Ok(text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .enumerate()
            .map(|(i, l)| Sentence::from_text(i as u32, l, tagger))
            .collect()),
        Format::Tsv => {
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() || line.starts_with('#') {
                    continue;
                }
                let s = parse_tsv_row(line, source, i + 1, tagger)?;
                if !seen.insert(s.id) {
                    return Err(Error::parse(
                        source,
                        i + 1,
                        format!("duplicate id {}", s.id),
                    ));
                }
                out.push(s);
            }
            Ok(out)
        }
    }
}

fn parse_tsv_row(line: &str, source: &str, lineno: usize, tagger: &Tagger) -> Result<Sentence> {
    let err = |msg: String| Error::parse(source, lineno, msg);
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 5 {
        return Err(err(format!("expected 5 columns, found {}", cols.len())));
    }
    let id = cols[0]
        .trim()
        .parse::<u32>()
        .map_err(|_| err(format!("invalid sentence id `{}`", cols[0])))?;
    let category = cols[1].trim();
    if category.is_empty() {
        return Err(err("empty category".into()));
    }
    let gold_sense = match cols[2].trim() {
        "-" => None,
        s => Some(s.parse::<SenseClass>().map_err(|e| err(e.to_string()))?),
    };
    let text = normalize(cols[3]);
    let surfaces = tokenize(&text);
    if surfaces.is_empty() {
        return Err(err("sentence has no tokens".into()));
    }
    let tokens = match cols[4].trim() {
        "-" => tagger.tag(&surfaces),
        tags => {
            let tags: Vec<&str> = tags.split_whitespace().collect();
            if tags.len() != surfaces.len() {
                return Err(err(format!(
                    "{} tags for {} tokens",
                    tags.len(),
                    surfaces.len()
                )));
            }
            surfaces
                .iter()
                .zip(tags)
                .map(|(s, t)| Token::new(*s, PosTag::from_raw(t)))
                .collect()
        }
    };
    Ok(Sentence {
        id,
        text,
        tokens,
        category: category.to_string(),
        gold_sense,
    })
}

/// Writes sentences back out in the TSV corpus format with explicit tags.
pub fn to_tsv(sentences: &[Sentence]) -> String {
    let mut out = String::new();
    for s in sentences {
        let tags: Vec<&str> = s.tokens.iter().map(|t| t.tag.mnemonic()).collect();
        let tags = if tags.is_empty() {
            "-".to_string()
        } else {
            tags.join(" ")
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            s.id,
            s.category,
            s.gold_sense.map_or("-", SenseClass::as_str),
            s.text,
            tags
        ));
    }
    out
}
