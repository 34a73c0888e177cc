use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::{PosTag, Token, WhTable};
use crate::error::{Error, Result};

const BUNDLED_LEXICON: &str = include_str!("../../data/lexicon.tsv");

/// Inflectional endings stripped to find a nominal stem in the lexicon,
/// longest first.
const NOMINAL_SUFFIXES: &[&str] = &[
    "গুলিকে",
    "গুলির",
    "গুলোর",
    "গুলি",
    "গুলো",
    "দের",
    "য়ের",
    "েরা",
    "ের",
    "কে",
    "তে",
    "রা",
    "য়",
    "র",
    "ে",
];

/// Emphatic clitics; the stem keeps whatever tag it has.
const CLITICS: &[&str] = &["ও", "ই"];

const VERB_SUFFIXES: &[&str] = &[
    "িয়াছিলেন",
    "িয়াছিল",
    "িয়াছেন",
    "িয়াছে",
    "েছিলেন",
    "েছিল",
    "েছেন",
    "েছে",
    "ছিলেন",
    "ছিল",
    "ছেন",
    "িলেন",
];

const ADVERB_SUFFIXES: &[&str] = &["ভাবে"];

const ADJECTIVE_SUFFIXES: &[&str] = &["পূর্ণ", "ময়", "তম", "িক"];

const NOUN_SUFFIXES: &[&str] = &["সমূহ", "ত্ব", "তা"];

/// Surface to tag map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, PosTag>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bundled() -> Self {
        Self::parse(BUNDLED_LEXICON, "lexicon.tsv").expect("bundled lexicon is well formed")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path.display().to_string())
    }

    /// Parses `surface<TAB>tag` rows; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Self> {
        let source = source.into();
        let mut lex = Lexicon::new();
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
            let surface = super::normalize(cols[0]);
            if surface.is_empty() || surface.contains(' ') {
                return Err(Error::parse(
                    &source,
                    lineno,
                    "surface must be a single word",
                ));
            }
            let tag = cols[1]
                .trim()
                .parse::<PosTag>()
                .map_err(|e| Error::parse(&source, lineno, e.to_string()))?;
            lex.entries.insert(surface, tag);
        }
        Ok(lex)
    }

    pub fn insert(&mut self, surface: impl Into<String>, tag: PosTag) {
        self.entries.insert(surface.into(), tag);
    }

    pub fn get(&self, surface: &str) -> Option<PosTag> {
        self.entries.get(surface).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<S: Into<String>> FromIterator<(S, PosTag)> for Lexicon {
    fn from_iter<I: IntoIterator<Item = (S, PosTag)>>(iter: I) -> Self {
        Lexicon {
            entries: iter.into_iter().map(|(s, t)| (s.into(), t)).collect(),
        }
    }
}

/// Three-stage tagger: lexicon, then Wh-table, then suffix heuristics.
/// Anything left over is `Other`.
#[derive(Debug, Clone)]
pub struct Tagger {
    lexicon: Lexicon,
    wh: WhTable,
}

impl Tagger {
    pub fn new(lexicon: Lexicon, wh: WhTable) -> Self {
        Tagger { lexicon, wh }
    }

    pub fn bundled() -> Self {
        Tagger::new(Lexicon::bundled(), WhTable::bundled())
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn wh_table(&self) -> &WhTable {
        &self.wh
    }

    pub fn tag<S: AsRef<str>>(&self, tokens: &[S]) -> Vec<Token> {
        let wh_covered = self.wh.coverage(tokens);
        tokens
            .iter()
            .zip(wh_covered)
            .map(|(t, is_wh)| {
                let surface = t.as_ref();
                let tag = self
                    .lexicon
                    .get(surface)
                    .or(is_wh.then_some(PosTag::WhQuestion))
                    .or_else(|| self.suffix_tag(surface))
                    .unwrap_or(PosTag::Other);
                Token::new(surface, tag)
            })
            .collect()
    }

    fn suffix_tag(&self, surface: &str) -> Option<PosTag> {
        if is_numeral(surface) {
            return Some(PosTag::Quantifier);
        }
        if let Some(tag) = self.stem_tag(surface, true) {
            return Some(tag);
        }
        let rules: [(&[&str], PosTag); 4] = [
            (VERB_SUFFIXES, PosTag::Verb),
            (ADVERB_SUFFIXES, PosTag::Adverb),
            (ADJECTIVE_SUFFIXES, PosTag::Adjective),
            (NOUN_SUFFIXES, PosTag::Noun),
        ];
        let len = surface.chars().count();
        rules.into_iter().find_map(|(suffixes, tag)| {
            suffixes
                .iter()
                .any(|s| surface.ends_with(s) && len >= s.chars().count() + 2)
                .then_some(tag)
        })
    }

    /// Tag of a lexicon stem reachable by stripping one nominal inflection,
    /// optionally after one emphatic clitic.
    fn stem_tag(&self, surface: &str, allow_clitic: bool) -> Option<PosTag> {
        for suffix in NOMINAL_SUFFIXES {
            if let Some(stem) = surface.strip_suffix(suffix).filter(|s| !s.is_empty()) {
                match self.lexicon.get(stem) {
                    Some(t @ (PosTag::Noun | PosTag::ProperNoun)) => return Some(t),
                    _ => continue,
                }
            }
        }
        if allow_clitic {
            for clitic in CLITICS {
                if let Some(stem) = surface.strip_suffix(clitic).filter(|s| !s.is_empty()) {
                    if let Some(t) = self
                        .lexicon
                        .get(stem)
                        .or_else(|| self.stem_tag(stem, false))
                    {
                        return Some(t);
                    }
                }
            }
        }
        None
    }
}

fn is_numeral(s: &str) -> bool {
    s.chars()
        .any(|c| c.is_ascii_digit() || ('\u{09E6}'..='\u{09EF}').contains(&c))
        && s.chars().all(|c| {
            c.is_ascii_digit() || ('\u{09E6}'..='\u{09EF}').contains(&c) || c == '.' || c == ','
        })
}
