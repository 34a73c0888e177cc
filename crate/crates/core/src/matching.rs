//! The word-match predicate shared by candidate retrieval and keyword
//! matching. Bengali inflects by suffixation, so two surfaces match when they
//! are equal or share a long enough common prefix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MIN_PREFIX: usize = 3;
pub const DEFAULT_PREFIX_COVERAGE: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchParams {
    /// Minimum shared prefix, in characters.
    pub min_prefix: usize,
    /// Fraction of the shorter surface the shared prefix must cover.
    pub coverage: f64,
}

impl Default for MatchParams {
    fn default() -> Self {
        MatchParams {
            min_prefix: DEFAULT_MIN_PREFIX,
            coverage: DEFAULT_PREFIX_COVERAGE,
        }
    }
}

impl MatchParams {
    pub fn new(min_prefix: usize, coverage: f64) -> Result<Self> {
        if min_prefix == 0 {
            return Err(Error::Config("min_prefix must be at least 1".into()));
        }
        if !(coverage > 0.0 && coverage <= 1.0) {
            return Err(Error::Config(format!(
                "prefix coverage must be in (0, 1], got {coverage}"
            )));
        }
        Ok(MatchParams {
            min_prefix,
            coverage,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordMatch {
    Exact,
    /// Shared prefix length in characters.
    Prefix(usize),
}

impl WordMatch {
    pub fn is_exact(self) -> bool {
        matches!(self, WordMatch::Exact)
    }

    /// Ordering key: exact beats any prefix, longer prefix beats shorter.
    pub(crate) fn strength(self) -> usize {
        match self {
            WordMatch::Exact => usize::MAX,
            WordMatch::Prefix(n) => n,
        }
    }
}

pub fn common_prefix_chars(a: &str, b: &str) -> usize {
    a.chars().zip(b.chars()).take_while(|(x, y)| x == y).count()
}

/// `Some` when `a` and `b` are equal, or share a prefix of at least
/// `min_prefix` characters that also covers `coverage` of the shorter word.
pub fn word_match(a: &str, b: &str, params: &MatchParams) -> Option<WordMatch> {
    if a == b {
        return Some(WordMatch::Exact);
    }
    let shared = common_prefix_chars(a, b);
    if shared < params.min_prefix {
        return None;
    }
    let shorter = a.chars().count().min(b.chars().count());
    // tolerance keeps e.g. 0.6 * 5 == 3 from failing on rounding
    if shared as f64 + 1e-9 >= params.coverage * shorter as f64 {
        Some(WordMatch::Prefix(shared))
    } else {
        None
    }
}
