//! Per-pair similarity modules 1 to 5: matched keyword count, order
//! agreement, POS agreement, entropy difference and the cosine ceiling.
//! Module 6 (sense agreement) lives in [`crate::sense`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusIndex, Sentence};
use crate::error::{Error, Result};
use crate::matching::{word_match, MatchParams, WordMatch};
use crate::question::AnalyzedQuestion;
use crate::text::{PosTag, Token};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeywordMatch {
    /// Position in the question's token sequence.
    pub q_pos: usize,
    /// Position in the sentence's token sequence.
    pub s_pos: usize,
    pub q_surface: String,
    pub s_surface: String,
    pub q_tag: PosTag,
    pub s_tag: PosTag,
    pub exact: bool,
}

/// One-to-one greedy matching of question content words against sentence
/// content words. Question words are taken left to right; each takes the
/// strongest still-unmatched sentence word (exact, then longest shared
/// prefix, then leftmost).
pub fn match_keywords(
    q: &AnalyzedQuestion,
    s: &Sentence,
    params: &MatchParams,
) -> Vec<KeywordMatch> {
    let mut used = vec![false; s.tokens.len()];
    let mut out = Vec::new();
    for &qi in &q.content {
        let qt = &q.tokens[qi];
        let mut best: Option<(usize, WordMatch)> = None;
        for (si, st) in s.content_tokens() {
            if used[si] {
                continue;
            }
            if let Some(m) = word_match(&qt.surface, &st.surface, params) {
                if best.is_none_or(|(_, b)| m.strength() > b.strength()) {
                    best = Some((si, m));
                }
            }
        }
        if let Some((si, m)) = best {
            used[si] = true;
            let st = &s.tokens[si];
            out.push(KeywordMatch {
                q_pos: qi,
                s_pos: si,
                q_surface: qt.surface.clone(),
                s_surface: st.surface.clone(),
                q_tag: qt.tag,
                s_tag: st.tag,
                exact: m.is_exact(),
            });
        }
    }
    out
}

/// Module 1: number of matched keywords.
pub fn score_frequency(matches: &[KeywordMatch]) -> u32 {
    matches.len() as u32
}

/// Module 2: how many matched keywords appear in the same relative order in
/// both sentences, i.e. the longest increasing run of sentence positions
/// taken in question order.
pub fn score_order(matches: &[KeywordMatch]) -> u32 {
    let mut by_q: Vec<&KeywordMatch> = matches.iter().collect();
    by_q.sort_by_key(|m| m.q_pos);
    let positions: Vec<usize> = by_q.iter().map(|m| m.s_pos).collect();
    longest_increasing_subsequence(&positions) as u32
}

/// Length of the longest strictly increasing subsequence (patience sorting).
pub fn longest_increasing_subsequence(xs: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in xs {
        match tails.binary_search(&x) {
            Ok(_) => {}
            Err(i) if i == tails.len() => tails.push(x),
            Err(i) => tails[i] = x,
        }
    }
    tails.len()
}

/// Module 3: matched keywords whose tags agree.
pub fn score_pos(matches: &[KeywordMatch]) -> u32 {
    matches.iter().filter(|m| m.q_tag == m.s_tag).count() as u32
}

/// Sum over tokens of `-p log2 p`, with `p` the corpus probability of the
/// token's surface. Unseen words contribute 0.
pub fn sentence_entropy(index: &CorpusIndex, tokens: &[Token]) -> Result<f64> {
    if index.total_tokens() == 0 {
        return Err(Error::EmptyCorpus);
    }
    tokens.iter().try_fold(0.0, |acc, t| {
        let p = index.word_probability(&t.surface)?;
        Ok(acc + if p > 0.0 { -p * p.log2() } else { 0.0 })
    })
}

/// Module 4: absolute difference of the two sentence entropies.
pub fn score_entropy_diff(index: &CorpusIndex, q: &[Token], s: &[Token]) -> Result<f64> {
    Ok((sentence_entropy(index, q)? - sentence_entropy(index, s)?).abs())
}

/// Term-frequency cosine between two bags of words; 0 when either is empty.
pub fn cosine_similarity<A: AsRef<str>, B: AsRef<str>>(a: &[A], b: &[B]) -> f64 {
    fn tf<S: AsRef<str>>(words: &[S]) -> BTreeMap<&str, f64> {
        let mut m = BTreeMap::new();
        for w in words {
            *m.entry(w.as_ref()).or_insert(0.0) += 1.0;
        }
        m
    }
    let (ta, tb) = (tf(a), tf(b));
    let dot: f64 = ta
        .iter()
        .filter_map(|(w, x)| tb.get(w).map(|y| x * y))
        .sum();
    let sq = |m: &BTreeMap<&str, f64>| m.values().map(|v| v * v).sum::<f64>();
    let denom = (sq(&ta) * sq(&tb)).sqrt();
    if denom == 0.0 {
        0.0
    } else {
        dot / denom
    }
}

/// Module 5: ceiling of the content-word cosine, so 1 iff any content
/// surface is shared.
pub fn score_cosine(q: &AnalyzedQuestion, s: &Sentence) -> u8 {
    let qs = q.content_surfaces();
    let ss: Vec<&str> = s
        .content_tokens()
        .map(|(_, t)| t.surface.as_str())
        .collect();
    cosine_similarity(&qs, &ss).clamp(0.0, 1.0).ceil() as u8
}

/// How module 4 enters the total.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntropySign {
    #[default]
    Add,
    Subtract,
}

impl FromStr for EntropySign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "add" => Ok(EntropySign::Add),
            "subtract" => Ok(EntropySign::Subtract),
            _ => Err(Error::Config(format!(
                "entropy sign must be add or subtract, got `{s}`"
            ))),
        }
    }
}

/// Set of enabled modules, numbered 1 to 6.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct ModuleSet(u8);

impl ModuleSet {
    pub const ALL: ModuleSet = ModuleSet(0b11_1111);

    pub fn all() -> Self {
        Self::ALL
    }

    pub fn without(modules: impl IntoIterator<Item = u8>) -> Result<Self> {
        let mut set = Self::ALL;
        for m in modules {
            set.disable(m)?;
        }
        Ok(set)
    }

    pub fn disable(&mut self, module: u8) -> Result<()> {
        if !(1..=6).contains(&module) {
            return Err(Error::Config(format!("module must be 1..=6, got {module}")));
        }
        self.0 &= !(1 << (module - 1));
        Ok(())
    }

    pub fn enabled(self, module: u8) -> bool {
        (1..=6).contains(&module) && self.0 & (1 << (module - 1)) != 0
    }

    pub fn disabled(self) -> Vec<u8> {
        (1..=6).filter(|&m| !self.enabled(m)).collect()
    }
}

impl Default for ModuleSet {
    fn default() -> Self {
        Self::ALL
    }
}

impl fmt::Debug for ModuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries((1..=6u8).filter(|&m| self.enabled(m)))
            .finish()
    }
}

/// The six module scores of one (question, sentence) pair and their total.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModuleScores {
    pub m1: u32,
    pub m2: u32,
    pub m3: u32,
    pub m4: f64,
    pub m5: u8,
    pub m6: u8,
    pub total: f64,
}

impl ModuleScores {
    /// Zeroes disabled modules and sums the rest. `m4` is added or
    /// subtracted according to `sign`.
    #[allow(clippy::too_many_arguments)]
    pub fn combine(
        m1: u32,
        m2: u32,
        m3: u32,
        m4: f64,
        m5: u8,
        m6: u8,
        enabled: ModuleSet,
        sign: EntropySign,
    ) -> Self {
        let on = |m: u8| enabled.enabled(m);
        let m1 = if on(1) { m1 } else { 0 };
        let m2 = if on(2) { m2 } else { 0 };
        let m3 = if on(3) { m3 } else { 0 };
        let m4 = if on(4) { m4 } else { 0.0 };
        let m5 = if on(5) { m5 } else { 0 };
        let m6 = if on(6) { m6 } else { 0 };
        let signed_m4 = match sign {
            EntropySign::Add => m4,
            EntropySign::Subtract => -m4,
        };
        // integer modules first so toggling one shifts the total by an exact integer
        let whole = u64::from(m1) + u64::from(m2) + u64::from(m3) + u64::from(m5) + u64::from(m6);
        let total = whole as f64 + signed_m4;
        ModuleScores {
            m1,
            m2,
            m3,
            m4,
            m5,
            m6,
            total,
        }
    }
}
