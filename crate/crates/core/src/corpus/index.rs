use std::collections::{BTreeMap, BTreeSet};
use std::ops::Bound;

use super::Sentence;
use crate::error::{Error, Result};
use crate::matching::{word_match, MatchParams};

/// Immutable searchable corpus: sentences by id, an inverted index over
/// content-word surfaces, and frequencies over every token.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorpusIndex {
    sentences: BTreeMap<u32, Sentence>,
    inverted: BTreeMap<String, Vec<u32>>,
    freq: BTreeMap<String, u64>,
    total_tokens: u64,
}

impl CorpusIndex {
    pub fn build(sentences: impl IntoIterator<Item = Sentence>) -> Result<Self> {
        let mut by_id = BTreeMap::new();
        for s in sentences {
            let id = s.id;
            if by_id.insert(id, s).is_some() {
                return Err(Error::DuplicateId(id));
            }
        }

        let mut inverted: BTreeMap<String, BTreeSet<u32>> = BTreeMap::new();
        let mut freq: BTreeMap<String, u64> = BTreeMap::new();
        let mut total_tokens = 0u64;
        for s in by_id.values() {
            for t in &s.tokens {
                *freq.entry(t.surface.clone()).or_default() += 1;
                total_tokens += 1;
                if t.is_content() {
                    inverted.entry(t.surface.clone()).or_default().insert(s.id);
                }
            }
        }

        Ok(CorpusIndex {
            sentences: by_id,
            inverted: inverted
                .into_iter()
                .map(|(k, ids)| (k, ids.into_iter().collect()))
                .collect(),
            freq,
            total_tokens,
        })
    }

    pub(super) fn from_parts(
        sentences: BTreeMap<u32, Sentence>,
        inverted: BTreeMap<String, Vec<u32>>,
        freq: BTreeMap<String, u64>,
        total_tokens: u64,
    ) -> Self {
        CorpusIndex {
            sentences,
            inverted,
            freq,
            total_tokens,
        }
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn sentence(&self, id: u32) -> Option<&Sentence> {
        self.sentences.get(&id)
    }

    /// Sentences in ascending id order.
    pub fn sentences(&self) -> impl Iterator<Item = &Sentence> {
        self.sentences.values()
    }

    pub fn postings(&self, surface: &str) -> &[u32] {
        self.inverted.get(surface).map_or(&[], Vec::as_slice)
    }

    pub fn inverted(&self) -> &BTreeMap<String, Vec<u32>> {
        &self.inverted
    }

    pub fn freq(&self) -> &BTreeMap<String, u64> {
        &self.freq
    }

    pub fn frequency(&self, surface: &str) -> u64 {
        self.freq.get(surface).copied().unwrap_or(0)
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    /// Maximum-likelihood probability of `surface` over all corpus tokens.
    pub fn word_probability(&self, surface: &str) -> Result<f64> {
        if self.total_tokens == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(self.frequency(surface) as f64 / self.total_tokens as f64)
    }

    /// Ids of every sentence with a content token that matches at least one
    /// of `content_words` under [`word_match`].
    pub fn candidates<S: AsRef<str>>(
        &self,
        content_words: &[S],
        params: &MatchParams,
    ) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for q in content_words {
            let q = q.as_ref();
            if let Some(ids) = self.inverted.get(q) {
                out.extend(ids);
            }
            // any prefix match shares the first `min_prefix` characters
            let head: String = q.chars().take(params.min_prefix).collect();
            if head.chars().count() < params.min_prefix {
                continue;
            }
            for (key, ids) in self
                .inverted
                .range::<str, _>((Bound::Included(head.as_str()), Bound::Unbounded))
            {
                if !key.starts_with(head.as_str()) {
                    break;
                }
                if key != q && word_match(q, key, params).is_some() {
                    out.extend(ids);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{PosTag, Token};

    fn sentence(id: u32, words: &[(&str, PosTag)]) -> Sentence {
        Sentence {
            id,
            text: words.iter().map(|(w, _)| *w).collect::<Vec<_>>().join(" "),
            tokens: words.iter().map(|(w, t)| Token::new(*w, *t)).collect(),
            category: "default".into(),
            gold_sense: None,
        }
    }

    use PosTag::*;

    #[test]
    fn empty_index() {
        let idx = CorpusIndex::build(vec![]).unwrap();
        assert!(idx.is_empty());
        assert_eq!(idx.total_tokens(), 0);
        assert!(idx.inverted().is_empty());
        assert!(matches!(idx.word_probability("ক"), Err(Error::EmptyCorpus)));
    }

    #[test]
    fn single_sentence() {
        let idx = CorpusIndex::build(vec![sentence(0, &[("ক", Noun), ("খ", Verb)])]).unwrap();
        assert_eq!(idx.postings("ক"), &[0]);
        assert_eq!(idx.postings("খ"), &[0]);
        assert_eq!(idx.total_tokens(), 2);
    }

    #[test]
    fn shared_word_postings_sorted() {
        let idx = CorpusIndex::build(vec![
            sentence(9, &[("w", Noun), ("x", Noun)]),
            sentence(2, &[("y", Noun), ("w", Noun)]),
            sentence(5, &[("z", Noun)]),
        ])
        .unwrap();
        assert_eq!(idx.postings("w"), &[2, 9]);
    }

    #[test]
    fn function_words_counted_but_not_indexed() {
        let idx = CorpusIndex::build(vec![sentence(
            0,
            &[("ক", Noun), ("ও", Conjunction), ("ক", Noun), ("গ", Other)],
        )])
        .unwrap();
        assert_eq!(idx.postings("ও"), &[] as &[u32]);
        assert_eq!(idx.total_tokens(), 4);
        assert_eq!(idx.word_probability("ও").unwrap(), 0.25);
        assert_eq!(idx.word_probability("ক").unwrap(), 0.5);
        assert_eq!(idx.word_probability("ঘ").unwrap(), 0.0);
    }

    #[test]
    fn duplicate_id_rejected() {
        let err = CorpusIndex::build(vec![
            sentence(1, &[("a", Noun)]),
            sentence(1, &[("b", Noun)]),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::DuplicateId(1)));
    }

    #[test]
    fn candidates_exact_and_prefix() {
        let idx = CorpusIndex::build(vec![
            sentence(0, &[("রামের", ProperNoun), ("মা", Noun)]),
            sentence(1, &[("কৌশল্যা", ProperNoun)]),
            sentence(2, &[("রা", Noun)]),
        ])
        .unwrap();
        let p = MatchParams::default();
        assert_eq!(idx.candidates(&["কৌশল্যা"], &p), BTreeSet::from([1]));
        assert_eq!(idx.candidates(&["রাম"], &p), BTreeSet::from([0]));
        assert_eq!(idx.candidates(&["মা"], &p), BTreeSet::from([0]));
        assert_eq!(idx.candidates(&["রা"], &p), BTreeSet::from([2]));
        assert!(idx.candidates::<&str>(&[], &p).is_empty());
        assert!(idx.candidates(&["নেই"], &p).is_empty());
    }
}
