//! Question answering: retrieve candidates, score each one with the six
//! modules, rank.

use std::cmp::Ordering;

use serde::Serialize;

use crate::corpus::CorpusIndex;
use crate::error::{Error, Result};
use crate::matching::MatchParams;
use crate::question::{analyze, AnalyzedQuestion};
use crate::scoring::{
    cosine_similarity, match_keywords, score_cosine, score_frequency, score_order, score_pos,
    sentence_entropy, EntropySign, KeywordMatch, ModuleScores, ModuleSet,
};
use crate::sense::{score_sense, SenseModel, SenseSource};
use crate::sense_class::SenseClass;
use crate::text::Tagger;

/// Deepest rank bucket that is reported.
pub const DEFAULT_TOP_K: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineSettings {
    pub matching: MatchParams,
    pub top_k: usize,
    pub modules: ModuleSet,
    pub entropy_sign: EntropySign,
}

impl Default for EngineSettings {
    fn default() -> Self {
        EngineSettings {
            matching: MatchParams::default(),
            top_k: DEFAULT_TOP_K,
            modules: ModuleSet::all(),
            entropy_sign: EntropySign::Add,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedAnswer {
    pub rank: usize,
    pub sentence_id: u32,
    pub scores: ModuleScores,
    /// Content-word cosine before the ceiling is taken.
    pub cosine: f64,
    pub sentence_sense: Option<SenseClass>,
    pub matches: Vec<KeywordMatch>,
}

/// Ranking order: total descending, then more matched keywords, then lower id.
fn rank_order(a: &RankedAnswer, b: &RankedAnswer) -> Ordering {
    b.scores
        .total
        .total_cmp(&a.scores.total)
        .then(b.scores.m1.cmp(&a.scores.m1))
        .then(a.sentence_id.cmp(&b.sentence_id))
}

#[derive(Debug, Clone)]
pub struct Engine {
    index: CorpusIndex,
    tagger: Tagger,
    sense: SenseSource,
    settings: EngineSettings,
}

impl Engine {
    pub fn new(
        index: CorpusIndex,
        tagger: Tagger,
        sense: SenseSource,
        settings: EngineSettings,
    ) -> Self {
        Engine {
            index,
            tagger,
            sense,
            settings,
        }
    }

    /// Bundled tagger, bundled sense rules, default settings.
    pub fn with_defaults(index: CorpusIndex) -> Self {
        Engine::new(
            index,
            Tagger::bundled(),
            SenseSource::Model(SenseModel::Rules(crate::sense::RuleTable::bundled())),
            EngineSettings::default(),
        )
    }

    pub fn index(&self) -> &CorpusIndex {
        &self.index
    }

    pub fn tagger(&self) -> &Tagger {
        &self.tagger
    }

    pub fn settings(&self) -> &EngineSettings {
        &self.settings
    }

    pub fn settings_mut(&mut self) -> &mut EngineSettings {
        &mut self.settings
    }

    pub fn sense_source(&self) -> &SenseSource {
        &self.sense
    }

    pub fn analyze(&self, question: &str) -> Result<AnalyzedQuestion> {
        analyze(question, &self.tagger)
    }

    /// Top `k` answers using the configured settings.
    pub fn answer(&self, question: &str, k: usize) -> Result<Vec<RankedAnswer>> {
        let q = self.analyze(question)?;
        self.answer_analyzed(&q, k)
    }

    pub fn answer_analyzed(&self, q: &AnalyzedQuestion, k: usize) -> Result<Vec<RankedAnswer>> {
        let ids = self
            .index
            .candidates(&q.content_surfaces(), &self.settings.matching);
        let mut ranked = self.rank(q, ids)?;
        ranked.truncate(k);
        Ok(ranked)
    }

    /// Scores and fully ranks the given candidate sentences. The result does
    /// not depend on the order of `candidates`.
    pub fn rank(
        &self,
        q: &AnalyzedQuestion,
        candidates: impl IntoIterator<Item = u32>,
    ) -> Result<Vec<RankedAnswer>> {
        let mut out = Vec::new();
        let mut q_entropy = None;
        for id in candidates {
            let q_h = match q_entropy {
                Some(h) => h,
                None => *q_entropy.insert(sentence_entropy(&self.index, &q.tokens)?),
            };
            out.push(self.score_one(q, id, q_h)?);
        }
        out.sort_by(rank_order);
        out.dedup_by_key(|a| a.sentence_id);
        for (i, a) in out.iter_mut().enumerate() {
            a.rank = i + 1;
        }
        Ok(out)
    }

    fn score_one(&self, q: &AnalyzedQuestion, id: u32, q_entropy: f64) -> Result<RankedAnswer> {
        let s = self
            .index
            .sentence(id)
            .ok_or_else(|| Error::Config(format!("candidate {id} is not in the index")))?;
        let matches = match_keywords(q, s, &self.settings.matching);
        let s_entropy = sentence_entropy(&self.index, &s.tokens)?;
        let sentence_sense = self.sense.sense_of(s);
        let m6 = sentence_sense.map_or(0, |c| score_sense(q.sense(), c));
        let s_content: Vec<&str> = s
            .content_tokens()
            .map(|(_, t)| t.surface.as_str())
            .collect();
        let scores = ModuleScores::combine(
            score_frequency(&matches),
            score_order(&matches),
            score_pos(&matches),
            (q_entropy - s_entropy).abs(),
            score_cosine(q, s),
            m6,
            self.settings.modules,
            self.settings.entropy_sign,
        );
        Ok(RankedAnswer {
            rank: 0,
            sentence_id: id,
            scores,
            cosine: cosine_similarity(&q.content_surfaces(), &s_content),
            sentence_sense,
            matches,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{ingest_str, Format};

    const FIXTURE: &str = include_str!("../data/fixture/corpus.tsv");

    fn fixture_engine() -> Engine {
        let tagger = Tagger::bundled();
        let s = ingest_str(FIXTURE, "fixture", Format::Tsv, &tagger).unwrap();
        Engine::with_defaults(CorpusIndex::build(s).unwrap())
    }

    #[test]
    fn fixture_rank_one() {
        let e = fixture_engine();
        let a = e.answer("কোথায় চৈতন্যপ্রভাব সুস্পষ্ট?", 15).unwrap();
        assert_eq!(a[0].sentence_id, 0);
        assert_eq!(a[0].rank, 1);
        let s = a[0].scores;
        assert_eq!((s.m1, s.m2, s.m6), (2, 2, 1));
        assert!(a.windows(2).all(|w| w[0].scores.total >= w[1].scores.total));
    }

    #[test]
    fn no_shared_words_no_answers() {
        let e = fixture_engine();
        assert!(e.answer("দাবার সৃষ্টি কর্তা কে?", 15).unwrap().is_empty());
        assert!(matches!(e.answer("?", 15), Err(Error::EmptyQuestion)));
    }

    #[test]
    fn truncates_to_k() {
        let e = fixture_engine();
        let a = e.answer("কোথায় চৈতন্যপ্রভাব সুস্পষ্ট?", 1).unwrap();
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn ties_break_on_m1_then_id() {
        let e = fixture_engine();
        let q = e.analyze("সুস্পষ্ট").unwrap();
        let fwd = e.rank(&q, [0, 3]).unwrap();
        let rev = e.rank(&q, [3, 0]).unwrap();
        assert_eq!(fwd, rev);
    }
}
