//! Sentence sense classification and the sense-agreement score.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::Sentence;
use crate::error::{Error, Result};
use crate::sense_class::SenseClass;
use crate::text::{normalize, PosTag, Token};

const BUNDLED_RULES: &str = include_str!("../data/sense_rules.tsv");

/// Class assigned when no rule fires.
pub const FALLBACK_CLASS: SenseClass = SenseClass::Object;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cue {
    Word(String),
    Tag(PosTag),
}

impl Cue {
    fn fires(&self, tokens: &[Token]) -> bool {
        match self {
            Cue::Word(w) => tokens.iter().any(|t| &t.surface == w),
            Cue::Tag(tag) => tokens.iter().any(|t| t.tag == *tag),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub cue: Cue,
    pub class: SenseClass,
}

/// Ordered cue table; the first rule whose cue occurs in a sentence decides.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RuleTable {
    rules: Vec<Rule>,
}

impl RuleTable {
    pub fn new(rules: Vec<Rule>) -> Self {
        RuleTable { rules }
    }

    pub fn bundled() -> Self {
        Self::parse(BUNDLED_RULES, "sense_rules.tsv").expect("bundled rules are well formed")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path.display().to_string())
    }

    /// `cue<TAB>class` rows. A cue starting with `@` names a tag mnemonic.
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Self> {
        let source = source.into();
        let mut rules = Vec::new();
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
            let cue = match cols[0].trim().strip_prefix('@') {
                Some(tag) => Cue::Tag(
                    tag.parse::<PosTag>()
                        .map_err(|e| Error::parse(&source, lineno, e.to_string()))?,
                ),
                None => {
                    let w = normalize(cols[0]);
                    if w.is_empty() || w.contains(' ') {
                        return Err(Error::parse(&source, lineno, "cue must be a single word"));
                    }
                    Cue::Word(w)
                }
            };
            let class = cols[1]
                .trim()
                .parse::<SenseClass>()
                .map_err(|e| Error::parse(&source, lineno, e.to_string()))?;
            rules.push(Rule { cue, class });
        }
        Ok(RuleTable { rules })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn classify_tokens(&self, tokens: &[Token]) -> SenseClass {
        self.rules
            .iter()
            .find(|r| r.cue.fires(tokens))
            .map_or(FALLBACK_CLASS, |r| r.class)
    }
}

/// Gold label if the sentence carries one, otherwise the first firing rule.
pub fn rule_classify(s: &Sentence, rules: &RuleTable) -> SenseClass {
    s.gold_sense
        .unwrap_or_else(|| rules.classify_tokens(&s.tokens))
}

/// Multinomial Naive Bayes over token surfaces with add-one smoothing.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveBayes {
    priors: [Option<f64>; 8],
    log_likelihoods: [Option<BTreeMap<String, f64>>; 8],
}

impl NaiveBayes {
    pub fn train<'a, I>(labeled: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [Token], SenseClass)>,
    {
        let mut docs = [0u64; 8];
        let mut counts: [BTreeMap<&str, u64>; 8] = Default::default();
        let mut vocab: BTreeSet<&str> = BTreeSet::new();
        for (tokens, class) in labeled {
            let c = class.index();
            docs[c] += 1;
            for t in tokens {
                *counts[c].entry(t.surface.as_str()).or_default() += 1;
                vocab.insert(t.surface.as_str());
            }
        }
        let n_docs: u64 = docs.iter().sum();
        if n_docs == 0 {
            return Err(Error::EmptyTrainingSet);
        }

        let v = vocab.len() as f64;
        let mut priors = [None; 8];
        let mut log_likelihoods: [Option<BTreeMap<String, f64>>; 8] = Default::default();
        for c in 0..8 {
            if docs[c] == 0 {
                continue;
            }
            priors[c] = Some(docs[c] as f64 / n_docs as f64);
            let class_total: u64 = counts[c].values().sum();
            let denom = class_total as f64 + v;
            log_likelihoods[c] = Some(
                vocab
                    .iter()
                    .map(|w| {
                        let n = counts[c].get(w).copied().unwrap_or(0);
                        (w.to_string(), ((n as f64 + 1.0) / denom).ln())
                    })
                    .collect(),
            );
        }
        Ok(NaiveBayes {
            priors,
            log_likelihoods,
        })
    }

    /// Trains on every sentence that carries a gold label.
    pub fn train_on_sentences<'a>(
        sentences: impl IntoIterator<Item = &'a Sentence>,
    ) -> Result<Self> {
        Self::train(
            sentences
                .into_iter()
                .filter_map(|s| s.gold_sense.map(|c| (s.tokens.as_slice(), c))),
        )
    }

    pub fn prior(&self, class: SenseClass) -> Option<f64> {
        self.priors[class.index()]
    }

    pub fn log_likelihood(&self, class: SenseClass, surface: &str) -> Option<f64> {
        self.log_likelihoods[class.index()]
            .as_ref()
            .and_then(|m| m.get(surface).copied())
    }

    pub fn classes(&self) -> impl Iterator<Item = SenseClass> + '_ {
        SenseClass::ALL
            .into_iter()
            .filter(|c| self.priors[c.index()].is_some())
    }

    pub fn vocabulary_len(&self) -> usize {
        self.log_likelihoods
            .iter()
            .flatten()
            .next()
            .map_or(0, BTreeMap::len)
    }

    /// Log posterior up to a shared constant. Words outside the training
    /// vocabulary are ignored.
    pub fn log_posterior(&self, class: SenseClass, tokens: &[Token]) -> Option<f64> {
        let prior = self.priors[class.index()]?;
        let table = self.log_likelihoods[class.index()].as_ref()?;
        let mut bag: BTreeMap<&str, u64> = BTreeMap::new();
        for t in tokens {
            *bag.entry(t.surface.as_str()).or_default() += 1;
        }
        let evidence: f64 = bag
            .iter()
            .filter_map(|(w, n)| table.get(*w).map(|ll| *n as f64 * ll))
            .sum();
        Some(prior.ln() + evidence)
    }

    /// Argmax posterior; exact ties go to the earliest class in declaration
    /// order.
    pub fn predict(&self, tokens: &[Token]) -> SenseClass {
        let mut best: Option<(SenseClass, f64)> = None;
        for c in self.classes() {
            let score = self.log_posterior(c, tokens).expect("class is present");
            if best.is_none_or(|(_, b)| score > b) {
                best = Some((c, score));
            }
        }
        best.map(|(c, _)| c)
            .expect("a trained model has at least one class")
    }
}

pub fn train_nb<'a, I>(labeled: I) -> Result<NaiveBayes>
where
    I: IntoIterator<Item = (&'a [Token], SenseClass)>,
{
    NaiveBayes::train(labeled)
}

#[derive(Debug, Clone, PartialEq)]
pub enum SenseModel {
    Rules(RuleTable),
    NaiveBayes(Box<NaiveBayes>),
}

/// Gold label when present, otherwise the model's prediction.
pub fn classify(s: &Sentence, model: &SenseModel) -> SenseClass {
    if let Some(gold) = s.gold_sense {
        return gold;
    }
    match model {
        SenseModel::Rules(rules) => rules.classify_tokens(&s.tokens),
        SenseModel::NaiveBayes(nb) => nb.predict(&s.tokens),
    }
}

/// Module 6: 1 when the question has a sense and it equals the sentence's.
pub fn score_sense(question: Option<SenseClass>, sentence: SenseClass) -> u8 {
    u8::from(question == Some(sentence))
}

/// Where sentence senses come from.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SenseMode {
    /// Gold labels only; unlabeled sentences have no sense.
    Gold,
    /// Gold labels, falling back to the rule table.
    #[default]
    Rules,
    /// Gold labels, falling back to Naive Bayes.
    #[serde(rename = "nb")]
    NaiveBayes,
}

impl FromStr for SenseMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gold" => Ok(SenseMode::Gold),
            "rules" => Ok(SenseMode::Rules),
            "nb" => Ok(SenseMode::NaiveBayes),
            _ => Err(Error::Config(format!(
                "sense mode must be gold, rules or nb, got `{s}`"
            ))),
        }
    }
}

/// Sense source used by the engine.
#[derive(Debug, Clone, PartialEq)]
pub enum SenseSource {
    Gold,
    Model(SenseModel),
}

impl SenseSource {
    pub fn sense_of(&self, s: &Sentence) -> Option<SenseClass> {
        match self {
            SenseSource::Gold => s.gold_sense,
            SenseSource::Model(m) => Some(classify(s, m)),
        }
    }
}
