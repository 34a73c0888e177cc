//! Run configuration shared by the CLI and the FFI layer. A config file uses
//! the same keys as the command-line flags (in snake case); flags override it.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::corpus::{ingest, CorpusIndex, Format};
use crate::engine::{Engine, EngineSettings, DEFAULT_TOP_K};
use crate::error::{Error, Result};
use crate::matching::{MatchParams, DEFAULT_MIN_PREFIX, DEFAULT_PREFIX_COVERAGE};
use crate::scoring::{EntropySign, ModuleSet};
use crate::sense::{NaiveBayes, RuleTable, SenseMode, SenseModel, SenseSource};
use crate::text::{Lexicon, Tagger, WhTable};

pub const CONFIG_ENV: &str = "QA_CONFIG";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub min_prefix: usize,
    pub prefix_coverage: f64,
    pub top_k: usize,
    pub disabled_modules: Vec<u8>,
    pub sense_mode: SenseMode,
    pub entropy_sign: EntropySign,
    pub lexicon: Option<PathBuf>,
    pub wh_table: Option<PathBuf>,
    pub rules: Option<PathBuf>,
    /// Corpus TSV used to train Naive Bayes; defaults to the index's own
    /// gold-labeled sentences.
    pub nb_train: Option<PathBuf>,
    pub index: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            min_prefix: DEFAULT_MIN_PREFIX,
            prefix_coverage: DEFAULT_PREFIX_COVERAGE,
            top_k: DEFAULT_TOP_K,
            disabled_modules: Vec::new(),
            sense_mode: SenseMode::default(),
            entropy_sign: EntropySign::default(),
            lexicon: None,
            wh_table: None,
            rules: None,
            nb_train: None,
            index: None,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    /// Reads the file named by `QA_CONFIG`, or returns defaults when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(PathBuf::from(p)),
            _ => Ok(Self::default()),
        }
    }

    pub fn settings(&self) -> Result<EngineSettings> {
        if self.top_k == 0 {
            return Err(Error::Config("top_k must be at least 1".into()));
        }
        Ok(EngineSettings {
            matching: MatchParams::new(self.min_prefix, self.prefix_coverage)?,
            top_k: self.top_k,
            modules: ModuleSet::without(self.disabled_modules.iter().copied())?,
            entropy_sign: self.entropy_sign,
        })
    }

    pub fn tagger(&self) -> Result<Tagger> {
        let lexicon = match &self.lexicon {
            Some(p) => Lexicon::load(p)?,
            None => Lexicon::bundled(),
        };
        let wh = match &self.wh_table {
            Some(p) => WhTable::load(p)?,
            None => WhTable::bundled(),
        };
        Ok(Tagger::new(lexicon, wh))
    }

    pub fn sense_source(&self, index: &CorpusIndex, tagger: &Tagger) -> Result<SenseSource> {
        Ok(match self.sense_mode {
            SenseMode::Gold => SenseSource::Gold,
            SenseMode::Rules => {
                let rules = match &self.rules {
                    Some(p) => RuleTable::load(p)?,
                    None => RuleTable::bundled(),
                };
                SenseSource::Model(SenseModel::Rules(rules))
            }
            SenseMode::NaiveBayes => {
                let nb = match &self.nb_train {
                    Some(p) => NaiveBayes::train_on_sentences(&ingest(p, Format::Tsv, tagger)?)?,
                    None => NaiveBayes::train_on_sentences(index.sentences())?,
                };
                SenseSource::Model(SenseModel::NaiveBayes(Box::new(nb)))
            }
        })
    }

    pub fn build_engine(&self, index: CorpusIndex) -> Result<Engine> {
        let settings = self.settings()?;
        let tagger = self.tagger()?;
        let sense = self.sense_source(&index, &tagger)?;
        Ok(Engine::new(index, tagger, sense, settings))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = Config::default();
        let s = c.settings().unwrap();
        assert_eq!(s.matching.min_prefix, 3);
        assert_eq!(s.matching.coverage, 0.6);
        assert_eq!(s.top_k, 15);
        assert_eq!(s.modules, ModuleSet::all());
        assert_eq!(s.entropy_sign, EntropySign::Add);
    }

    #[test]
    fn toml_keys() {
        let c = Config::from_toml(
            "min_prefix = 4\ntop_k = 5\ndisabled_modules = [6]\nsense_mode = \"nb\"\nentropy_sign = \"subtract\"\n",
        )
        .unwrap();
        assert_eq!(c.min_prefix, 4);
        assert_eq!(c.top_k, 5);
        assert_eq!(c.sense_mode, SenseMode::NaiveBayes);
        assert_eq!(c.entropy_sign, EntropySign::Subtract);
        assert!(!c.settings().unwrap().modules.enabled(6));
        assert!(Config::from_toml("bogus = 1").is_err());
    }

    #[test]
    fn invalid_values() {
        let c = Config {
            disabled_modules: vec![0],
            ..Config::default()
        };
        assert!(c.settings().is_err());
        let c = Config {
            top_k: 0,
            ..Config::default()
        };
        assert!(c.settings().is_err());
    }
}
