//! Question answering over a Bengali sentence corpus.
//!
//! A question is normalized, tagged and split into content and function
//! words; its Wh-phrase fixes the expected answer class. Every corpus
//! sentence sharing at least one content word (exactly or by inflection) is a
//! candidate, and candidates are ranked by the sum of six scores:
//!
//! 1. matched keyword count
//! 2. matched keywords appearing in the same order
//! 3. matched keywords with the same POS tag
//! 4. absolute difference of the summed `-p log2 p` word entropies
//! 5. ceiling of the content-word cosine similarity
//! 6. agreement between the question's and the sentence's sense class
//!
//! ```no_run
//! use bnqa_core::{corpus, CorpusIndex, Engine, Tagger};
//!
//! let tagger = Tagger::bundled();
//! let sentences = corpus::ingest("corpus.tsv", corpus::Format::Tsv, &tagger)?;
//! let engine = Engine::with_defaults(CorpusIndex::build(sentences)?);
//! for a in engine.answer("ময়ূরভঞ্জের রাজধানী কোথায়?", 5)? {
//!     println!("{} {} {}", a.rank, a.sentence_id, a.scores.total);
//! }
//! # Ok::<(), bnqa_core::Error>(())
//! ```

pub mod cli;
pub mod config;
pub mod corpus;
pub mod engine;
mod error;
pub mod eval;
pub mod matching;
pub mod question;
pub mod scoring;
pub mod sense;
mod sense_class;
pub mod text;

pub use config::Config;
pub use corpus::{CorpusIndex, Sentence};
pub use engine::{Engine, EngineSettings, RankedAnswer};
pub use error::{Error, Result};
pub use eval::{evaluate, metrics, ConfusionCounts, EvalReport, Metrics};
pub use matching::MatchParams;
pub use question::{analyze, AnalyzedQuestion};
pub use scoring::{ModuleScores, ModuleSet};
pub use sense_class::SenseClass;
pub use text::{PosTag, Tagger, Token, WhTable};
