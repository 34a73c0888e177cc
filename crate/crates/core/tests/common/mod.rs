#![allow(dead_code)]

use std::path::PathBuf;

use bnqa_core::corpus::{ingest_str, Format};
use bnqa_core::{CorpusIndex, Engine, PosTag, Sentence, Tagger, Token};

pub const FIXTURE_QUESTION: &str = "কোথায় চৈতন্যপ্রভাব সুস্পষ্ট?";

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn fixture_index() -> CorpusIndex {
    let text = std::fs::read_to_string(data_dir().join("fixture/corpus.tsv")).unwrap();
    let sentences = ingest_str(&text, "fixture", Format::Tsv, &Tagger::bundled()).unwrap();
    CorpusIndex::build(sentences).unwrap()
}

pub fn fixture_engine() -> Engine {
    Engine::with_defaults(fixture_index())
}

/// Sentence built straight from tagged tokens, bypassing the tagger.
pub fn tagged_sentence(id: u32, tokens: &[(String, PosTag)]) -> Sentence {
    let tokens: Vec<Token> = tokens
        .iter()
        .map(|(s, t)| Token::new(s.as_str(), *t))
        .collect();
    let text = tokens
        .iter()
        .map(|t| t.surface.as_str())
        .collect::<Vec<_>>()
        .join(" ");
    Sentence {
        id,
        text,
        tokens,
        category: "default".into(),
        gold_sense: None,
    }
}
