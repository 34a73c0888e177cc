use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Twelve-way projection of the shallow-parser tagset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PosTag {
    Noun,
    ProperNoun,
    Pronoun,
    Verb,
    Adjective,
    Adverb,
    WhQuestion,
    Postposition,
    Conjunction,
    Quantifier,
    Punctuation,
    Other,
}

impl PosTag {
    pub const ALL: [PosTag; 12] = [
        PosTag::Noun,
        PosTag::ProperNoun,
        PosTag::Pronoun,
        PosTag::Verb,
        PosTag::Adjective,
        PosTag::Adverb,
        PosTag::WhQuestion,
        PosTag::Postposition,
        PosTag::Conjunction,
        PosTag::Quantifier,
        PosTag::Punctuation,
        PosTag::Other,
    ];

    /// Nouns (common and proper), verbs, adjectives and adverbs.
    pub fn is_content(self) -> bool {
        matches!(
            self,
            PosTag::Noun | PosTag::ProperNoun | PosTag::Verb | PosTag::Adjective | PosTag::Adverb
        )
    }

    /// Canonical mnemonic written by the tagger and the index file.
    pub fn mnemonic(self) -> &'static str {
        match self {
            PosTag::Noun => "NN",
            PosTag::ProperNoun => "NNP",
            PosTag::Pronoun => "PRP",
            PosTag::Verb => "VM",
            PosTag::Adjective => "JJ",
            PosTag::Adverb => "RB",
            PosTag::WhQuestion => "WQ",
            PosTag::Postposition => "PSP",
            PosTag::Conjunction => "CC",
            PosTag::Quantifier => "QC",
            PosTag::Punctuation => "SYM",
            PosTag::Other => "UNK",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PosTag::Noun => "noun",
            PosTag::ProperNoun => "propernoun",
            PosTag::Pronoun => "pronoun",
            PosTag::Verb => "verb",
            PosTag::Adjective => "adjective",
            PosTag::Adverb => "adverb",
            PosTag::WhQuestion => "whquestion",
            PosTag::Postposition => "postposition",
            PosTag::Conjunction => "conjunction",
            PosTag::Quantifier => "quantifier",
            PosTag::Punctuation => "punctuation",
            PosTag::Other => "other",
        }
    }

    /// Maps a raw shallow-parser tag onto the projection. Never fails;
    /// unrecognized tags become `Other`.
    pub fn from_raw(raw: &str) -> PosTag {
        Self::recognize(raw).unwrap_or(PosTag::Other)
    }

    fn recognize(raw: &str) -> Option<PosTag> {
        let upper = raw.trim().to_ascii_uppercase();
        let tag = match upper.as_str() {
            "NN" | "NNS" | "NST" | "N_NN" => PosTag::Noun,
            "NNP" | "N_NNP" => PosTag::ProperNoun,
            "PRP" | "PR" | "DEM" | "PR_PRP" => PosTag::Pronoun,
            "VM" | "VAUX" | "VB" | "V_VM" | "V_VAUX" => PosTag::Verb,
            "JJ" => PosTag::Adjective,
            "RB" | "RBP" => PosTag::Adverb,
            "WQ" | "PR_WQ" | "DM_DMQ" => PosTag::WhQuestion,
            "PSP" => PosTag::Postposition,
            "CC" | "CCD" | "CCS" => PosTag::Conjunction,
            "QC" | "QF" | "QO" | "QT_QTC" | "QT_QTF" | "QT_QTO" => PosTag::Quantifier,
            "SYM" | "PUNC" | "RD_PUNC" | "RD_SYM" => PosTag::Punctuation,
            "UNK" | "OTHER" => PosTag::Other,
            _ => {
                let lower = upper.to_ascii_lowercase();
                return Self::ALL.into_iter().find(|t| t.name() == lower);
            }
        };
        Some(tag)
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mnemonic())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTag(pub String);

impl fmt::Display for UnknownTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown POS tag `{}`", self.0)
    }
}

impl std::error::Error for UnknownTag {}

/// Strict parse: accepts mnemonics and lowercase names, rejects anything else.
impl FromStr for PosTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::recognize(s).ok_or_else(|| UnknownTag(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub tag: PosTag,
}

impl Token {
    pub fn new(surface: impl Into<String>, tag: PosTag) -> Self {
        Token {
            surface: surface.into(),
            tag,
        }
    }

    pub fn is_content(&self) -> bool {
        self.tag.is_content()
    }
}
