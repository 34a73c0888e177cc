//! Text preparation: Unicode normalization, tokenization, POS tagging and
//! Wh-phrase lookup.

mod pos;
mod tagger;
mod wh;

use unicode_normalization::UnicodeNormalization;
use unicode_properties::{GeneralCategoryGroup, UnicodeGeneralCategory};

pub use pos::{PosTag, Token, UnknownTag};
pub use tagger::{Lexicon, Tagger};
pub use wh::{wh_lookup, WhEntry, WhMatch, WhTable};

const DANDA: char = '\u{0964}';
const DOUBLE_DANDA: char = '\u{0965}';

/// Unicode `P*` categories plus the two danda marks.
pub fn is_punctuation(c: char) -> bool {
    c == DANDA
        || c == DOUBLE_DANDA
        || c.general_category_group() == GeneralCategoryGroup::Punctuation
}

pub fn is_punctuation_only(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_punctuation)
}

/// NFC-normalizes `text`, pads every punctuation character with spaces and
/// collapses runs of whitespace to a single space.
pub fn normalize(text: &str) -> String {
    let mut spaced = String::with_capacity(text.len() + 8);
    for c in text.nfc() {
        if is_punctuation(c) {
            spaced.push(' ');
            spaced.push(c);
            spaced.push(' ');
        } else {
            spaced.push(c);
        }
    }
    spaced.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Splits normalized text on whitespace and drops punctuation-only tokens.
pub fn tokenize(text: &str) -> Vec<&str> {
    text.split_whitespace()
        .filter(|t| !is_punctuation_only(t))
        .collect()
}
