use serde::Serialize;

use crate::error::{Error, Result};
use crate::sense_class::SenseClass;
use crate::text::{normalize, tokenize, Tagger, Token, WhMatch};

/// A question after normalization, tagging, the content/function split and
/// Wh-phrase lookup.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyzedQuestion {
    pub text: String,
    pub tokens: Vec<Token>,
    /// Indices into `tokens` of the content words, in order.
    pub content: Vec<usize>,
    /// Indices into `tokens` of everything else, in order.
    pub function: Vec<usize>,
    pub wh: Option<WhMatch>,
}

impl AnalyzedQuestion {
    pub fn content_words(&self) -> impl Iterator<Item = &Token> {
        self.content.iter().map(|&i| &self.tokens[i])
    }

    pub fn function_words(&self) -> impl Iterator<Item = &Token> {
        self.function.iter().map(|&i| &self.tokens[i])
    }

    pub fn content_surfaces(&self) -> Vec<&str> {
        self.content_words().map(|t| t.surface.as_str()).collect()
    }

    pub fn sense(&self) -> Option<SenseClass> {
        self.wh.as_ref().map(|m| m.class)
    }
}

pub fn analyze(question: &str, tagger: &Tagger) -> Result<AnalyzedQuestion> {
    let text = normalize(question);
    let tokens = tagger.tag(&tokenize(&text));
    if tokens.is_empty() {
        return Err(Error::EmptyQuestion);
    }
    let (content, function): (Vec<usize>, Vec<usize>) =
        (0..tokens.len()).partition(|&i| tokens[i].is_content());
    let wh = tagger.wh_table().lookup(&tokens);
    Ok(AnalyzedQuestion {
        text,
        tokens,
        content,
        function,
        wh,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::PosTag;

    #[test]
    fn kinship_question() {
        let q = analyze("রামের মা এর নাম কি?", &Tagger::bundled()).unwrap();
        assert_eq!(q.content_surfaces(), vec!["রামের", "মা", "নাম"]);
        let function: Vec<_> = q.function_words().map(|t| t.surface.as_str()).collect();
        assert_eq!(function, vec!["এর", "কি"]);
        let wh = q.wh.unwrap();
        assert_eq!(wh.phrase, "কি");
        assert_eq!(wh.class, SenseClass::Object);
    }

    #[test]
    fn place_question_keeps_wh_out_of_content() {
        let q = analyze("কোথায় চৈতন্যপ্রভাব সুস্পষ্ট?", &Tagger::bundled()).unwrap();
        assert_eq!(q.sense(), Some(SenseClass::Place));
        assert_eq!(q.content_surfaces(), vec!["চৈতন্যপ্রভাব", "সুস্পষ্ট"]);
        assert_eq!(q.tokens[0].tag, PosTag::WhQuestion);
    }

    #[test]
    fn empty_question() {
        let t = Tagger::bundled();
        assert!(matches!(analyze("?", &t), Err(Error::EmptyQuestion)));
        assert!(matches!(analyze("   ", &t), Err(Error::EmptyQuestion)));
    }

    #[test]
    fn keyword_query_without_wh() {
        let q = analyze("রামের মা", &Tagger::bundled()).unwrap();
        assert_eq!(q.wh, None);
        assert_eq!(q.content.len(), 2);
    }
}
