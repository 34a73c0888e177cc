//! Evaluation over question/expected-answer pairs: rank buckets, confusion
//! counts and the derived percentages.
//!
//! Outcome of one question:
//!
//! | expected | result                      | outcome        |
//! |----------|-----------------------------|----------------|
//! | id       | ranked 1                    | tp             |
//! | id       | ranked 2..=k                | unclassified   |
//! | id       | not in the top k            | fn             |
//! | none     | no candidates               | tn             |
//! | none     | some candidates             | fp             |

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::sense_class::SenseClass;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaPair {
    pub question: String,
    pub expected: Option<u32>,
    /// 1-based line in the source file, for error messages.
    pub line: usize,
}

/// Parses `question<TAB>expected_id` rows, `-` meaning no answer exists.
pub fn parse_qa_pairs(text: &str, source: &str) -> Result<Vec<QaPair>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 2 {
            return Err(Error::parse(
                source,
                lineno,
                format!("expected 2 columns, found {}", cols.len()),
            ));
        }
        let expected = match cols[1].trim() {
            "-" => None,
            id => Some(id.parse::<u32>().map_err(|_| {
                Error::parse(source, lineno, format!("invalid sentence id `{id}`"))
            })?),
        };
        out.push(QaPair {
            question: cols[0].to_string(),
            expected,
            line: lineno,
        });
    }
    Ok(out)
}

pub fn load_qa_pairs(path: impl AsRef<Path>) -> Result<Vec<QaPair>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_qa_pairs(&text, &path.display().to_string())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub tn: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
    /// Expected answer present but ranked between 2 and k.
    pub unclassified: u64,
}

impl ConfusionCounts {
    pub fn new(tp: u64, tn: u64, fp: u64, fn_: u64) -> Self {
        ConfusionCounts {
            tp,
            tn,
            fp,
            fn_,
            unclassified: 0,
        }
    }
}

/// Percentages reported to two decimals. Values are truncated, not rounded,
/// and F1 is computed from the reported precision and recall.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Metrics {
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// Set when any denominator was zero; the affected value is 0.
    pub degenerate: bool,
}

fn truncate2(x: f64) -> f64 {
    ((x * 100.0) + 1e-9).floor() / 100.0
}

fn percent(num: u64, den: u64, degenerate: &mut bool) -> f64 {
    if den == 0 {
        *degenerate = true;
        0.0
    } else {
        100.0 * num as f64 / den as f64
    }
}

pub fn metrics(c: &ConfusionCounts) -> Metrics {
    let mut degenerate = false;
    let accuracy = truncate2(percent(
        c.tp + c.tn,
        c.tp + c.tn + c.fp + c.fn_,
        &mut degenerate,
    ));
    let precision = truncate2(percent(c.tp, c.tp + c.fp, &mut degenerate));
    let recall = truncate2(percent(c.tp, c.tp + c.fn_, &mut degenerate));
    let f1 = if precision + recall == 0.0 {
        degenerate = true;
        0.0
    } else {
        truncate2(2.0 * precision * recall / (precision + recall))
    };
    Metrics {
        accuracy,
        precision,
        recall,
        f1,
        degenerate,
    }
}

/// Questions per rank range. Questions with no expected answer, or whose
/// answer was not returned, fall in `beyond`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RankBuckets {
    pub rank_1: u64,
    pub rank_2_5: u64,
    pub rank_6_10: u64,
    pub rank_11_15: u64,
    pub beyond: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Cumulative {
    pub top_1: f64,
    pub top_5: f64,
    pub top_10: f64,
    pub top_15: f64,
}

impl RankBuckets {
    pub fn add(&mut self, rank: Option<usize>) {
        match rank {
            Some(1) => self.rank_1 += 1,
            Some(2..=5) => self.rank_2_5 += 1,
            Some(6..=10) => self.rank_6_10 += 1,
            Some(11..=15) => self.rank_11_15 += 1,
            _ => self.beyond += 1,
        }
    }

    pub fn from_ranks(ranks: impl IntoIterator<Item = Option<usize>>) -> Self {
        let mut b = RankBuckets::default();
        for r in ranks {
            b.add(r);
        }
        b
    }

    pub fn total(&self) -> u64 {
        self.rank_1 + self.rank_2_5 + self.rank_6_10 + self.rank_11_15 + self.beyond
    }

    /// Cumulative percentage of all questions answered within rank 1, 5, 10, 15.
    pub fn cumulative(&self) -> Cumulative {
        let n = self.total();
        if n == 0 {
            return Cumulative::default();
        }
        let pct = |x: u64| 100.0 * x as f64 / n as f64;
        let c1 = self.rank_1;
        let c5 = c1 + self.rank_2_5;
        let c10 = c5 + self.rank_6_10;
        let c15 = c10 + self.rank_11_15;
        Cumulative {
            top_1: pct(c1),
            top_5: pct(c5),
            top_10: pct(c10),
            top_15: pct(c15),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Tp,
    Tn,
    Fp,
    Fn,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuestionResult {
    pub question: String,
    pub expected: Option<u32>,
    /// Rank of the expected answer within the top k.
    pub rank: Option<usize>,
    pub returned: usize,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub questions: u64,
    pub k: usize,
    pub buckets: RankBuckets,
    pub cumulative: Cumulative,
    pub counts: ConfusionCounts,
    pub metrics: Metrics,
    /// Sense class of the expected answer, over questions answered at rank 1.
    pub sense_distribution: BTreeMap<String, u64>,
    pub results: Vec<QuestionResult>,
}

pub const UNLABELED: &str = "unlabeled";

pub fn evaluate(engine: &Engine, pairs: &[QaPair], k: usize) -> Result<EvalReport> {
    for p in pairs {
        if let Some(id) = p.expected {
            if engine.index().sentence(id).is_none() {
                return Err(Error::DanglingExpectedId { line: p.line, id });
            }
        }
    }

    let mut buckets = RankBuckets::default();
    let mut counts = ConfusionCounts::default();
    let mut sense_distribution: BTreeMap<String, u64> = SenseClass::ALL
        .iter()
        .map(|c| (c.as_str().to_string(), 0))
        .collect();
    let mut results = Vec::with_capacity(pairs.len());

    for p in pairs {
        let answers = engine.answer(&p.question, k)?;
        let rank = p
            .expected
            .and_then(|id| answers.iter().find(|a| a.sentence_id == id).map(|a| a.rank));
        let outcome = match (p.expected, rank) {
            (Some(_), Some(1)) => Outcome::Tp,
            (Some(_), Some(_)) => Outcome::Unclassified,
            (Some(_), None) => Outcome::Fn,
            (None, _) if answers.is_empty() => Outcome::Tn,
            (None, _) => Outcome::Fp,
        };
        match outcome {
            Outcome::Tp => counts.tp += 1,
            Outcome::Tn => counts.tn += 1,
            Outcome::Fp => counts.fp += 1,
            Outcome::Fn => counts.fn_ += 1,
            Outcome::Unclassified => counts.unclassified += 1,
        }
        buckets.add(rank);
        if outcome == Outcome::Tp {
            let s = engine
                .index()
                .sentence(p.expected.unwrap())
                .expect("checked above");
            let key = engine
                .sense_source()
                .sense_of(s)
                .map_or(UNLABELED, SenseClass::as_str);
            *sense_distribution.entry(key.to_string()).or_default() += 1;
        }
        results.push(QuestionResult {
            question: p.question.clone(),
            expected: p.expected,
            rank,
            returned: answers.len(),
            outcome,
        });
    }

    Ok(EvalReport {
        questions: pairs.len() as u64,
        k,
        buckets,
        cumulative: buckets.cumulative(),
        counts,
        metrics: metrics(&counts),
        sense_distribution,
        results,
    })
}

impl EvalReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let b = &self.buckets;
        let c = &self.cumulative;
        let rows = [
            ("1st", b.rank_1, c.top_1),
            ("1st to 5th", b.rank_1 + b.rank_2_5, c.top_5),
            ("1st to 10th", b.rank_1 + b.rank_2_5 + b.rank_6_10, c.top_10),
            ("1st to 15th", b.total() - b.beyond, c.top_15),
        ];
        let _ = writeln!(
            out,
            "{:<14}{:>12}{:>14}",
            "Rank", "Questions", "Cumulative %"
        );
        for (label, n, pct) in rows {
            let _ = writeln!(out, "{label:<14}{n:>12}{pct:>14.2}");
        }
        let _ = writeln!(out, "{:<14}{:>12}", "not found", b.beyond);
        let _ = writeln!(out, "{:<14}{:>12}", "total", self.questions);
        let n = &self.counts;
        let _ = writeln!(
            out,
            "\nTP {}  TN {}  FP {}  FN {}  unclassified {}",
            n.tp, n.tn, n.fp, n.fn_, n.unclassified
        );
        let m = &self.metrics;
        let _ = writeln!(
            out,
            "Accuracy {:.2}  Precision {:.2}  Recall {:.2}  F1 {:.2}{}",
            m.accuracy,
            m.precision,
            m.recall,
            m.f1,
            if m.degenerate { "  (degenerate)" } else { "" }
        );
        let _ = writeln!(out, "\nSense class of rank-1 answers");
        for (class, n) in &self.sense_distribution {
            let _ = writeln!(out, "  {class:<12}{n:>6}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_metrics() {
        let m = metrics(&ConfusionCounts::default());
        assert_eq!(
            (m.accuracy, m.precision, m.recall, m.f1),
            (0.0, 0.0, 0.0, 0.0)
        );
        assert!(m.degenerate);
    }

    #[test]
    fn perfect_metrics() {
        let m = metrics(&ConfusionCounts::new(1, 0, 0, 0));
        assert_eq!(
            (m.accuracy, m.precision, m.recall, m.f1),
            (100.0, 100.0, 100.0, 100.0)
        );
        assert!(!m.degenerate);
    }

    #[test]
    fn truncation_not_rounding() {
        // 2/3 = 66.666..
        let m = metrics(&ConfusionCounts::new(2, 0, 1, 0));
        assert_eq!(m.precision, 66.66);
        assert_eq!(truncate2(0.29), 0.29);
        assert_eq!(truncate2(57.0), 57.0);
    }

    #[test]
    fn buckets_from_ranks() {
        let b = RankBuckets::from_ranks([Some(1), Some(5), Some(6), Some(15), Some(16), None]);
        assert_eq!(
            (b.rank_1, b.rank_2_5, b.rank_6_10, b.rank_11_15, b.beyond),
            (1, 1, 1, 1, 2)
        );
        assert_eq!(b.total(), 6);
        let c = b.cumulative();
        assert!(c.top_1 <= c.top_5 && c.top_5 <= c.top_10 && c.top_10 <= c.top_15);
        assert_eq!(RankBuckets::default().cumulative(), Cumulative::default());
    }

    #[test]
    fn qa_parsing() {
        let p = parse_qa_pairs("# c\nক কি?\t4\nখ কে?\t-\n", "qa.tsv").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[0].expected, Some(4));
        assert_eq!(p[0].line, 2);
        assert_eq!(p[1].expected, None);
        assert!(matches!(
            parse_qa_pairs("ক\tx\n", "qa.tsv"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_qa_pairs("ক\n", "qa.tsv"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
