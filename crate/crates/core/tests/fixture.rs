mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use common::{data_dir, fixture_engine, FIXTURE_QUESTION};

/// (sentence_id, column) -> pinned value, from the fixture's expected file.
fn pinned() -> BTreeMap<(u32, String), String> {
    let text = std::fs::read_to_string(data_dir().join("fixture/expected.tsv")).unwrap();
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            ((f[0].parse().unwrap(), f[1].to_string()), f[3].to_string())
        })
        .collect()
}

#[test]
fn scores_match_pinned_values() {
    let start = Instant::now();
    let engine = fixture_engine();
    let answers = engine.answer(FIXTURE_QUESTION, 15).unwrap();
    assert!(start.elapsed().as_secs_f64() < 1.0);

    let pins = pinned();
    assert!(!pins.is_empty());
    for ((id, column), value) in &pins {
        let found = answers.iter().find(|a| a.sentence_id == *id);
        if value == "-" {
            assert!(found.is_none(), "sentence {id} should not be retrieved");
            continue;
        }
        let a = found.unwrap_or_else(|| panic!("sentence {id} not retrieved"));
        let got = match column.as_str() {
            "rank" => a.rank as u64,
            "m1" => a.scores.m1 as u64,
            "m2" => a.scores.m2 as u64,
            "m3" => a.scores.m3 as u64,
            "m5" => a.scores.m5 as u64,
            "m6" => a.scores.m6 as u64,
            other => panic!("unknown column {other}"),
        };
        assert_eq!(got.to_string(), *value, "sentence {id} column {column}");
    }
}

#[test]
fn rank_one_is_the_mangalkavya_sentence() {
    let engine = fixture_engine();
    let answers = engine.answer(FIXTURE_QUESTION, 15).unwrap();
    let top = &answers[0];
    assert_eq!(top.sentence_id, 0);
    assert_eq!((top.scores.m1, top.scores.m2, top.scores.m6), (2, 2, 1));
    let text = &engine.index().sentence(0).unwrap().text;
    assert!(text.starts_with("মঙ্গলকাব্যের"));
}

#[test]
fn entropy_difference_from_first_principles() {
    let engine = fixture_engine();
    let index = engine.index();
    let total = index.total_tokens() as f64;
    let h = |surfaces: &[&str]| -> f64 {
        surfaces
            .iter()
            .map(|w| {
                let n = index
                    .sentences()
                    .flat_map(|s| s.tokens.iter())
                    .filter(|t| t.surface == *w)
                    .count() as f64;
                if n == 0.0 {
                    0.0
                } else {
                    -(n / total) * (n / total).log2()
                }
            })
            .sum()
    };
    let q = ["কোথায়", "চৈতন্যপ্রভাব", "সুস্পষ্ট"];
    let s0: Vec<&str> = index
        .sentence(0)
        .unwrap()
        .tokens
        .iter()
        .map(|t| t.surface.as_str())
        .collect();
    let expected = (h(&q) - h(&s0)).abs();
    let answers = engine.answer(FIXTURE_QUESTION, 15).unwrap();
    assert!((answers[0].scores.m4 - expected).abs() < 1e-12);
}
