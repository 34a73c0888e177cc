//! `bnqa` command-line front end.

use std::ffi::OsString;
use std::io::{BufRead, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::Config;
use crate::corpus::{ingest, load_index, save_index, CorpusIndex, Format};
use crate::engine::{Engine, RankedAnswer};
use crate::error::{Error, Result};
use crate::eval::{evaluate, load_qa_pairs};
use crate::question::AnalyzedQuestion;
use crate::scoring::{EntropySign, KeywordMatch};
use crate::sense::SenseMode;
use crate::text::{normalize, tokenize};

#[derive(Debug, Parser)]
#[command(
    name = "bnqa",
    version,
    about = "Bengali question answering over a sentence corpus"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ingest a corpus and write an index file
    Index(IndexArgs),
    /// Answer one question
    Ask(AskArgs),
    /// Evaluate against a question/answer file
    Eval(EvalArgs),
    /// Answer questions read line by line from stdin
    Repl(ReplArgs),
    /// Print the tokens and tags of a text
    Tag(TagArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CorpusFormat {
    Plain,
    Tsv,
}

impl From<CorpusFormat> for Format {
    fn from(f: CorpusFormat) -> Self {
        match f {
            CorpusFormat::Plain => Format::Plain,
            CorpusFormat::Tsv => Format::Tsv,
        }
    }
}

#[derive(Debug, Args)]
pub struct TaggerArgs {
    /// Lexicon TSV (`surface<TAB>tag`); defaults to the bundled lexicon
    #[arg(long, value_name = "PATH")]
    pub lexicon: Option<PathBuf>,
    /// Wh-table TSV (`phrase<TAB>class`); defaults to the bundled table
    #[arg(long, value_name = "PATH")]
    pub wh_table: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: CorpusFormat,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    #[command(flatten)]
    pub tagger: TaggerArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SenseModeArg {
    Gold,
    Rules,
    Nb,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EntropySignArg {
    Add,
    Subtract,
}

/// Flags shared by every command that answers questions. Unset flags fall
/// back to the file named by `QA_CONFIG`, then to built-in defaults.
#[derive(Debug, Args)]
pub struct EngineArgs {
    /// Index file written by `bnqa index`
    #[arg(long, value_name = "PATH")]
    pub index: Option<PathBuf>,
    /// Number of answers to return
    #[arg(short = 'k', long = "top-k", value_name = "N")]
    pub top_k: Option<usize>,
    /// Zero out a scoring module (1-6); repeatable
    #[arg(long = "disable-module", value_name = "N", value_parser = clap::value_parser!(u8).range(1..=6))]
    pub disable_module: Vec<u8>,
    /// Source of sentence sense classes
    #[arg(long, value_enum)]
    pub sense_mode: Option<SenseModeArg>,
    /// Minimum shared prefix, in characters, for inflected matches
    #[arg(long, value_name = "N")]
    pub min_prefix: Option<usize>,
    /// Fraction of the shorter word the shared prefix must cover
    #[arg(long, value_name = "FRACTION")]
    pub prefix_coverage: Option<f64>,
    /// Whether the entropy difference is added to or subtracted from the total
    #[arg(long, value_enum)]
    pub entropy_sign: Option<EntropySignArg>,
    /// Sense rule TSV (`cue<TAB>class`)
    #[arg(long, value_name = "PATH")]
    pub rules: Option<PathBuf>,
    /// Labeled corpus TSV for training Naive Bayes
    #[arg(long, value_name = "PATH")]
    pub nb_train: Option<PathBuf>,
    #[command(flatten)]
    pub tagger: TaggerArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AnswerFormat {
    /// Human-readable listing
    Text,
    /// One JSON array holding every answer
    Json,
    /// One JSON object per line
    Jsonl,
}

#[derive(Debug, Args)]
pub struct AskArgs {
    #[command(flatten)]
    pub engine: EngineArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: AnswerFormat,
    /// Include matched keywords and the question analysis
    #[arg(long)]
    pub explain: bool,
    #[arg(required = true, num_args = 1.., value_name = "QUESTION")]
    pub question: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Table,
    Both,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub engine: EngineArgs,
    /// `question<TAB>expected_id` file, `-` for questions with no answer
    #[arg(long, value_name = "PATH")]
    pub qa: PathBuf,
    #[arg(long, value_enum, default_value = "both")]
    pub format: ReportFormat,
    /// Also write the JSON report to this file
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReplArgs {
    #[command(flatten)]
    pub engine: EngineArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: AnswerFormat,
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Args)]
pub struct TagArgs {
    #[command(flatten)]
    pub tagger: TaggerArgs,
    #[arg(required = true, num_args = 1.., value_name = "TEXT")]
    pub text: Vec<String>,
}

/// Exit status for an error: 2 for usage, configuration and unreadable
/// files, 1 for everything else.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io { .. } | Error::Config(_) => 2,
        _ => 1,
    }
}

/// Parses `args` and runs the command, returning the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, stdin, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(
    cmd: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    match cmd {
        Command::Index(a) => cmd_index(a, out),
        Command::Ask(a) => cmd_ask(a, out),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Repl(a) => cmd_repl(a, stdin, out, err),
        Command::Tag(a) => cmd_tag(a, out),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

fn apply_tagger_args(cfg: &mut Config, t: TaggerArgs) {
    if t.lexicon.is_some() {
        cfg.lexicon = t.lexicon;
    }
    if t.wh_table.is_some() {
        cfg.wh_table = t.wh_table;
    }
}

/// `QA_CONFIG` file (if any) overridden by flags.
fn resolve_config(a: EngineArgs) -> Result<Config> {
    let mut cfg = Config::from_env()?;
    if a.index.is_some() {
        cfg.index = a.index;
    }
    if let Some(k) = a.top_k {
        cfg.top_k = k;
    }
    if !a.disable_module.is_empty() {
        cfg.disabled_modules = a.disable_module;
    }
    if let Some(m) = a.sense_mode {
        cfg.sense_mode = match m {
            SenseModeArg::Gold => SenseMode::Gold,
            SenseModeArg::Rules => SenseMode::Rules,
            SenseModeArg::Nb => SenseMode::NaiveBayes,
        };
    }
    if let Some(n) = a.min_prefix {
        cfg.min_prefix = n;
    }
    if let Some(c) = a.prefix_coverage {
        cfg.prefix_coverage = c;
    }
    if let Some(s) = a.entropy_sign {
        cfg.entropy_sign = match s {
            EntropySignArg::Add => EntropySign::Add,
            EntropySignArg::Subtract => EntropySign::Subtract,
        };
    }
    if a.rules.is_some() {
        cfg.rules = a.rules;
    }
    if a.nb_train.is_some() {
        cfg.nb_train = a.nb_train;
    }
    apply_tagger_args(&mut cfg, a.tagger);
    Ok(cfg)
}

fn load_engine(a: EngineArgs) -> Result<Engine> {
    let cfg = resolve_config(a)?;
    let path = cfg
        .index
        .clone()
        .ok_or_else(|| Error::Config("no index given (use --index or QA_CONFIG)".into()))?;
    let index = load_index(&path)?;
    cfg.build_engine(index)
}

fn cmd_index(a: IndexArgs, out: &mut dyn Write) -> Result<()> {
    let mut cfg = Config::from_env()?;
    apply_tagger_args(&mut cfg, a.tagger);
    let tagger = cfg.tagger()?;
    let sentences = ingest(&a.input, a.format.into(), &tagger)?;
    let index = CorpusIndex::build(sentences)?;
    save_index(&index, &a.out)?;
    writeln!(
        out,
        "{} sentences, {} tokens, {} indexed words -> {}",
        index.len(),
        index.total_tokens(),
        index.inverted().len(),
        a.out.display()
    )
    .map_err(io_err)
}

#[derive(Serialize)]
struct AnswerRecord<'a> {
    rank: usize,
    sentence_id: u32,
    text: &'a str,
    m1: u32,
    m2: u32,
    m3: u32,
    m4: f64,
    m5: u8,
    m6: u8,
    total: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    explain: Option<Explain<'a>>,
}

#[derive(Serialize)]
struct Explain<'a> {
    cosine: f64,
    sense: Option<&'static str>,
    question_sense: Option<&'static str>,
    matches: &'a [KeywordMatch],
}

fn record<'a>(
    engine: &'a Engine,
    q: &AnalyzedQuestion,
    a: &'a RankedAnswer,
    explain: bool,
) -> AnswerRecord<'a> {
    let text = engine
        .index()
        .sentence(a.sentence_id)
        .map_or("", |s| s.text.as_str());
    let s = &a.scores;
    AnswerRecord {
        rank: a.rank,
        sentence_id: a.sentence_id,
        text,
        m1: s.m1,
        m2: s.m2,
        m3: s.m3,
        m4: s.m4,
        m5: s.m5,
        m6: s.m6,
        total: s.total,
        explain: explain.then(|| Explain {
            cosine: a.cosine,
            sense: a.sentence_sense.map(|c| c.as_str()),
            question_sense: q.sense().map(|c| c.as_str()),
            matches: &a.matches,
        }),
    }
}

/// Answers `question` and returns the same JSON array `ask --format json`
/// prints.
pub fn answers_json(engine: &Engine, question: &str, k: usize, explain: bool) -> Result<String> {
    let q = engine.analyze(question)?;
    let answers = engine.answer_analyzed(&q, k)?;
    let records: Vec<AnswerRecord> = answers
        .iter()
        .map(|a| record(engine, &q, a, explain))
        .collect();
    Ok(serde_json::to_string(&records).expect("records serialize"))
}

fn write_answers(
    engine: &Engine,
    question: &str,
    format: AnswerFormat,
    explain: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let q = engine.analyze(question)?;
    let answers = engine.answer_analyzed(&q, engine.settings().top_k)?;
    let records: Vec<AnswerRecord> = answers
        .iter()
        .map(|a| record(engine, &q, a, explain))
        .collect();
    match format {
        AnswerFormat::Json => {
            let json = serde_json::to_string(&records).expect("records serialize");
            writeln!(out, "{json}").map_err(io_err)?;
        }
        AnswerFormat::Jsonl => {
            for r in &records {
                let json = serde_json::to_string(r).expect("records serialize");
                writeln!(out, "{json}").map_err(io_err)?;
            }
        }
        AnswerFormat::Text => write_text(&q, &records, explain, out).map_err(io_err)?,
    }
    Ok(())
}

fn write_text(
    q: &AnalyzedQuestion,
    records: &[AnswerRecord],
    explain: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    if explain {
        let content: Vec<String> = q
            .content_words()
            .map(|t| format!("{}/{}", t.surface, t.tag))
            .collect();
        let function: Vec<String> = q
            .function_words()
            .map(|t| format!("{}/{}", t.surface, t.tag))
            .collect();
        writeln!(out, "content:  {}", content.join(" "))?;
        writeln!(out, "function: {}", function.join(" "))?;
        match &q.wh {
            Some(m) => writeln!(out, "wh:       {} ({})", m.phrase, m.class)?,
            None => writeln!(out, "wh:       none")?,
        }
    }
    if records.is_empty() {
        return writeln!(out, "no answer");
    }
    for r in records {
        writeln!(
            out,
            "#{:<3} {:>9.4}  [{}] {}",
            r.rank, r.total, r.sentence_id, r.text
        )?;
        writeln!(
            out,
            "     m1 {}  m2 {}  m3 {}  m4 {:.6}  m5 {}  m6 {}",
            r.m1, r.m2, r.m3, r.m4, r.m5, r.m6
        )?;
        if let Some(e) = &r.explain {
            for m in e.matches {
                writeln!(
                    out,
                    "     {} ~ {} ({}, {}/{})",
                    m.q_surface,
                    m.s_surface,
                    if m.exact { "exact" } else { "prefix" },
                    m.q_tag,
                    m.s_tag
                )?;
            }
            writeln!(
                out,
                "     cosine {:.4}  sense {}",
                e.cosine,
                e.sense.unwrap_or("-")
            )?;
        }
    }
    Ok(())
}

fn cmd_ask(a: AskArgs, out: &mut dyn Write) -> Result<()> {
    let engine = load_engine(a.engine)?;
    let question = a.question.join(" ");
    write_answers(&engine, &question, a.format, a.explain, out)
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> Result<()> {
    let pairs = load_qa_pairs(&a.qa)?;
    let engine = load_engine(a.engine)?;
    let report = evaluate(&engine, &pairs, engine.settings().top_k)?;
    let json = report.to_json();
    if let Some(path) = &a.out {
        std::fs::write(path, format!("{json}\n")).map_err(|e| Error::io(path, e))?;
    }
    if matches!(a.format, ReportFormat::Json | ReportFormat::Both) {
        writeln!(out, "{json}").map_err(io_err)?;
    }
    if matches!(a.format, ReportFormat::Table | ReportFormat::Both) {
        write!(out, "{}", report.render_table()).map_err(io_err)?;
    }
    Ok(())
}

fn cmd_repl(
    a: ReplArgs,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let engine = load_engine(a.engine)?;
    let interactive = std::io::stdin().is_terminal();
    let mut line = String::new();
    loop {
        if interactive {
            write!(out, "> ")
                .and_then(|_| out.flush())
                .map_err(io_err)?;
        }
        line.clear();
        if stdin
            .read_line(&mut line)
            .map_err(|e| Error::io("<stdin>", e))?
            == 0
        {
            break;
        }
        let question = line.trim();
        if question.is_empty() {
            continue;
        }
        if a.format == AnswerFormat::Text {
            writeln!(out, "Q: {question}").map_err(io_err)?;
        }
        match write_answers(&engine, question, a.format, a.explain, out) {
            Ok(()) => {}
            Err(Error::EmptyQuestion) => {
                let _ = writeln!(err, "error: empty question");
            }
            Err(e) => return Err(e),
        }
        if a.format == AnswerFormat::Text {
            writeln!(out).map_err(io_err)?;
        }
    }
    Ok(())
}

fn cmd_tag(a: TagArgs, out: &mut dyn Write) -> Result<()> {
    let mut cfg = Config::from_env()?;
    apply_tagger_args(&mut cfg, a.tagger);
    let tagger = cfg.tagger()?;
    let text = normalize(&a.text.join(" "));
    for t in tagger.tag(&tokenize(&text)) {
        writeln!(out, "{}\t{}", t.surface, t.tag).map_err(io_err)?;
    }
    Ok(())
}
