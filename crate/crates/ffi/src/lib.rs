//! C interface to `bnqa-core`.
//!
//! Handles are opaque pointers owned by the caller and released with the
//! matching `*_free` function. Every entry point returns a [`BnqaStatus`];
//! on failure [`bnqa_last_error_message`] describes what went wrong on the
//! calling thread. Strings passed in must be NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bnqa_core::corpus::{self, Format};
use bnqa_core::{metrics, Config, ConfusionCounts, CorpusIndex, Engine, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnqaStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    IndexFormat = 5,
    EmptyQuestion = 6,
    Config = 7,
    InvalidArgument = 8,
    Panic = 99,
}

/// Corpus layout accepted by [`bnqa_index_build`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnqaFormat {
    Plain = 0,
    Tsv = 1,
}

/// Evaluation percentages, truncated to two decimals.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BnqaMetrics {
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// Set when a denominator was zero and the affected values are 0.
    pub degenerate: bool,
}

/// Opaque corpus index.
pub struct BnqaIndex {
    inner: CorpusIndex,
}

/// Opaque question answering engine.
pub struct BnqaEngine {
    inner: Engine,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> BnqaStatus {
    match err {
        Error::Io { .. } => BnqaStatus::Io,
        Error::Parse { .. } | Error::DuplicateId(_) | Error::DanglingExpectedId { .. } => {
            BnqaStatus::Parse
        }
        Error::IndexFormat(_) => BnqaStatus::IndexFormat,
        Error::EmptyQuestion => BnqaStatus::EmptyQuestion,
        Error::Config(_) => BnqaStatus::Config,
        _ => BnqaStatus::InvalidArgument,
    }
}

struct Fail(BnqaStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, recording any error or panic for `bnqa_last_error_message`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BnqaStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BnqaStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BnqaStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(BnqaStatus::NullArgument, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Fail(
            BnqaStatus::InvalidUtf8,
            format!("{name} is not valid UTF-8"),
        )
    })
}

fn null(name: &str) -> Fail {
    Fail(BnqaStatus::NullArgument, format!("{name} is null"))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn bnqa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn bnqa_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Ingests a corpus file with the bundled tagger and builds an index.
///
/// # Safety
/// `path` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnqa_index_build(
    path: *const c_char,
    format: BnqaFormat,
    out: *mut *mut BnqaIndex,
) -> BnqaStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let path = str_arg(path, "path")?;
        let format = match format {
            BnqaFormat::Plain => Format::Plain,
            BnqaFormat::Tsv => Format::Tsv,
        };
        let tagger = Config::from_env()?.tagger()?;
        let index = CorpusIndex::build(corpus::ingest(path, format, &tagger)?)?;
        *out = Box::into_raw(Box::new(BnqaIndex { inner: index }));
        Ok(())
    })
}

/// Loads an index file written by `bnqa index` or [`bnqa_index_save`].
///
/// # Safety
/// `path` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnqa_index_load(
    path: *const c_char,
    out: *mut *mut BnqaIndex,
) -> BnqaStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let path = str_arg(path, "path")?;
        let index = corpus::load_index(path)?;
        *out = Box::into_raw(Box::new(BnqaIndex { inner: index }));
        Ok(())
    })
}

/// # Safety
/// `index` must come from this library and `path` must be a valid C string.
#[no_mangle]
pub unsafe extern "C" fn bnqa_index_save(
    index: *const BnqaIndex,
    path: *const c_char,
) -> BnqaStatus {
    guard(|| {
        let index = index.as_ref().ok_or_else(|| null("index"))?;
        let path = str_arg(path, "path")?;
        corpus::save_index(&index.inner, path)?;
        Ok(())
    })
}

/// Number of sentences in the index, 0 for null.
///
/// # Safety
/// `index` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn bnqa_index_len(index: *const BnqaIndex) -> usize {
    index.as_ref().map_or(0, |i| i.inner.len())
}

/// # Safety
/// `index` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bnqa_index_free(index: *mut BnqaIndex) {
    if !index.is_null() {
        drop(Box::from_raw(index));
    }
}

/// Creates an engine over a copy of `index`. `config_toml` may be null for
/// defaults; otherwise it uses the same keys as a `QA_CONFIG` file. The
/// index handle stays owned by the caller.
///
/// # Safety
/// `index` must come from this library, `config_toml` must be null or a
/// valid C string, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnqa_engine_new(
    index: *const BnqaIndex,
    config_toml: *const c_char,
    out: *mut *mut BnqaEngine,
) -> BnqaStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let index = index.as_ref().ok_or_else(|| null("index"))?;
        let config = if config_toml.is_null() {
            Config::default()
        } else {
            Config::from_toml(str_arg(config_toml, "config_toml")?)?
        };
        let engine = config.build_engine(index.inner.clone())?;
        *out = Box::into_raw(Box::new(BnqaEngine { inner: engine }));
        Ok(())
    })
}

/// # Safety
/// `engine` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bnqa_engine_free(engine: *mut BnqaEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Answers `question` and stores a JSON array of up to `k` ranked answers in
/// `*out_json`. Release it with [`bnqa_string_free`]. A `k` of 0 uses the
/// engine's configured top-k.
///
/// # Safety
/// `engine` must come from this library, `question` must be a valid C string
/// and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnqa_ask_json(
    engine: *const BnqaEngine,
    question: *const c_char,
    k: usize,
    out_json: *mut *mut c_char,
) -> BnqaStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let engine = engine.as_ref().ok_or_else(|| null("engine"))?;
        let question = str_arg(question, "question")?;
        let k = if k == 0 {
            engine.inner.settings().top_k
        } else {
            k
        };
        let json = bnqa_core::cli::answers_json(&engine.inner, question, k, false)?;
        let c = CString::new(json)
            .map_err(|_| Fail(BnqaStatus::InvalidArgument, "answer contains NUL".into()))?;
        *out_json = c.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed only once.
#[no_mangle]
pub unsafe extern "C" fn bnqa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Accuracy, precision, recall and F1 from confusion counts.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnqa_metrics(
    tp: u64,
    tn: u64,
    fp: u64,
    fn_: u64,
    out: *mut BnqaMetrics,
) -> BnqaStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let m = metrics(&ConfusionCounts::new(tp, tn, fp, fn_));
        *out = BnqaMetrics {
            accuracy: m.accuracy,
            precision: m.precision,
            recall: m.recall,
            f1: m.f1,
            degenerate: m.degenerate,
        };
        Ok(())
    })
}
