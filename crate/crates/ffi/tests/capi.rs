use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::ptr;

use bnqa_ffi::*;

fn core_data(rel: &str) -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(rel);
    CString::new(p.to_str().unwrap()).unwrap()
}

fn last_error() -> String {
    let p = bnqa_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn build_ask_free() {
    let path = core_data("fixture/corpus.tsv");
    let mut index = ptr::null_mut();
    unsafe {
        assert_eq!(
            bnqa_index_build(path.as_ptr(), BnqaFormat::Tsv, &mut index),
            BnqaStatus::Ok
        );
        assert!(bnqa_last_error_message().is_null());
        assert_eq!(bnqa_index_len(index), 4);

        let mut engine = ptr::null_mut();
        assert_eq!(
            bnqa_engine_new(index, ptr::null(), &mut engine),
            BnqaStatus::Ok
        );
        bnqa_index_free(index);

        let q = CString::new("কোথায় চৈতন্যপ্রভাব সুস্পষ্ট?").unwrap();
        let mut json = ptr::null_mut();
        assert_eq!(
            bnqa_ask_json(engine, q.as_ptr(), 0, &mut json),
            BnqaStatus::Ok
        );
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        bnqa_string_free(json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["sentence_id"], 0);
        assert_eq!(v[0]["m6"], 1);

        let empty = CString::new("?").unwrap();
        let mut json = ptr::null_mut();
        assert_eq!(
            bnqa_ask_json(engine, empty.as_ptr(), 5, &mut json),
            BnqaStatus::EmptyQuestion
        );
        assert!(json.is_null());
        assert!(last_error().contains("empty"));
        bnqa_engine_free(engine);
    }
}

#[test]
fn save_and_load() {
    let dir = tempfile::tempdir().unwrap();
    let out = CString::new(dir.path().join("t.idx").to_str().unwrap()).unwrap();
    let path = core_data("fixture/corpus.tsv");
    unsafe {
        let mut index = ptr::null_mut();
        assert_eq!(
            bnqa_index_build(path.as_ptr(), BnqaFormat::Tsv, &mut index),
            BnqaStatus::Ok
        );
        assert_eq!(bnqa_index_save(index, out.as_ptr()), BnqaStatus::Ok);
        bnqa_index_free(index);

        let mut loaded = ptr::null_mut();
        assert_eq!(bnqa_index_load(out.as_ptr(), &mut loaded), BnqaStatus::Ok);
        assert_eq!(bnqa_index_len(loaded), 4);
        bnqa_index_free(loaded);

        // the corpus file is not an index
        let mut bad = ptr::null_mut();
        assert_eq!(
            bnqa_index_load(path.as_ptr(), &mut bad),
            BnqaStatus::IndexFormat
        );
        assert!(bad.is_null());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut index = ptr::null_mut();
        assert_eq!(
            bnqa_index_load(ptr::null(), &mut index),
            BnqaStatus::NullArgument
        );
        assert!(last_error().contains("path"));

        let missing = CString::new("/no/such/file").unwrap();
        assert_eq!(
            bnqa_index_load(missing.as_ptr(), &mut index),
            BnqaStatus::Io
        );

        let invalid = [0xffu8, 0xfe, 0];
        assert_eq!(
            bnqa_index_load(invalid.as_ptr().cast(), &mut index),
            BnqaStatus::InvalidUtf8
        );

        let corpus = core_data("fixture/corpus.tsv");
        assert_eq!(
            bnqa_index_build(corpus.as_ptr(), BnqaFormat::Tsv, &mut index),
            BnqaStatus::Ok
        );
        let mut engine = ptr::null_mut();
        let cfg = CString::new("top_k = 0").unwrap();
        assert_eq!(
            bnqa_engine_new(index, cfg.as_ptr(), &mut engine),
            BnqaStatus::Config
        );
        let cfg = CString::new("nonsense = true").unwrap();
        assert_eq!(
            bnqa_engine_new(index, cfg.as_ptr(), &mut engine),
            BnqaStatus::Config
        );
        assert!(engine.is_null());
        bnqa_index_free(index);

        assert_eq!(bnqa_index_len(ptr::null()), 0);
        bnqa_index_free(ptr::null_mut());
        bnqa_engine_free(ptr::null_mut());
        bnqa_string_free(ptr::null_mut());
    }
}

#[test]
fn metrics_over_the_c_abi() {
    let mut m = BnqaMetrics::default();
    unsafe {
        assert_eq!(bnqa_metrics(106, 3, 2, 1, &mut m), BnqaStatus::Ok);
        assert_eq!(
            bnqa_metrics(1, 1, 1, 1, ptr::null_mut()),
            BnqaStatus::NullArgument
        );
    }
    assert!((m.accuracy - 97.32).abs() < 0.005);
    assert!((m.f1 - 98.59).abs() < 0.005);
    assert!(!m.degenerate);
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/bnqa.h"))
            .unwrap();
    for name in [
        "bnqa_last_error_message",
        "bnqa_version",
        "bnqa_index_build",
        "bnqa_index_load",
        "bnqa_index_save",
        "bnqa_index_len",
        "bnqa_index_free",
        "bnqa_engine_new",
        "bnqa_engine_free",
        "bnqa_ask_json",
        "bnqa_string_free",
        "bnqa_metrics",
        "typedef struct BnqaIndex BnqaIndex",
        "BNQA_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    let v = unsafe { CStr::from_ptr(bnqa_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"bnqa.h\"\n\
         int main(void) {\n\
           BnqaIndex *idx = NULL;\n\
           BnqaMetrics m;\n\
           if (bnqa_metrics(1, 0, 0, 0, &m) != BNQA_STATUS_OK) return 1;\n\
           bnqa_index_free(idx);\n\
           return 0;\n\
         }\n",
    )
    .unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status();
    match status {
        Ok(s) => assert!(s.success(), "bnqa.h failed to compile"),
        Err(_) => eprintln!("cc not found; skipping"),
    }
}
