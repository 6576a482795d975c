use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use subchord_ffi::*;

fn parse(text: &str) -> (SubchordStatus, *mut SubchordWord) {
    let c = CString::new(text).unwrap();
    let mut w = ptr::null_mut();
    let s = unsafe { subchord_word_parse(c.as_ptr(), &mut w) };
    (s, w)
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { subchord_string_free(p) };
    s
}

#[test]
fn trefoil_through_the_abi() {
    let (s, w) = parse("a b c a b c");
    assert_eq!(s, SubchordStatus::Ok);
    let mut n = 0usize;
    let mut counts = SubchordCounts::default();
    let mut lambda = 99i64;
    let mut avg = 99i64;
    let mut real = false;
    let mut triv = false;
    unsafe {
        assert_eq!(subchord_word_crossing_count(w, &mut n), SubchordStatus::Ok);
        assert_eq!(subchord_counts(w, &mut counts), SubchordStatus::Ok);
        assert_eq!(subchord_lambda(w, &mut lambda), SubchordStatus::Ok);
        assert_eq!(subchord_averaged(w, &mut avg), SubchordStatus::Ok);
        assert_eq!(subchord_is_realizable(w, &mut real), SubchordStatus::Ok);
        assert_eq!(subchord_trivializable(w, SubchordMoveSet::RiStrongRiii, &mut triv), SubchordStatus::Ok);
    }
    assert_eq!(n, 3);
    assert_eq!(counts, SubchordCounts { cross: 3, triple: 1, h: 0, iii: 0, hh: 0 });
    assert_eq!((lambda, avg, real, triv), (0, -1, true, true));
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { subchord_analyze_json(w, &mut out) }, SubchordStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["lambda"], 0);
    assert_eq!(v["averaged"], -1);
    assert_eq!(v["counts"]["triple"], 1);
    unsafe { subchord_word_free(w) };
}

#[test]
fn error_codes() {
    let (s, w) = parse("1 2 2");
    assert_eq!(s, SubchordStatus::LabelNotTwice);
    assert!(w.is_null());
    let msg = unsafe { CStr::from_ptr(subchord_last_error()) }.to_str().unwrap();
    assert!(msg.starts_with("LABEL_NOT_TWICE"), "{msg}");

    let (s, w) = parse("1,,2");
    assert_eq!(s, SubchordStatus::EmptyToken);
    assert!(w.is_null());

    let (_, w) = parse("1 2 1 2");
    let mut x = 0i64;
    assert_eq!(unsafe { subchord_averaged(w, &mut x) }, SubchordStatus::NotRealizable);
    assert_eq!(unsafe { subchord_lambda(ptr::null(), &mut x) }, SubchordStatus::NullPointer);
    let (_, t) = parse("1 2 3 1 2 3");
    assert_eq!(unsafe { subchord_lambda(t, ptr::null_mut()) }, SubchordStatus::NullPointer);
    unsafe { subchord_word_free(t) };
    let name = unsafe { CStr::from_ptr(subchord_status_name(SubchordStatus::NotRealizable)) };
    assert_eq!(name.to_str().unwrap(), "NOT_REALIZABLE");
    unsafe { subchord_word_free(w) };
    unsafe { subchord_word_free(ptr::null_mut()) };

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { subchord_census_json(9, true, &mut out) }, SubchordStatus::BoundExceeded);
    assert!(out.is_null());
}

#[test]
fn census_and_verify() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { subchord_census_json(5, true, &mut out) }, SubchordStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[1]["lambda"], 4);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { subchord_verify(SubchordSuite::Oracle, 5, &mut report) }, SubchordStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(v["suite"], "oracle");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(unsafe { subchord_verify(SubchordSuite::Averaged, 4, ptr::null_mut()) }, SubchordStatus::Ok);
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/subchord.h")).unwrap();
    for f in [
        "subchord_word_parse",
        "subchord_word_free",
        "subchord_string_free",
        "subchord_last_error",
        "subchord_status_name",
        "subchord_counts",
        "subchord_lambda",
        "subchord_averaged",
        "subchord_trivializable",
        "subchord_analyze_json",
        "subchord_census_json",
        "subchord_verify",
        "typedef struct SubchordWord SubchordWord",
        "SUBCHORD_STATUS_NOT_REALIZABLE = 6",
    ] {
        assert!(header.contains(f), "header lacks {f}");
    }
}

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if std::process::Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler `{cc}`");
        return;
    }
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libsubchord_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("smoke");
    let manifest = env!("CARGO_MANIFEST_DIR");
    let status = std::process::Command::new(&cc)
        .arg(format!("{manifest}/tests/c/smoke.c"))
        .arg(format!("-I{manifest}/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = std::process::Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).contains("c smoke test: ok"));
}
