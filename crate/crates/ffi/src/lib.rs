//! C ABI over the `subchord` library.
//!
//! Words live behind an opaque [`SubchordWord`] handle. Every fallible call
//! returns a [`SubchordStatus`]; on failure the message is kept per thread
//! and can be read with [`subchord_last_error`]. Strings handed out by the
//! library must be released with [`subchord_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use subchord::census::{enumerate, CensusFilter};
use subchord::cli::analysis;
use subchord::embed::is_realizable;
use subchord::invariant::{averaged, lambda_checked, trivializable, MoveSet};
use subchord::pattern::count_named;
use subchord::verify::{verify, Suite};
use subchord::{Error, GaussWord};

/// Opaque handle to a parsed Gauss word.
pub struct SubchordWord {
    word: GaussWord,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubchordStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    LabelNotTwice = 3,
    EmptyToken = 4,
    BoundExceeded = 5,
    NotRealizable = 6,
    NonIntegral = 7,
    EmbeddingMismatch = 8,
    SiteInvalid = 9,
    PostconditionViolation = 10,
    Io = 11,
    Panic = 12,
    VerificationFailed = 13,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubchordMoveSet {
    Ri = 0,
    RiWeakRiii = 1,
    RiStrongRiii = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubchordSuite {
    Theorem1 = 0,
    Theorem2 = 1,
    Theorem3 = 2,
    Flype = 3,
    Averaged = 4,
    Additivity = 5,
    Oracle = 6,
}

/// The five sub-chord counts.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubchordCounts {
    pub cross: u64,
    pub triple: u64,
    pub h: u64,
    pub iii: u64,
    pub hh: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SubchordStatus {
    match e {
        Error::LabelNotTwice { .. } => SubchordStatus::LabelNotTwice,
        Error::EmptyToken(_) => SubchordStatus::EmptyToken,
        Error::BoundExceeded { .. } => SubchordStatus::BoundExceeded,
        Error::NotRealizable(_) => SubchordStatus::NotRealizable,
        Error::NonIntegral(_) => SubchordStatus::NonIntegral,
        Error::EmbeddingMismatch { .. } => SubchordStatus::EmbeddingMismatch,
        Error::SiteInvalid(_) => SubchordStatus::SiteInvalid,
        Error::PostconditionViolation(_) => SubchordStatus::PostconditionViolation,
        Error::Io(_) => SubchordStatus::Io,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), SubchordStatus>) -> SubchordStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SubchordStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SubchordStatus::Panic
        }
    }
}

fn fail(e: Error) -> SubchordStatus {
    set_error(&format!("{}: {}", e.code(), e));
    status_of(&e)
}

unsafe fn word_ref<'a>(w: *const SubchordWord) -> Result<&'a GaussWord, SubchordStatus> {
    if w.is_null() {
        set_error("null word handle");
        return Err(SubchordStatus::NullPointer);
    }
    Ok(&(*w).word)
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), SubchordStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(SubchordStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), SubchordStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("string contains a nul byte");
        SubchordStatus::Io
    })?;
    write_out(out, c.into_raw())
}

fn json_error(e: serde_json::Error) -> SubchordStatus {
    fail(Error::Io(e.to_string()))
}

/// Parses `text` into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn subchord_word_parse(text: *const c_char, out: *mut *mut SubchordWord) -> SubchordStatus {
    guard(|| {
        if text.is_null() {
            set_error("null text");
            return Err(SubchordStatus::NullPointer);
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("text is not UTF-8");
            SubchordStatus::InvalidUtf8
        })?;
        let word: GaussWord = s.parse().map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(SubchordWord { word })))
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `w` must come from [`subchord_word_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn subchord_word_free(w: *mut SubchordWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn subchord_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn subchord_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Stable name of a status code, such as `"NOT_REALIZABLE"`.
#[no_mangle]
pub extern "C" fn subchord_status_name(s: SubchordStatus) -> *const c_char {
    let name: &'static CStr = match s {
        SubchordStatus::Ok => c"OK",
        SubchordStatus::NullPointer => c"NULL_POINTER",
        SubchordStatus::InvalidUtf8 => c"INVALID_UTF8",
        SubchordStatus::LabelNotTwice => c"LABEL_NOT_TWICE",
        SubchordStatus::EmptyToken => c"EMPTY_TOKEN",
        SubchordStatus::BoundExceeded => c"BOUND_EXCEEDED",
        SubchordStatus::NotRealizable => c"NOT_REALIZABLE",
        SubchordStatus::NonIntegral => c"NON_INTEGRAL",
        SubchordStatus::EmbeddingMismatch => c"EMBEDDING_MISMATCH",
        SubchordStatus::SiteInvalid => c"SITE_INVALID",
        SubchordStatus::PostconditionViolation => c"POSTCONDITION_VIOLATION",
        SubchordStatus::Io => c"IO",
        SubchordStatus::Panic => c"PANIC",
        SubchordStatus::VerificationFailed => c"VERIFICATION_FAILED",
    };
    name.as_ptr()
}

/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_word_crossing_count(w: *const SubchordWord, out: *mut usize) -> SubchordStatus {
    guard(|| write_out(out, word_ref(w)?.crossing_count()))
}

/// Canonical form as a space-separated string.
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_word_canonical(w: *const SubchordWord, out: *mut *mut c_char) -> SubchordStatus {
    guard(|| write_string(out, word_ref(w)?.canonical_form().to_string()))
}

/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_is_realizable(w: *const SubchordWord, out: *mut bool) -> SubchordStatus {
    guard(|| write_out(out, is_realizable(word_ref(w)?).map_err(fail)?))
}

/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_counts(w: *const SubchordWord, out: *mut SubchordCounts) -> SubchordStatus {
    guard(|| {
        let c = count_named(word_ref(w)?);
        write_out(out, SubchordCounts { cross: c.cross, triple: c.triple, h: c.h, iii: c.iii, hh: c.hh })
    })
}

/// Lambda of a realizable word.
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_lambda(w: *const SubchordWord, out: *mut i64) -> SubchordStatus {
    guard(|| write_out(out, lambda_checked(word_ref(w)?).map_err(fail)?))
}

/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_averaged(w: *const SubchordWord, out: *mut i64) -> SubchordStatus {
    guard(|| write_out(out, averaged(word_ref(w)?).map_err(fail)?))
}

/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_trivializable(
    w: *const SubchordWord,
    set: SubchordMoveSet,
    out: *mut bool,
) -> SubchordStatus {
    guard(|| {
        let set = match set {
            SubchordMoveSet::Ri => MoveSet::Ri,
            SubchordMoveSet::RiWeakRiii => MoveSet::RiWeakRiii,
            SubchordMoveSet::RiStrongRiii => MoveSet::RiStrongRiii,
        };
        write_out(out, trivializable(word_ref(w)?, set).map_err(fail)?)
    })
}

/// The full analysis as one JSON object.
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_analyze_json(w: *const SubchordWord, out: *mut *mut c_char) -> SubchordStatus {
    guard(|| {
        let a = analysis(word_ref(w)?).map_err(fail)?;
        write_string(out, serde_json::to_string(&a).map_err(json_error)?)
    })
}

/// Census records up to `n_max` crossings as a JSON array.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_census_json(n_max: usize, prime_reduced: bool, out: *mut *mut c_char) -> SubchordStatus {
    guard(|| {
        let filter = if prime_reduced { CensusFilter::PrimeReduced } else { CensusFilter::All };
        let records = enumerate(n_max, filter).map_err(fail)?;
        write_string(out, serde_json::to_string(&records).map_err(json_error)?)
    })
}

/// Runs a verification suite. The report is written to `*report_json` when
/// that pointer is non-null; a failing suite returns `VerificationFailed`.
///
/// # Safety
/// `report_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn subchord_verify(
    suite: SubchordSuite,
    n_max: usize,
    report_json: *mut *mut c_char,
) -> SubchordStatus {
    guard(|| {
        let suite = match suite {
            SubchordSuite::Theorem1 => Suite::Theorem1,
            SubchordSuite::Theorem2 => Suite::Theorem2,
            SubchordSuite::Theorem3 => Suite::Theorem3,
            SubchordSuite::Flype => Suite::Flype,
            SubchordSuite::Averaged => Suite::Averaged,
            SubchordSuite::Additivity => Suite::Additivity,
            SubchordSuite::Oracle => Suite::Oracle,
        };
        let r = verify(suite, n_max).map_err(fail)?;
        if !report_json.is_null() {
            write_string(report_json, serde_json::to_string(&r).map_err(json_error)?)?;
        }
        if r.passed() {
            Ok(())
        } else {
            set_error(&format!("suite {} had {} failures", suite, r.failures.len()));
            Err(SubchordStatus::VerificationFailed)
        }
    })
}
