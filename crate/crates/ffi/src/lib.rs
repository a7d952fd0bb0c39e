//! C interface to the smashalg library.
//!
//! Conventions:
//! - every function returns a `SmashStatus`; `SMASH_STATUS_OK` is zero
//! - evaluated expressions live behind opaque `SmashValue` handles freed
//!   with `smash_value_free`
//! - returned strings are NUL-terminated, owned by the caller, and freed
//!   with `smash_string_free`
//! - on failure the thread-local error slot holds a message (and a 1-based
//!   byte offset for expression errors); read it with
//!   `smash_last_error_message` / `smash_last_error_offset`

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use smashalg::error::Error;
use smashalg::{expr, tables, verify};

/// Status code returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmashStatus {
    Ok = 0,
    /// The expression text did not parse.
    ParseError = 1,
    /// The expression parsed but could not be evaluated.
    EvalError = 2,
    /// A verification suite ran to completion and found a counterexample.
    VerifyFailed = 3,
    /// Unknown suite, table, or algebra name, or text that is not UTF-8.
    InvalidArgument = 4,
    /// A required pointer argument was NULL.
    NullPointer = 5,
}

/// Opaque handle to an evaluated expression.
pub struct SmashValue {
    inner: expr::Value,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<(String, usize)>> = const { RefCell::new(None) };
}

fn set_error(message: String, offset: usize) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some((message, offset)));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn report(e: &Error) -> SmashStatus {
    let offset = match e {
        Error::Parse { offset, .. } | Error::Eval { offset, .. } => *offset,
        _ => 0,
    };
    set_error(e.to_string(), offset);
    match e {
        Error::Parse { .. } => SmashStatus::ParseError,
        Error::UnknownSuite(_) | Error::Table(_) => SmashStatus::InvalidArgument,
        _ => SmashStatus::EvalError,
    }
}

/// # Safety
/// `ptr` must be NULL or point to a NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, SmashStatus> {
    if ptr.is_null() {
        set_error("NULL string argument".into(), 0);
        return Err(SmashStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8".into(), 0);
        SmashStatus::InvalidArgument
    })
}

fn into_c_string(s: String) -> *mut c_char {
    // rendered output never contains NUL bytes
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Evaluate an expression such as `"X[2,1] # X[3]"` and store a handle in
/// `*out`. On any failure `*out` is set to NULL.
///
/// # Safety
/// `expr_text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn smash_eval(
    expr_text: *const c_char,
    out: *mut *mut SmashValue,
) -> SmashStatus {
    if out.is_null() {
        set_error("NULL output pointer".into(), 0);
        return SmashStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let text = match read_str(expr_text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match expr::run(text) {
        Ok(value) => {
            clear_error();
            *out = Box::into_raw(Box::new(SmashValue { inner: value }));
            SmashStatus::Ok
        }
        Err(e) => report(&e),
    }
}

/// Render a value as plain text, e.g. `"X[1] + X[1,1]"`.
///
/// Returns NULL only if `value` is NULL. Free the result with
/// `smash_string_free`.
///
/// # Safety
/// `value` must be NULL or a handle obtained from `smash_eval`.
#[no_mangle]
pub unsafe extern "C" fn smash_value_render_text(value: *const SmashValue) -> *mut c_char {
    match value.as_ref() {
        Some(v) => into_c_string(expr::render_text(&v.inner)),
        None => ptr::null_mut(),
    }
}

/// Render a value as a JSON document describing its kind and terms.
///
/// Returns NULL only if `value` is NULL. Free the result with
/// `smash_string_free`.
///
/// # Safety
/// `value` must be NULL or a handle obtained from `smash_eval`.
#[no_mangle]
pub unsafe extern "C" fn smash_value_render_json(value: *const SmashValue) -> *mut c_char {
    match value.as_ref() {
        Some(v) => into_c_string(expr::render_json(&v.inner).to_string()),
        None => ptr::null_mut(),
    }
}

/// Release a value handle. NULL is accepted and ignored.
///
/// # Safety
/// `value` must be NULL or a handle obtained from `smash_eval`, freed at
/// most once.
#[no_mangle]
pub unsafe extern "C" fn smash_value_free(value: *mut SmashValue) {
    if !value.is_null() {
        drop(Box::from_raw(value));
    }
}

/// Release a string returned by this library. NULL is accepted and ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, freed at most
/// once.
#[no_mangle]
pub unsafe extern "C" fn smash_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or NULL if the last
/// call succeeded. Free the result with `smash_string_free`.
#[no_mangle]
pub extern "C" fn smash_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |(message, _)| {
                into_c_string(message.clone())
            })
    })
}

/// 1-based byte offset of the most recent parse or eval failure on this
/// thread, or 0 when there is none or the failure has no position.
#[no_mangle]
pub extern "C" fn smash_last_error_offset() -> usize {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(0, |&(_, offset)| offset))
}

/// Run one verification suite up to `max_degree` and store its JSON report
/// in `*out_json`.
///
/// The report is written whenever the suite runs, so a `VerifyFailed`
/// return still carries the per-case details; free it with
/// `smash_string_free`. An unknown suite name yields `InvalidArgument` and
/// leaves `*out_json` NULL.
///
/// # Safety
/// `suite` must be a NUL-terminated string and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn smash_verify(
    suite: *const c_char,
    max_degree: usize,
    out_json: *mut *mut c_char,
) -> SmashStatus {
    if out_json.is_null() {
        set_error("NULL output pointer".into(), 0);
        return SmashStatus::NullPointer;
    }
    *out_json = ptr::null_mut();
    let name = match read_str(suite) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match verify::run_suite(name, max_degree) {
        Ok(report) => {
            *out_json = into_c_string(report.to_json().to_string());
            if report.passed {
                clear_error();
                SmashStatus::Ok
            } else {
                let failed: Vec<&str> = report
                    .cases
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                set_error(
                    format!("suite `{name}` failed: {}", failed.join(", ")),
                    0,
                );
                SmashStatus::VerifyFailed
            }
        }
        Err(e) => report(&e),
    }
}

/// Compute a structure-constant table as JSON and store it in `*out_json`.
///
/// `op` is one of `smash`, `conv`, `internal`; `algebra` is `nsym` or
/// `sym`; `p` and `q` are the degrees of the two factors. Free the result
/// with `smash_string_free`.
///
/// # Safety
/// `op` and `algebra` must be NUL-terminated strings and `out_json` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn smash_tables(
    op: *const c_char,
    algebra: *const c_char,
    p: usize,
    q: usize,
    out_json: *mut *mut c_char,
) -> SmashStatus {
    if out_json.is_null() {
        set_error("NULL output pointer".into(), 0);
        return SmashStatus::NullPointer;
    }
    *out_json = ptr::null_mut();
    let op = match read_str(op).and_then(|s| tables::TableOp::from_name(s).map_err(|e| report(&e)))
    {
        Ok(v) => v,
        Err(status) => return status,
    };
    let algebra = match read_str(algebra)
        .and_then(|s| tables::TableAlgebra::from_name(s).map_err(|e| report(&e)))
    {
        Ok(v) => v,
        Err(status) => return status,
    };
    match tables::table(op, algebra, p, q) {
        Ok(doc) => {
            clear_error();
            *out_json = into_c_string(doc.to_string());
            SmashStatus::Ok
        }
        Err(e) => report(&e),
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn smash_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
