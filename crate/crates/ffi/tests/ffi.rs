//! Exercises the C entry points through the Rust side of the ABI.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use smashalg_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { smash_string_free(s) };
    owned
}

#[test]
fn eval_render_free_cycle() {
    let text = CString::new("X[1] # X[1]").unwrap();
    let mut value: *mut SmashValue = ptr::null_mut();
    let status = unsafe { smash_eval(text.as_ptr(), &mut value) };
    assert_eq!(status, SmashStatus::Ok);
    assert!(!value.is_null());
    assert_eq!(
        take_string(unsafe { smash_value_render_text(value) }),
        "X[1] + X[1,1]"
    );
    let json: serde_json::Value =
        serde_json::from_str(&take_string(unsafe { smash_value_render_json(value) })).unwrap();
    assert_eq!(json["kind"], "sum");
    assert_eq!(json["terms"][0]["key"], "X[1]");
    unsafe { smash_value_free(value) };
}

#[test]
fn scalars_come_back_as_json() {
    let text = CString::new("pair(M[1].M[1], X[1,1])").unwrap();
    let mut value = ptr::null_mut();
    assert_eq!(
        unsafe { smash_eval(text.as_ptr(), &mut value) },
        SmashStatus::Ok
    );
    let json: serde_json::Value =
        serde_json::from_str(&take_string(unsafe { smash_value_render_json(value) })).unwrap();
    assert_eq!(json["kind"], "scalar");
    assert_eq!(json["value"], "2");
    unsafe { smash_value_free(value) };
}

#[test]
fn parse_errors_set_message_and_offset() {
    let text = CString::new("h[2,1) ").unwrap();
    let mut value = ptr::null_mut();
    assert_eq!(
        unsafe { smash_eval(text.as_ptr(), &mut value) },
        SmashStatus::ParseError
    );
    assert!(value.is_null());
    assert_eq!(smash_last_error_offset(), 6);
    assert!(take_string(smash_last_error_message()).contains("offset 6"));
}

#[test]
fn eval_errors_are_distinguished_from_parse_errors() {
    let text = CString::new("M[1] # M[1]").unwrap();
    let mut value = ptr::null_mut();
    assert_eq!(
        unsafe { smash_eval(text.as_ptr(), &mut value) },
        SmashStatus::EvalError
    );
    assert_eq!(smash_last_error_offset(), 6);
}

#[test]
fn success_clears_the_error_slot() {
    let bad = CString::new("X[").unwrap();
    let good = CString::new("X[1]").unwrap();
    let mut value = ptr::null_mut();
    unsafe { smash_eval(bad.as_ptr(), &mut value) };
    assert!(!take_string(smash_last_error_message()).is_empty());
    unsafe { smash_eval(good.as_ptr(), &mut value) };
    assert!(smash_last_error_message().is_null());
    assert_eq!(smash_last_error_offset(), 0);
    unsafe { smash_value_free(value) };
}

#[test]
fn null_pointers_are_rejected() {
    let mut value = ptr::null_mut();
    assert_eq!(
        unsafe { smash_eval(ptr::null(), &mut value) },
        SmashStatus::NullPointer
    );
    let text = CString::new("X[1]").unwrap();
    assert_eq!(
        unsafe { smash_eval(text.as_ptr(), ptr::null_mut()) },
        SmashStatus::NullPointer
    );
    assert!(unsafe { smash_value_render_text(ptr::null()) }.is_null());
    unsafe {
        smash_value_free(ptr::null_mut());
        smash_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_reports_pass_and_rejects_unknown_suites() {
    let suite = CString::new("interpolation").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { smash_verify(suite.as_ptr(), 3, &mut out) },
        SmashStatus::Ok
    );
    let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(json["suite"], "interpolation");
    assert_eq!(json["passed"], true);

    let bad = CString::new("kronecker").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { smash_verify(bad.as_ptr(), 3, &mut out) },
        SmashStatus::InvalidArgument
    );
    assert!(out.is_null());
    assert!(take_string(smash_last_error_message()).contains("kronecker"));
}

#[test]
fn tables_round_trip_as_json() {
    let op = CString::new("smash").unwrap();
    let algebra = CString::new("nsym").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { smash_tables(op.as_ptr(), algebra.as_ptr(), 1, 1, &mut out) },
        SmashStatus::Ok
    );
    let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(json["entries"][0]["value"], "X[1] + X[1,1]");

    let internal = CString::new("internal").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { smash_tables(internal.as_ptr(), algebra.as_ptr(), 2, 3, &mut out) },
        SmashStatus::InvalidArgument
    );
    assert!(out.is_null());
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(smash_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
