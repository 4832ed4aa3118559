use schubcalc_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { schubcalc_string_free(s) };
    out
}

#[test]
fn back_stabilize_round_trip() {
    let text = CString::new("[1,0]@0").unwrap();
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_permutation_parse(text.as_ptr(), &mut w) }, SchubcalcStatus::Ok);
    let mut len = 0usize;
    assert_eq!(unsafe { schubcalc_permutation_length(w, &mut len) }, SchubcalcStatus::Ok);
    assert_eq!(len, 1);

    let mut p = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_back_stabilize(w, &mut p) }, SchubcalcStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_poly_to_text(p, &mut s) }, SchubcalcStatus::Ok);
    assert_eq!(take(s), "c1");

    let c1 = CString::new("c1").unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_poly_parse(c1.as_ptr(), &mut q) }, SchubcalcStatus::Ok);
    let mut eq = 0;
    assert_eq!(unsafe { schubcalc_poly_equal(p, q, &mut eq) }, SchubcalcStatus::Ok);
    assert_eq!(eq, 1);

    let mut j = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_poly_to_json(p, &mut j) }, SchubcalcStatus::Ok);
    let json = take(j);
    let json_c = CString::new(json).unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_poly_parse(json_c.as_ptr(), &mut r) }, SchubcalcStatus::Ok);
    assert_eq!(unsafe { schubcalc_poly_equal(p, r, &mut eq) }, SchubcalcStatus::Ok);
    assert_eq!(eq, 1);

    unsafe {
        schubcalc_poly_free(p);
        schubcalc_poly_free(q);
        schubcalc_poly_free(r);
        schubcalc_permutation_free(w);
    }
}

#[test]
fn tables_as_json() {
    let lam = CString::new("3,1").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_dual_lr_json(lam.as_ptr(), &mut s) }, SchubcalcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 14);

    let text = CString::new("[1,0]@0").unwrap();
    let mut w = ptr::null_mut();
    unsafe { schubcalc_permutation_parse(text.as_ptr(), &mut w) };
    assert_eq!(unsafe { schubcalc_comodule_json(w, &mut s) }, SchubcalcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
    unsafe { schubcalc_permutation_free(w) };
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("[1,1]").unwrap();
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_permutation_parse(bad.as_ptr(), &mut w) }, SchubcalcStatus::InvalidInput);
    assert!(w.is_null());
    let msg = unsafe { CStr::from_ptr(schubcalc_last_error()) }.to_str().unwrap();
    assert!(msg.contains("repeated"), "{msg}");

    assert_eq!(unsafe { schubcalc_permutation_parse(ptr::null(), &mut w) }, SchubcalcStatus::NullPointer);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { schubcalc_back_stabilize(ptr::null(), &mut p) }, SchubcalcStatus::NullPointer);
    unsafe { schubcalc_string_free(ptr::null_mut()) };
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/schubcalc.h")).unwrap();
    for name in [
        "schubcalc_back_stabilize",
        "schubcalc_dual_lr_json",
        "schubcalc_string_free",
        "typedef struct SchubcalcPoly SchubcalcPoly",
        "SCHUBCALC_STATUS_INVALID_INPUT",
    ] {
        assert!(h.contains(name), "{name}");
    }
    let v = unsafe { CStr::from_ptr(schubcalc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
