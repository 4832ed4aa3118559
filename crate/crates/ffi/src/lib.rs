//! C ABI over the `schubcalc` library.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `_free` function. Strings returned through `out`
//! parameters are NUL-terminated UTF-8 and released with
//! `schubcalc_string_free`. Every function returns a `SchubcalcStatus`; on
//! failure `schubcalc_last_error` describes the cause for the calling thread.

use schubcalc::coproduct;
use schubcalc::schubert;
use schubcalc::{Error, Partition, Permutation, Poly};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchubcalcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Internal = 4,
    Panic = 5,
}

/// A polynomial handle.
pub struct SchubcalcPoly {
    inner: Poly,
}

/// A permutation handle.
pub struct SchubcalcPermutation {
    inner: Permutation,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(SchubcalcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = if e.is_internal() { SchubcalcStatus::Internal } else { SchubcalcStatus::InvalidInput };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SchubcalcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SchubcalcStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("panic inside schubcalc");
            SchubcalcStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(SchubcalcStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(SchubcalcStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(SchubcalcStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SchubcalcStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SchubcalcStatus::NullPointer, "null output pointer".into()));
    }
    *out = CString::new(s).expect("JSON and text output contain no NUL").into_raw();
    Ok(())
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn schubcalc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn schubcalc_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}

/// # Safety
/// `s` must be null or come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a permutation window such as `"[1,0]@0"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_permutation_parse(
    text: *const c_char,
    out: *mut *mut SchubcalcPermutation,
) -> SchubcalcStatus {
    guard(|| {
        let w = Permutation::parse(read_str(text)?)?;
        write_out(out, SchubcalcPermutation { inner: w })
    })
}

/// # Safety
/// `w` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_permutation_free(w: *mut SchubcalcPermutation) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_permutation_length(
    w: *const SchubcalcPermutation,
    out: *mut usize,
) -> SchubcalcStatus {
    guard(|| {
        let w = deref(w)?;
        if out.is_null() {
            return Err(Fail(SchubcalcStatus::NullPointer, "null output pointer".into()));
        }
        *out = w.inner.length();
        Ok(())
    })
}

/// Parse a polynomial from its text form (`"c1*y0 - 2*x1^2"`) or JSON.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_poly_parse(text: *const c_char, out: *mut *mut SchubcalcPoly) -> SchubcalcStatus {
    guard(|| {
        let s = read_str(text)?.trim();
        let p = if s.starts_with('{') { Poly::from_json(s)? } else { Poly::parse(s)? };
        write_out(out, SchubcalcPoly { inner: p })
    })
}

/// # Safety
/// `p` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_poly_free(p: *mut SchubcalcPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_poly_to_json(p: *const SchubcalcPoly, out: *mut *mut c_char) -> SchubcalcStatus {
    guard(|| write_string(out, deref(p)?.inner.to_json()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_poly_to_text(p: *const SchubcalcPoly, out: *mut *mut c_char) -> SchubcalcStatus {
    guard(|| write_string(out, deref(p)?.inner.to_text()))
}

/// Writes 1 to `out` when the polynomials are equal, 0 otherwise.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_poly_equal(
    a: *const SchubcalcPoly,
    b: *const SchubcalcPoly,
    out: *mut i32,
) -> SchubcalcStatus {
    guard(|| {
        let eq = deref(a)?.inner == deref(b)?.inner;
        if out.is_null() {
            return Err(Fail(SchubcalcStatus::NullPointer, "null output pointer".into()));
        }
        *out = eq as i32;
        Ok(())
    })
}

/// The enriched Schubert polynomial of `w`.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_back_stabilize(
    w: *const SchubcalcPermutation,
    out: *mut *mut SchubcalcPoly,
) -> SchubcalcStatus {
    guard(|| {
        let e = schubert::back_stabilize(&deref(w)?.inner)?;
        write_out(out, SchubcalcPoly { inner: e.poly })
    })
}

/// Dual Littlewood–Richardson table of a partition given as `"3,1"`, as JSON.
///
/// # Safety
/// `lambda` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_dual_lr_json(lambda: *const c_char, out: *mut *mut c_char) -> SchubcalcStatus {
    guard(|| {
        let lam = Partition::parse(read_str(lambda)?)?;
        write_string(out, coproduct::dual_lr(&lam).to_json())
    })
}

/// Co-module coefficient table of a permutation, as JSON.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubcalc_comodule_json(
    w: *const SchubcalcPermutation,
    out: *mut *mut c_char,
) -> SchubcalcStatus {
    guard(|| {
        let t = coproduct::expand_comodule(&deref(w)?.inner)?;
        write_string(out, t.to_json())
    })
}
