//! C ABI over `plumbsig`.
//!
//! Schemes are passed around as opaque `PlumbsigScheme` handles. Every
//! fallible function returns a `PlumbsigStatus`; the message of the most
//! recent failure on the calling thread is available from
//! `plumbsig_last_error`. Strings handed out by the library must be released
//! with `plumbsig_string_free`, handles with `plumbsig_scheme_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use plumbsig::curve::Curve;
use plumbsig::prohibit::{family, mt_check, FamilyName};
use plumbsig::scheme::parse_scheme;
use plumbsig::{ComplexScheme, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlumbsigStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    BadParameters = 4,
    NotEvenType = 5,
    /// Singular matrix, non-integral data and other numeric failures.
    Numeric = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque handle to a parsed complex scheme.
pub struct PlumbsigScheme {
    scheme: ComplexScheme,
    curve: OnceLock<Result<Curve, Error>>,
}

impl PlumbsigScheme {
    fn new(scheme: ComplexScheme) -> Box<Self> {
        Box::new(Self { scheme, curve: OnceLock::new() })
    }

    fn curve(&self) -> Result<&Curve, Error> {
        self.curve.get_or_init(|| Curve::new(&self.scheme)).as_ref().map_err(Clone::clone)
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PlumbsigStatus {
    match e {
        Error::Syntax { .. } | Error::EmptyEvenScheme => PlumbsigStatus::Syntax,
        Error::BadParameters(_) | Error::NonOddPrime(_) | Error::DimensionMismatch(_) | Error::InvalidTree(_) => {
            PlumbsigStatus::BadParameters
        }
        Error::NotEvenType | Error::EmptyScheme => PlumbsigStatus::NotEvenType,
        Error::SingularMatrix
        | Error::NotSymmetric
        | Error::NonIntegralCharData(_)
        | Error::NotCharacteristic { .. }
        | Error::ZeroVector(_)
        | Error::EmptyLink
        | Error::UndefinedResidue { .. }
        | Error::NonIntegralInvariant(_) => PlumbsigStatus::Numeric,
        Error::Inconsistent(_) => PlumbsigStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), PlumbsigStatus>) -> PlumbsigStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlumbsigStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside plumbsig".into());
            PlumbsigStatus::Panic
        }
    }
}

fn fail(e: Error) -> PlumbsigStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn null() -> PlumbsigStatus {
    set_error("null pointer argument".into());
    PlumbsigStatus::NullPointer
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, PlumbsigStatus> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8".into());
        PlumbsigStatus::InvalidUtf8
    })
}

unsafe fn handle<'a>(h: *const PlumbsigScheme) -> Result<&'a PlumbsigScheme, PlumbsigStatus> {
    h.as_ref().ok_or_else(null)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), PlumbsigStatus> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| {
        set_error("output contains a nul byte".into());
        PlumbsigStatus::Internal
    })?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failure on this thread, or NULL. Valid until the next
/// call into the library from the same thread; do not free.
#[no_mangle]
pub extern "C" fn plumbsig_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a scheme such as `"J 1-<2-> 2+"` into a new handle.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_scheme_parse(text: *const c_char, out: *mut *mut PlumbsigScheme) -> PlumbsigStatus {
    guard(|| {
        let text = read_str(text)?;
        if out.is_null() {
            return Err(null());
        }
        let s = parse_scheme(text).map_err(fail)?;
        *out = Box::into_raw(PlumbsigScheme::new(s));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_scheme_free(h: *mut PlumbsigScheme) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Canonical text of a scheme.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_scheme_render(h: *const PlumbsigScheme, out: *mut *mut c_char) -> PlumbsigStatus {
    guard(|| {
        let h = handle(h)?;
        put_string(out, h.scheme.to_string())
    })
}

/// Number of ovals of a scheme.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_scheme_oval_count(h: *const PlumbsigScheme, out: *mut u64) -> PlumbsigStatus {
    guard(|| {
        let h = handle(h)?;
        if out.is_null() {
            return Err(null());
        }
        *out = h.scheme.oval_count() as u64;
        Ok(())
    })
}

/// `sig_{b/p}` and `eta_p` for an odd prime `p` and `1 <= b <= (p-1)/2`.
///
/// # Safety
/// `h` must be a live handle; `sig` and `eta` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_sig_eta(
    h: *const PlumbsigScheme,
    p: u64,
    b: u64,
    sig: *mut i64,
    eta: *mut i64,
) -> PlumbsigStatus {
    guard(|| {
        let h = handle(h)?;
        if sig.is_null() || eta.is_null() {
            return Err(null());
        }
        let v = h.curve().and_then(|c| c.sig_eta(p, b)).map_err(fail)?;
        *sig = v.sig;
        *eta = v.eta;
        Ok(())
    })
}

/// The generic nullity.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_nul(h: *const PlumbsigScheme, out: *mut i64) -> PlumbsigStatus {
    guard(|| {
        let h = handle(h)?;
        if out.is_null() {
            return Err(null());
        }
        *out = h.curve().map_err(fail)?.nul();
        Ok(())
    })
}

/// Profile listing, one interval or point per line.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_profile_text(h: *const PlumbsigScheme, out: *mut *mut c_char) -> PlumbsigStatus {
    guard(|| {
        let h = handle(h)?;
        let prof = h.curve().and_then(|c| c.profile()).map_err(fail)?;
        put_string(out, prof.to_text())
    })
}

/// Profile as JSON.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_profile_json(h: *const PlumbsigScheme, out: *mut *mut c_char) -> PlumbsigStatus {
    guard(|| {
        let h = handle(h)?;
        let prof = h.curve().and_then(|c| c.profile()).map_err(fail)?;
        put_string(out, serde_json::to_string(&prof).expect("serializable"))
    })
}

/// Degree-`m` prohibition report as JSON.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_check_json(
    h: *const PlumbsigScheme,
    m: u64,
    out: *mut *mut c_char,
) -> PlumbsigStatus {
    guard(|| {
        let h = handle(h)?;
        let report = mt_check(&h.scheme, m).map_err(fail)?;
        put_string(out, serde_json::to_string(&report).expect("serializable"))
    })
}

/// Member `k` of the family `"odd_nest"` or `"double_nest"`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_family(name: *const c_char, k: u64, out: *mut *mut PlumbsigScheme) -> PlumbsigStatus {
    guard(|| {
        let name: FamilyName = read_str(name)?.parse().map_err(fail)?;
        if out.is_null() {
            return Err(null());
        }
        let s = family(name, k).map_err(fail)?;
        *out = Box::into_raw(PlumbsigScheme::new(s));
        Ok(())
    })
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn plumbsig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
