//! C ABI over `qrwe-core`.
//!
//! Conventions:
//! * every fallible function returns a [`QrweStatus`] and writes its result
//!   through an out-pointer only on `QRWE_OK`;
//! * integers that may exceed 64 bits, and rationals, cross the boundary as
//!   NUL-terminated decimal strings (`"n"` or `"n/d"`) owned by the caller
//!   and released with [`qrwe_string_free`];
//! * enumerators are opaque [`QrweEnumerator`] handles released with
//!   [`qrwe_enumerator_free`];
//! * the message for the most recent failure on the calling thread is
//!   available from [`qrwe_last_error_message`].
//!
//! No function unwinds across the boundary; a panic is reported as
//! `QRWE_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use qrwe_core::curve_census::Flavor;
use qrwe_core::enumerators::QREnum;
use qrwe_core::hecke_traces::{moment_formula, TraceTable};
use qrwe_core::qr_pipeline::{dual_classical, dual_qr, qr_c14, qr_classical_c14};
use qrwe_core::quadratic_forms::{class_number, hurwitz_hw, Discriminant};
use qrwe_core::rs_codes::{brute_qr, budget_from_env, build_code};
use qrwe_core::util::odd_prime_power;
use qrwe_core::{Error, FieldCtx};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QrweStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument is outside the supported domain (not an odd prime power,
    /// invalid discriminant, bad level, ...).
    Domain = 2,
    /// The input is valid but the requested operation does not apply to it.
    Unsupported = 3,
    /// An internal cross-check failed.
    Consistency = 4,
    /// Exhaustive enumeration would exceed the codeword budget.
    Budget = 5,
    /// A panic was caught; this is a bug.
    Internal = 6,
}

/// Which curves a moment ranges over.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QrweFlavor {
    All = 0,
    TwoTorsion = 1,
    FullTwoTorsion = 2,
}

impl From<QrweFlavor> for Flavor {
    fn from(f: QrweFlavor) -> Self {
        match f {
            QrweFlavor::All => Flavor::All,
            QrweFlavor::TwoTorsion => Flavor::TwoTorsion,
            QrweFlavor::FullTwoTorsion => Flavor::FullTwoTorsion,
        }
    }
}

/// Opaque QR weight enumerator.
pub struct QrweEnumerator(QREnum);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QrweStatus {
    match e {
        Error::Domain(_) => QrweStatus::Domain,
        Error::Unsupported(_) => QrweStatus::Unsupported,
        Error::Consistency(_) => QrweStatus::Consistency,
        Error::Budget { .. } => QrweStatus::Budget,
    }
}

/// Runs `f`, stores its value through `out` on success and records the
/// error message otherwise.
fn guard<T>(out: *mut T, f: impl FnOnce() -> Result<T, Error>) -> QrweStatus {
    if out.is_null() {
        set_last_error("output pointer is null".into());
        return QrweStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            // SAFETY: `out` is non-null and the caller promises it is valid
            // for writes of `T`.
            unsafe { out.write(v) };
            QrweStatus::Ok
        }
        Ok(Err(e)) => {
            let s = status_of(&e);
            set_last_error(e.to_string());
            s
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal error: {msg}"));
            QrweStatus::Internal
        }
    }
}

fn c_string(s: impl ToString) -> *mut c_char {
    CString::new(s.to_string()).expect("decimal and JSON output has no NULs").into_raw()
}

fn boxed(e: QREnum) -> *mut QrweEnumerator {
    Box::into_raw(Box::new(QrweEnumerator(e)))
}

/// # Safety
/// `h` must be null or a live handle from this library.
unsafe fn handle<'a>(h: *const QrweEnumerator) -> Result<&'a QREnum, Error> {
    // SAFETY: forwarded from the caller.
    unsafe { h.as_ref() }
        .map(|h| &h.0)
        .ok_or_else(|| Error::Domain("enumerator handle is null".into()))
}

/// Message for the last failed call on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qrwe_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qrwe_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by `CString::into_raw` in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Closed-form enumerator of `C_{1,4}` (length `q + 1`), or of the
/// classical code of length `q` when `classical` is true.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_c14(q: u64, classical: bool, out: *mut *mut QrweEnumerator) -> QrweStatus {
    guard(out, || {
        let e = if classical { qr_classical_c14(q)? } else { qr_c14(q)? };
        Ok(boxed(e))
    })
}

/// Exhaustive enumerator of `C_{1,h}`. `budget == 0` selects the default
/// (or `QRWE_BUDGET`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_brute(
    q: u64,
    h: usize,
    classical: bool,
    budget: u64,
    out: *mut *mut QrweEnumerator,
) -> QrweStatus {
    guard(out, || {
        let (p, v) = odd_prime_power(q)?;
        let code = build_code(Arc::new(FieldCtx::new(p, v)?), h, !classical)?;
        let budget = if budget == 0 { budget_from_env() } else { budget as u128 };
        Ok(boxed(brute_qr(&code, budget)?))
    })
}

/// Coefficients of the dual of `C_{1,4}` (or its classical version) with
/// `j + k <= max_codim`; all other coefficients read as zero.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_dual(
    q: u64,
    max_codim: usize,
    classical: bool,
    out: *mut *mut QrweEnumerator,
) -> QrweStatus {
    guard(out, || {
        let report = if classical { dual_classical(q, max_codim)? } else { dual_qr(q, max_codim)? };
        let mut e = QREnum::new(report.n, q);
        for ((j, k), c) in report.coefficients {
            e.add_term(j, k, c)?;
        }
        Ok(boxed(e))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_free(h: *mut QrweEnumerator) {
    if !h.is_null() {
        // SAFETY: produced by `Box::into_raw` in this crate.
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Code length `n`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_length(h: *const QrweEnumerator, out: *mut usize) -> QrweStatus {
    // SAFETY: forwarded from the caller.
    guard(out, || Ok(unsafe { handle(h) }?.n()))
}

/// Coefficient of `X^{n-j-k} Y^j Z^k` as a decimal string.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_coefficient(
    h: *const QrweEnumerator,
    j: usize,
    k: usize,
    out: *mut *mut c_char,
) -> QrweStatus {
    guard(out, || {
        // SAFETY: forwarded from the caller.
        let e = unsafe { handle(h) }?;
        if j + k > e.n() {
            return Err(Error::Domain(format!("j + k = {} exceeds length {}", j + k, e.n())));
        }
        Ok(c_string(e.get(j, k)))
    })
}

/// JSON rendering `{"n", "q", "terms": [{"j", "k", "A"}, ...]}`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_to_json(h: *const QrweEnumerator, out: *mut *mut c_char) -> QrweStatus {
    // SAFETY: forwarded from the caller.
    guard(out, || Ok(c_string(unsafe { handle(h) }?.to_json())))
}

/// CSV rendering with header `i,j,k,A`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_enumerator_to_csv(h: *const QrweEnumerator, out: *mut *mut c_char) -> QrweStatus {
    // SAFETY: forwarded from the caller.
    guard(out, || Ok(c_string(unsafe { handle(h) }?.to_csv())))
}

/// Trace of `T_q` on `S_k(Γ0(level))` for level 1, 2 or 4.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_hecke_trace(level: u32, weight: u32, q: u64, out: *mut *mut c_char) -> QrweStatus {
    guard(out, || Ok(c_string(TraceTable::global().trace(level, weight, q)?)))
}

/// Closed-form weighted `2r`-th moment of the Frobenius trace over `F_q`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_moment(q: u64, r: u32, flavor: QrweFlavor, out: *mut *mut c_char) -> QrweStatus {
    guard(out, || Ok(c_string(moment_formula(q, r, flavor.into())?)))
}

/// Class number `h(d)` of a negative discriminant.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_class_number(disc: i64, out: *mut u64) -> QrweStatus {
    guard(out, || Ok(class_number(Discriminant::new(disc)?)))
}

/// Hurwitz-Kronecker class number `H_w(delta)` as `"n"` or `"n/d"`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qrwe_hurwitz_class_number(delta: i64, out: *mut *mut c_char) -> QrweStatus {
    guard(out, || Ok(c_string(hurwitz_hw(delta)?)))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qrwe_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version has no NUL"),
    };
    V.as_ptr()
}
