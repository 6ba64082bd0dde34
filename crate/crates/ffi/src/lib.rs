//! C ABI over `polylog-core`.
//!
//! Values cross the boundary as opaque handles (`PlgClosedForm`, `PlgReport`) that the
//! caller releases with the matching `_free` function. Every entry point returns a
//! `PlgStatus`; the message of the most recent failure on the calling thread is
//! available from `plg_last_error`. Panics never unwind into C: they become
//! `PLG_STATUS_INTERNAL`.
//!
//! Safety contract for every function: pointer arguments are either null (reported as
//! `PLG_STATUS_NULL_POINTER`) or valid for the access implied by their type; strings
//! are NUL-terminated; `buf` has room for `len` bytes; handles come from this library
//! and are freed at most once.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polylog_core::approx::s_minus_truncated;
use polylog_core::euler_sums::{closed, SumKind, SumTag};
use polylog_core::exact::{ClosedForm, NumericContext};
use polylog_core::ipq::{ipq_final, Family};
use polylog_core::lognm::{h_closed, i_closed};
use polylog_core::report::{VerificationReport, VerifyConfig};
use polylog_core::special::{nielsen_num, sigma_tilde};
use polylog_core::verify::{run, Suite};
use polylog_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Capacity = 4,
    Convergence = 5,
    Parse = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlgFamily {
    Plus = 0,
    Minus = 1,
    Mixed = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlgSum {
    SPlus = 0,
    SMinus = 1,
    Jordan1 = 2,
    Jordan2 = 3,
    Milgram = 4,
    C = 5,
}

/// Opaque exact closed form.
pub struct PlgClosedForm(ClosedForm);

/// Opaque verification report.
pub struct PlgReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> PlgStatus {
    match e {
        Error::Domain(_) => PlgStatus::Domain,
        Error::Capacity { .. } => PlgStatus::Capacity,
        Error::Convergence { .. } => PlgStatus::Convergence,
        Error::Parse(_) => PlgStatus::Parse,
        _ => PlgStatus::Internal,
    }
}

struct Fail(PlgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(PlgStatus::NullPointer, "null pointer argument".into())
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PlgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            PlgStatus::Internal
        }
    }
}

fn emit(out: *mut *mut PlgClosedForm, cf: ClosedForm) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    // SAFETY: checked non-null; the caller provides a writable slot.
    unsafe { *out = Box::into_raw(Box::new(PlgClosedForm(cf))) };
    Ok(())
}

fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    // SAFETY: the caller passes either null or a live handle from this library.
    unsafe { p.as_ref() }.ok_or_else(null)
}

fn c_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    // SAFETY: non-null, NUL-terminated per the API contract.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| Fail(PlgStatus::InvalidArgument, "string is not UTF-8".into()))
}

/// Copies `text` plus a NUL into `buf`. `needed` (if non-null) receives the required size.
fn write_str(text: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), Fail> {
    let size = text.len() + 1;
    if !needed.is_null() {
        // SAFETY: non-null caller slot.
        unsafe { *needed = size };
    }
    if buf.is_null() || len < size {
        return Err(Fail(PlgStatus::BufferTooSmall, format!("buffer needs {size} bytes")));
    }
    // SAFETY: buf holds at least `size` bytes.
    unsafe {
        ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
        *buf.add(text.len()) = 0;
    }
    Ok(())
}

/// Copies the last error message of this thread into `buf`.
#[no_mangle]
pub unsafe extern "C" fn plg_last_error(buf: *mut c_char, len: usize, needed: *mut usize) -> PlgStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    match write_str(&msg, buf, len, needed) {
        Ok(()) => PlgStatus::Ok,
        Err(Fail(s, _)) => s,
    }
}

/// Parses the text syntax, e.g. `"2 - pi^2/6"`.
#[no_mangle]
pub unsafe extern "C" fn plg_closed_parse(src: *const c_char, out: *mut *mut PlgClosedForm) -> PlgStatus {
    guard(|| emit(out, ClosedForm::parse(c_str(src)?)?))
}

/// Parses the JSON serialization.
#[no_mangle]
pub unsafe extern "C" fn plg_closed_from_json(src: *const c_char, out: *mut *mut PlgClosedForm) -> PlgStatus {
    guard(|| emit(out, ClosedForm::from_json(c_str(src)?)?))
}

#[no_mangle]
pub unsafe extern "C" fn plg_closed_free(cf: *mut PlgClosedForm) {
    if !cf.is_null() {
        // SAFETY: produced by Box::into_raw in `emit` and not freed before.
        drop(unsafe { Box::from_raw(cf) });
    }
}

#[no_mangle]
pub unsafe extern "C" fn plg_closed_add(
    a: *const PlgClosedForm,
    b: *const PlgClosedForm,
    out: *mut *mut PlgClosedForm,
) -> PlgStatus {
    guard(|| emit(out, &borrow(a)?.0 + &borrow(b)?.0))
}

#[no_mangle]
pub unsafe extern "C" fn plg_closed_mul(
    a: *const PlgClosedForm,
    b: *const PlgClosedForm,
    out: *mut *mut PlgClosedForm,
) -> PlgStatus {
    guard(|| emit(out, &borrow(a)?.0 * &borrow(b)?.0))
}

/// Returns 1 if the two forms are identical, else 0, through `out`.
#[no_mangle]
pub unsafe extern "C" fn plg_closed_equal(
    a: *const PlgClosedForm,
    b: *const PlgClosedForm,
    out: *mut i32,
) -> PlgStatus {
    guard(|| {
        let eq = borrow(a)?.0 == borrow(b)?.0;
        if out.is_null() {
            return Err(null());
        }
        // SAFETY: non-null caller slot.
        unsafe { *out = eq as i32 };
        Ok(())
    })
}

/// Decimal value using the shared constant table.
#[no_mangle]
pub unsafe extern "C" fn plg_closed_eval(cf: *const PlgClosedForm, out: *mut f64) -> PlgStatus {
    guard(|| {
        let v = NumericContext::shared().eval(&borrow(cf)?.0)?;
        if out.is_null() {
            return Err(null());
        }
        // SAFETY: non-null caller slot.
        unsafe { *out = v };
        Ok(())
    })
}

/// Canonical text form, re-readable by `plg_closed_parse`.
#[no_mangle]
pub unsafe extern "C" fn plg_closed_to_string(
    cf: *const PlgClosedForm,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> PlgStatus {
    guard(|| write_str(&borrow(cf)?.0.to_string(), buf, len, needed))
}

#[no_mangle]
pub unsafe extern "C" fn plg_closed_to_json(
    cf: *const PlgClosedForm,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> PlgStatus {
    guard(|| write_str(&borrow(cf)?.0.to_json(), buf, len, needed))
}

/// i(n,m) = ∫₀¹ lnⁿ(x) lnᵐ(1−x) dx.
#[no_mangle]
pub unsafe extern "C" fn plg_inm(n: u32, m: u32, out: *mut *mut PlgClosedForm) -> PlgStatus {
    guard(|| emit(out, i_closed(n, m)?))
}

/// h(n,m) = ∫₀¹ lnⁿ(x) lnᵐ(1+x) dx.
#[no_mangle]
pub unsafe extern "C" fn plg_hnm(n: u32, m: u32, out: *mut *mut PlgClosedForm) -> PlgStatus {
    guard(|| emit(out, h_closed(n, m)?))
}

#[no_mangle]
pub unsafe extern "C" fn plg_ipq(family: PlgFamily, p: u32, q: u32, out: *mut *mut PlgClosedForm) -> PlgStatus {
    let f = match family {
        PlgFamily::Plus => Family::Plus,
        PlgFamily::Minus => Family::Minus,
        PlgFamily::Mixed => Family::Mixed,
    };
    guard(|| emit(out, ipq_final(f, p, q)?))
}

#[no_mangle]
pub unsafe extern "C" fn plg_euler_sum(sum: PlgSum, r: u32, out: *mut *mut PlgClosedForm) -> PlgStatus {
    let tag = match sum {
        PlgSum::SPlus => SumTag::SPlus,
        PlgSum::SMinus => SumTag::SMinus,
        PlgSum::Jordan1 => SumTag::Jordan1,
        PlgSum::Jordan2 => SumTag::Jordan2,
        PlgSum::Milgram => SumTag::Milgram,
        PlgSum::C => SumTag::CSum,
    };
    guard(|| emit(out, closed(SumKind::new(tag, r)?)?))
}

/// S_{n,p}(−1): the registered closed form, or the bare atom.
#[no_mangle]
pub unsafe extern "C" fn plg_sigma_tilde(n: u32, p: u32, out: *mut *mut PlgClosedForm) -> PlgStatus {
    guard(|| {
        if n == 0 || p == 0 {
            return Err(Fail(PlgStatus::Domain, "sigma needs n, p >= 1".into()));
        }
        emit(out, sigma_tilde(n, p))
    })
}

#[no_mangle]
pub unsafe extern "C" fn plg_s_minus_truncated(p: u32, kt: u32, out: *mut *mut PlgClosedForm) -> PlgStatus {
    guard(|| emit(out, s_minus_truncated(p, kt)?))
}

/// Nielsen S_{n,p}(z) by quadrature.
#[no_mangle]
pub unsafe extern "C" fn plg_nielsen(n: u32, p: u32, z: f64, out: *mut f64) -> PlgStatus {
    guard(|| {
        let v = nielsen_num(n, p, z)?;
        if out.is_null() {
            return Err(null());
        }
        // SAFETY: non-null caller slot.
        unsafe { *out = v };
        Ok(())
    })
}

/// Runs a suite ("all", "ipq", "sums", "lognm", "appendix") with tolerances scaled by `tol_scale`.
#[no_mangle]
pub unsafe extern "C" fn plg_verify(suite: *const c_char, tol_scale: f64, out: *mut *mut PlgReport) -> PlgStatus {
    guard(|| {
        let suite: Suite = c_str(suite)?.parse()?;
        if tol_scale.is_nan() || tol_scale <= 0.0 {
            return Err(Fail(PlgStatus::InvalidArgument, "tol_scale must be positive".into()));
        }
        if out.is_null() {
            return Err(null());
        }
        let cfg = VerifyConfig {
            tol_scale,
            ..VerifyConfig::default()
        };
        // SAFETY: non-null caller slot.
        unsafe { *out = Box::into_raw(Box::new(PlgReport(run(suite, cfg)))) };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn plg_report_free(report: *mut PlgReport) {
    if !report.is_null() {
        // SAFETY: produced by Box::into_raw in `plg_verify`.
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Pass and fail counts.
#[no_mangle]
pub unsafe extern "C" fn plg_report_counts(
    report: *const PlgReport,
    passed: *mut usize,
    failed: *mut usize,
) -> PlgStatus {
    guard(|| {
        let r = &borrow(report)?.0;
        if passed.is_null() || failed.is_null() {
            return Err(null());
        }
        // SAFETY: non-null caller slots.
        unsafe {
            *passed = r.summary.passed;
            *failed = r.summary.failed;
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn plg_report_to_json(
    report: *const PlgReport,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> PlgStatus {
    guard(|| write_str(&borrow(report)?.0.to_json(), buf, len, needed))
}
