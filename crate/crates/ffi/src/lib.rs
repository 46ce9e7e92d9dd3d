//! C ABI over `laguerre-cert`.
//!
//! Every fallible entry point returns an [`LcStatus`]. On any status other
//! than `LC_STATUS_OK` (and the verdict statuses) a message is available from
//! [`lc_last_error`] on the same thread. Strings returned to the caller must
//! be released with [`lc_string_free`]; reports and streams have their own
//! free functions.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use laguerre_cert::asymptotics::{bessel_enclosure, error_budget, main_term, BesselOrder};
use laguerre_cert::cli::emit::{self, Format};
use laguerre_cert::exact::{q_at_one_stream, q_direct, QStream, Rational};
use laguerre_cert::interval::{AdaptivePrecision, Interval, Precision};
use laguerre_cert::verify::{self, Verdict, VerificationReport, VerifyError};

/// Result codes. The first three mirror the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    Violated = 1,
    Inconclusive = 2,
    InvalidArgument = 3,
    NullPointer = 4,
    BelowProofRange = 5,
    OutOfRange = 6,
    StreamEnd = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcVerdict {
    Verified = 0,
    Violated = 1,
    Inconclusive = 2,
}

/// Opaque verification report.
pub struct LcReport {
    inner: VerificationReport,
}

/// Opaque stream of `(n, Q_n(1))`.
pub struct LcQStream {
    inner: QStream,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: LcStatus, msg: impl Into<String>) -> LcStatus {
    set_error(msg);
    status
}

fn verify_error(e: VerifyError) -> LcStatus {
    let status = match e {
        VerifyError::BelowProofRange { .. } => LcStatus::BelowProofRange,
        _ => LcStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

/// Runs `f`, converting a panic into `LC_STATUS_INTERNAL`.
fn guard(f: impl FnOnce() -> LcStatus) -> LcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(LcStatus::Internal, "internal panic"),
    }
}

fn verdict_status(v: Verdict) -> LcStatus {
    match v {
        Verdict::Verified => LcStatus::Ok,
        Verdict::Violated => LcStatus::Violated,
        Verdict::Inconclusive => LcStatus::Inconclusive,
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, LcStatus> {
    if s.is_null() {
        return Err(fail(LcStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(LcStatus::InvalidArgument, "string argument is not UTF-8"))
}

fn policy(prec_start: u32, prec_cap: u32) -> Result<AdaptivePrecision, LcStatus> {
    let p = |b| Precision::new(b).map_err(|e| fail(LcStatus::InvalidArgument, e.to_string()));
    AdaptivePrecision::new(p(prec_start)?, p(prec_cap)?)
        .map_err(|e| fail(LcStatus::InvalidArgument, e.to_string()))
}

unsafe fn emit_report(
    result: Result<VerificationReport, VerifyError>,
    out: *mut *mut LcReport,
) -> LcStatus {
    match result {
        Ok(r) => {
            let status = verdict_status(r.verdict);
            *out = Box::into_raw(Box::new(LcReport { inner: r }));
            status
        }
        Err(e) => verify_error(e),
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

unsafe fn write_bounds(iv: &Interval, lo: *mut f64, hi: *mut f64) -> LcStatus {
    if lo.is_null() || hi.is_null() {
        return fail(LcStatus::NullPointer, "output pointer is null");
    }
    let (l, h) = iv.to_f64_bounds();
    *lo = l;
    *hi = h;
    LcStatus::Ok
}

/// Last error message on this thread, or NULL. Valid until the next call
/// into this library from the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn lc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `|Q_n(1)| <= n!` for `0 <= n <= n_max`. Returns the verdict as a status
/// and stores the report in `*out`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lc_check_folklore(n_max: u64, out: *mut *mut LcReport) -> LcStatus {
    guard(|| {
        if out.is_null() {
            return fail(LcStatus::NullPointer, "out is null");
        }
        emit_report(Ok(verify::check_folklore(n_max)), out)
    })
}

/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lc_check_ratio_extrema(
    n_max: u64,
    prec_start: u32,
    prec_cap: u32,
    out: *mut *mut LcReport,
) -> LcStatus {
    guard(|| {
        if out.is_null() {
            return fail(LcStatus::NullPointer, "out is null");
        }
        let p = match policy(prec_start, prec_cap) {
            Ok(p) => p,
            Err(s) => return s,
        };
        emit_report(verify::check_ratio_extrema(n_max, &p), out)
    })
}

/// `c` is a decimal (`"0.33"`) or fraction (`"33/100"`).
///
/// # Safety
/// `c` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_check_theorem1_numeric(
    n_max: u64,
    c: *const c_char,
    prec_start: u32,
    prec_cap: u32,
    out: *mut *mut LcReport,
) -> LcStatus {
    guard(|| {
        if out.is_null() {
            return fail(LcStatus::NullPointer, "out is null");
        }
        let c = match read_str(c).map(verify::parse_rational) {
            Ok(Ok(c)) => c,
            Ok(Err(e)) => return verify_error(e),
            Err(s) => return s,
        };
        let p = match policy(prec_start, prec_cap) {
            Ok(p) => p,
            Err(s) => return s,
        };
        emit_report(verify::check_theorem1_numeric(n_max, &p, &c), out)
    })
}

/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lc_check_theorem1_tail(
    n: u64,
    prec_start: u32,
    prec_cap: u32,
    out: *mut *mut LcReport,
) -> LcStatus {
    guard(|| {
        if out.is_null() {
            return fail(LcStatus::NullPointer, "out is null");
        }
        let p = match policy(prec_start, prec_cap) {
            Ok(p) => p,
            Err(s) => return s,
        };
        emit_report(verify::check_theorem1_tail(n, &p), out)
    })
}

/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lc_check_lemma4(k_max: u64, out: *mut *mut LcReport) -> LcStatus {
    guard(|| {
        if out.is_null() {
            return fail(LcStatus::NullPointer, "out is null");
        }
        emit_report(verify::check_lemma4(k_max), out)
    })
}

/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lc_check_qraja(
    n_max: u64,
    prec_start: u32,
    prec_cap: u32,
    out: *mut *mut LcReport,
) -> LcStatus {
    guard(|| {
        if out.is_null() {
            return fail(LcStatus::NullPointer, "out is null");
        }
        let p = match policy(prec_start, prec_cap) {
            Ok(p) => p,
            Err(s) => return s,
        };
        emit_report(verify::check_qraja(n_max, &p), out)
    })
}

/// # Safety
/// `report` must be a live report from this library.
#[no_mangle]
pub unsafe extern "C" fn lc_report_verdict(report: *const LcReport) -> LcVerdict {
    match report.as_ref().map(|r| r.inner.verdict) {
        Some(Verdict::Verified) => LcVerdict::Verified,
        Some(Verdict::Violated) => LcVerdict::Violated,
        _ => LcVerdict::Inconclusive,
    }
}

/// # Safety
/// `report` must be NULL or a live report from this library.
#[no_mangle]
pub unsafe extern "C" fn lc_report_witness_count(report: *const LcReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.witnesses.len())
}

/// Writes witness `index` as `n` and outward-rounded `double` bounds.
///
/// # Safety
/// `report` must be a live report; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_report_witness(
    report: *const LcReport,
    index: usize,
    n: *mut u64,
    lo: *mut f64,
    hi: *mut f64,
) -> LcStatus {
    guard(|| {
        let Some(r) = report.as_ref() else {
            return fail(LcStatus::NullPointer, "report is null");
        };
        let Some(w) = r.inner.witnesses.get(index) else {
            return fail(LcStatus::OutOfRange, format!("no witness {index}"));
        };
        if n.is_null() {
            return fail(LcStatus::NullPointer, "output pointer is null");
        }
        *n = w.n;
        write_bounds(&w.value, lo, hi)
    })
}

/// Report as JSON; free with [`lc_string_free`]. NULL on error.
///
/// # Safety
/// `report` must be a live report from this library.
#[no_mangle]
pub unsafe extern "C" fn lc_report_json(report: *const LcReport) -> *mut c_char {
    clear_error();
    match report.as_ref() {
        Some(r) => to_c_string(emit::report(&r.inner, Format::Json)),
        None => {
            set_error("report is null");
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `report` must be NULL or a report from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_report_free(report: *mut LcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Stream of `Q_0(1) … Q_{n_max}(1)`.
#[no_mangle]
pub extern "C" fn lc_qstream_new(n_max: u64) -> *mut LcQStream {
    Box::into_raw(Box::new(LcQStream {
        inner: q_at_one_stream(n_max),
    }))
}

/// Advances the stream. On `LC_STATUS_OK`, `*n` holds the index and
/// `*value` a decimal string to free with [`lc_string_free`]. Returns
/// `LC_STATUS_STREAM_END` once exhausted.
///
/// # Safety
/// `stream` must be live; `n` and `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_qstream_next(
    stream: *mut LcQStream,
    n: *mut u64,
    value: *mut *mut c_char,
) -> LcStatus {
    guard(|| {
        let Some(s) = stream.as_mut() else {
            return fail(LcStatus::NullPointer, "stream is null");
        };
        if n.is_null() || value.is_null() {
            return fail(LcStatus::NullPointer, "output pointer is null");
        }
        match s.inner.next() {
            Some((k, q)) => {
                *n = k;
                *value = to_c_string(q.to_string());
                LcStatus::Ok
            }
            None => LcStatus::StreamEnd,
        }
    })
}

/// # Safety
/// `stream` must be NULL or a stream from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_qstream_free(stream: *mut LcQStream) {
    if !stream.is_null() {
        drop(Box::from_raw(stream));
    }
}

/// Exact `Q_n(t)` for rational `t`, as a decimal integer or `num/den`.
///
/// # Safety
/// `t` must be NUL-terminated; `value` writable.
#[no_mangle]
pub unsafe extern "C" fn lc_q_direct(n: u64, t: *const c_char, value: *mut *mut c_char) -> LcStatus {
    guard(|| {
        if value.is_null() {
            return fail(LcStatus::NullPointer, "output pointer is null");
        }
        let t = match read_str(t).map(verify::parse_rational) {
            Ok(Ok(t)) => t,
            Ok(Err(e)) => return verify_error(e),
            Err(s) => return s,
        };
        *value = to_c_string(render_rational(&q_direct(n, &t)));
        LcStatus::Ok
    })
}

/// Outward `double` bounds of `M(n) = √(e/π)·cos(2√n − π/4)/n^{1/4}`.
///
/// # Safety
/// `lo` and `hi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_main_term(n: u64, prec: u32, lo: *mut f64, hi: *mut f64) -> LcStatus {
    guard(|| {
        let p = match Precision::new(prec) {
            Ok(p) => p,
            Err(e) => return fail(LcStatus::InvalidArgument, e.to_string()),
        };
        match main_term(n, p) {
            Ok(iv) => write_bounds(&iv, lo, hi),
            Err(e) => fail(LcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Bounds of `J_order(2r)`, `order ∈ {0, 1, 3}`, with `r` a decimal or
/// fraction string.
///
/// # Safety
/// `r` must be NUL-terminated; `lo` and `hi` writable.
#[no_mangle]
pub unsafe extern "C" fn lc_bessel(
    order: u32,
    r: *const c_char,
    prec: u32,
    lo: *mut f64,
    hi: *mut f64,
) -> LcStatus {
    guard(|| {
        let r = match read_str(r).map(verify::parse_rational) {
            Ok(Ok(r)) => r,
            Ok(Err(e)) => return verify_error(e),
            Err(s) => return s,
        };
        let (order, p) = match (BesselOrder::try_from(order), Precision::new(prec)) {
            (Ok(o), Ok(p)) => (o, p),
            (Err(e), _) => return fail(LcStatus::InvalidArgument, e.to_string()),
            (_, Err(e)) => return fail(LcStatus::InvalidArgument, e.to_string()),
        };
        match bessel_enclosure(order, &Interval::from_rational(&r, p), p) {
            Ok(b) => write_bounds(&b.j, lo, hi),
            Err(e) => fail(LcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Bounds of the normalized error budget `(E_2 + … + E_8)·n^{3/4}`.
///
/// # Safety
/// `lo` and `hi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_error_budget_normalized(
    n: u64,
    prec: u32,
    lo: *mut f64,
    hi: *mut f64,
) -> LcStatus {
    guard(|| {
        let p = match Precision::new(prec) {
            Ok(p) => p,
            Err(e) => return fail(LcStatus::InvalidArgument, e.to_string()),
        };
        match error_budget(n, p) {
            Ok(b) => write_bounds(&b.normalized, lo, hi),
            Err(e) => fail(LcStatus::InvalidArgument, e.to_string()),
        }
    })
}
