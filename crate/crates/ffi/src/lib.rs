//! C ABI over the disemisimple core.
//!
//! Every function returns a [`DsStatus`]. On failure the message is kept in
//! a thread-local slot readable through [`ds_last_error`]. Handles are
//! opaque and must be released with their `_free` function; strings
//! returned through `char **` are released with [`ds_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use disemisimple::classify::cross_check_vinberg_with;
use disemisimple::liealg::{semidirect, semisimple_algebra, LieAlgebra, SemisimpleSpec, Subspace};
use disemisimple::modexpr::{parse_algebra, parse_module};
use disemisimple::prehom::{
    certify_disemisimple_with, is_prehomogeneous, Certification, Mode, Verdict, DEFAULT_SEED, DEFAULT_TRIALS,
};
use disemisimple::repbuilder::Representation;

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ComputeError = 4,
    Panic = 5,
}

/// Outcome of a prehomogeneity test.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsVerdict {
    Prehomogeneous = 0,
    NotPrehomogeneous = 1,
    Inconclusive = 2,
}

/// A semisimple Lie algebra given by its simple factors.
pub struct DsAlgebra {
    spec: SemisimpleSpec,
}

/// A finite-dimensional module over a [`DsAlgebra`].
pub struct DsModule {
    spec: SemisimpleSpec,
    rep: Representation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(DsStatus, String);

impl Failure {
    fn parse(e: impl std::fmt::Display) -> Self {
        Failure(DsStatus::ParseError, e.to_string())
    }

    fn compute(e: impl std::fmt::Display) -> Self {
        Failure(DsStatus::ComputeError, e.to_string())
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            DsStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(DsStatus::NullPointer, "null string argument".into()));
    }
    // SAFETY: the caller passes a valid nul-terminated string.
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| Failure(DsStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    // SAFETY: non-null handles come from this library and are still live.
    unsafe { p.as_ref() }.ok_or_else(|| Failure(DsStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(DsStatus::NullPointer, "null output pointer".into()));
    }
    // SAFETY: checked non-null; the caller provides writable storage.
    unsafe { out.write(value) };
    Ok(())
}

/// Boxes `value` into a handle once `out` is known to be writable.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(DsStatus::NullPointer, "null output pointer".into()));
    }
    // SAFETY: checked non-null.
    unsafe { out.write(Box::into_raw(Box::new(value))) };
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(Failure::compute)?;
    if out.is_null() {
        return Err(Failure(DsStatus::NullPointer, "null output pointer".into()));
    }
    // SAFETY: checked non-null.
    unsafe { out.write(c.into_raw()) };
    Ok(())
}

fn mode(seed: u64, trials: u32, exact: c_int) -> Mode {
    if exact != 0 {
        Mode::Symbolic
    } else {
        Mode::Randomized { seed, trials: trials.max(1) as usize }
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn ds_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ds_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by `CString::into_raw` in `write_string`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses an algebra such as `A1xA2`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_algebra_parse(text: *const c_char, out: *mut *mut DsAlgebra) -> DsStatus {
    guard(|| {
        let spec = parse_algebra(unsafe { c_str(text) }?).map_err(Failure::parse)?;
        unsafe { write_handle(out, DsAlgebra { spec }) }
    })
}

/// Dimension of the algebra.
///
/// # Safety
/// `alg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_algebra_dim(alg: *const DsAlgebra, out: *mut usize) -> DsStatus {
    guard(|| {
        let a = unsafe { handle(alg) }?;
        unsafe { write_out(out, a.spec.dim()) }
    })
}

/// # Safety
/// `alg` must be null or a handle from [`ds_algebra_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_algebra_free(alg: *mut DsAlgebra) {
    if !alg.is_null() {
        // SAFETY: created by `Box::into_raw`.
        drop(unsafe { Box::from_raw(alg) });
    }
}

/// Parses and builds a module expression such as `L(1)#L(0,1)`.
///
/// # Safety
/// `alg` must be a live handle, `text` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_module_parse(
    alg: *const DsAlgebra,
    text: *const c_char,
    out: *mut *mut DsModule,
) -> DsStatus {
    guard(|| {
        let a = unsafe { handle(alg) }?;
        let expr = parse_module(unsafe { c_str(text) }?, &a.spec).map_err(Failure::parse)?;
        let rep = expr.evaluate(&a.spec).map_err(Failure::compute)?;
        unsafe { write_handle(out, DsModule { spec: a.spec.clone(), rep }) }
    })
}

/// Dimension of the module.
///
/// # Safety
/// `module` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_module_dim(module: *const DsModule, out: *mut usize) -> DsStatus {
    guard(|| {
        let m = unsafe { handle(module) }?;
        unsafe { write_out(out, m.rep.dim()) }
    })
}

/// Decomposition into irreducibles, e.g. `2L(1,0) + L(0,1)`.
///
/// # Safety
/// `module` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_module_decompose(module: *const DsModule, out: *mut *mut c_char) -> DsStatus {
    guard(|| {
        let m = unsafe { handle(module) }?;
        let d = m.rep.decompose().map_err(Failure::compute)?;
        unsafe { write_string(out, d.to_string()) }
    })
}

/// # Safety
/// `module` must be null or a handle from [`ds_module_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_module_free(module: *mut DsModule) {
    if !module.is_null() {
        // SAFETY: created by `Box::into_raw`.
        drop(unsafe { Box::from_raw(module) });
    }
}

/// Tests the module for a dense orbit. `exact != 0` selects the symbolic
/// mode, in which `seed` and `trials` are ignored. `out_json` may be null.
///
/// # Safety
/// `module` must be a live handle; `out_verdict` writable; `out_json` null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn ds_prehom(
    module: *const DsModule,
    seed: u64,
    trials: u32,
    exact: c_int,
    out_verdict: *mut DsVerdict,
    out_json: *mut *mut c_char,
) -> DsStatus {
    guard(|| {
        let m = unsafe { handle(module) }?;
        let c = is_prehomogeneous(&m.rep, mode(seed, trials, exact));
        let v = match c.verdict {
            Verdict::Prehomogeneous { .. } => DsVerdict::Prehomogeneous,
            Verdict::NotPrehomogeneous(_) => DsVerdict::NotPrehomogeneous,
            Verdict::Inconclusive { .. } => DsVerdict::Inconclusive,
        };
        unsafe { write_out(out_verdict, v) }?;
        if !out_json.is_null() {
            unsafe { write_string(out_json, c.to_json()) }?;
        }
        Ok(())
    })
}

/// Certifies `s ⋉ V` as disemisimple. `out_certified` receives 1 or 0;
/// `out_json` (optional) the certificate or refusal.
///
/// # Safety
/// `module` must be a live handle; `out_certified` writable; `out_json`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn ds_certify(
    module: *const DsModule,
    exact: c_int,
    out_certified: *mut c_int,
    out_json: *mut *mut c_char,
) -> DsStatus {
    guard(|| {
        let m = unsafe { handle(module) }?;
        let s = semisimple_algebra(&m.spec).map_err(Failure::compute)?;
        let g = semidirect(&s, &m.rep, &LieAlgebra::abelian(m.rep.dim())).map_err(Failure::compute)?;
        let levi = Subspace::coordinate(g.dim(), 0..s.dim());
        let c = certify_disemisimple_with(&g, &levi, mode(DEFAULT_SEED, DEFAULT_TRIALS as u32, exact))
            .map_err(Failure::compute)?;
        let (flag, body) = match &c {
            Certification::Certified(cert) => {
                (1, serde_json::json!({"certified": true, "certificate": cert.to_json_view()}))
            }
            Certification::Refused(r) => (0, serde_json::json!({"certified": false, "refusal": r})),
        };
        unsafe { write_out(out_certified, flag) }?;
        if !out_json.is_null() {
            unsafe { write_string(out_json, body.to_string()) }?;
        }
        Ok(())
    })
}

/// Exhaustive comparison with the table for a simple type; `bound == 0`
/// means `dim s − 1`. Writes the JSON report; `out_clean` receives 1 when
/// the diff is empty.
///
/// # Safety
/// `simple_type` must be nul-terminated; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn ds_crosscheck(
    simple_type: *const c_char,
    bound: u64,
    out_clean: *mut c_int,
    out_json: *mut *mut c_char,
) -> DsStatus {
    guard(|| {
        let spec = parse_algebra(unsafe { c_str(simple_type) }?).map_err(Failure::parse)?;
        let [t] = spec.factors.as_slice() else {
            return Err(Failure(DsStatus::ParseError, "expected a simple type".into()));
        };
        let bound = if bound == 0 { t.algebra_dim() as u64 - 1 } else { bound };
        let report = cross_check_vinberg_with(*t, bound, None).map_err(Failure::compute)?;
        unsafe { write_out(out_clean, c_int::from(report.is_clean())) }?;
        unsafe { write_string(out_json, serde_json::to_string(&report).map_err(Failure::compute)?) }
    })
}
