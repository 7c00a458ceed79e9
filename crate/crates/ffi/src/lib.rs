//! C ABI over `schubert-core`.
//!
//! Instances are opaque heap handles. Every fallible call returns a
//! [`SchubertStatus`]; the message of the most recent failure on the calling
//! thread is available from [`schubert_last_error_message`]. Strings handed
//! out by the library must be released with [`schubert_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::ptr;

use schubert_core::cli::{cmd_mult, cmd_verify, CliError, Method};
use schubert_core::{hilbert_function, hilbert_series, pole_order, Error, Instance};

/// Status codes; the nonzero values match the `schubert` CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertStatus {
    Ok = 0,
    Mismatch = 1,
    InvalidInput = 2,
    NotOnVariety = 3,
    BudgetExceeded = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
}

pub const SCHUBERT_METHOD_DETERMINANT: u32 = 0;
pub const SCHUBERT_METHOD_PATHS: u32 = 1;
pub const SCHUBERT_METHOD_REFLECTIONS: u32 = 2;

/// Opaque handle to a validated pair `tau <= w`.
pub struct SchubertInstance {
    inner: Instance,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: SchubertStatus, message: impl Into<String>) -> SchubertStatus {
    let msg = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
    status
}

fn from_core(e: Error) -> SchubertStatus {
    match e {
        Error::NotOnVariety => fail(SchubertStatus::NotOnVariety, e.to_string()),
        other => fail(SchubertStatus::InvalidInput, other.to_string()),
    }
}

fn from_cli(e: CliError) -> SchubertStatus {
    let status = match &e {
        CliError::Parse(_) => SchubertStatus::InvalidInput,
        CliError::NotOnVariety => SchubertStatus::NotOnVariety,
        CliError::Budget { .. } => SchubertStatus::BudgetExceeded,
        CliError::Mismatch(_) => SchubertStatus::Mismatch,
    };
    fail(status, e.to_string())
}

fn hand_out(s: String, out: *mut *mut c_char) -> SchubertStatus {
    // decimal digits and commas only
    let c = CString::new(s).expect("no interior nul");
    unsafe { *out = c.into_raw() };
    SchubertStatus::Ok
}

unsafe fn read_entries<'a>(p: *const usize, len: usize) -> Option<&'a [usize]> {
    if len == 0 {
        Some(&[])
    } else if p.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(p, len))
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn schubert_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds an instance from the increasing entry vectors `w[0..d]` and
/// `tau[0..d]`. On success `*out` receives a handle owned by the caller.
///
/// # Safety
/// `w` and `tau` must point to `d` readable values (or may be NULL when
/// `d == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_instance_new(
    n: usize,
    d: usize,
    w: *const usize,
    tau: *const usize,
    out: *mut *mut SchubertInstance,
) -> SchubertStatus {
    if out.is_null() {
        return fail(SchubertStatus::NullPointer, "out is NULL");
    }
    let (Some(w), Some(tau)) = (read_entries(w, d), read_entries(tau, d)) else {
        return fail(SchubertStatus::NullPointer, "entry array is NULL");
    };
    match Instance::from_entries(n, d, w, tau) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SchubertInstance { inner }));
            SchubertStatus::Ok
        }
        Err(e) => from_core(e),
    }
}

/// # Safety
/// `inst` must be NULL or a handle from [`schubert_instance_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schubert_instance_free(inst: *mut SchubertInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// `d` of the instance, or 0 for NULL.
///
/// # Safety
/// `inst` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schubert_instance_d(inst: *const SchubertInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.inner.d())
}

unsafe fn copy_out(values: &[usize], out: *mut usize, len: usize) -> SchubertStatus {
    if len < values.len() {
        return fail(SchubertStatus::BufferTooSmall, format!("need {} slots, got {len}", values.len()));
    }
    if values.is_empty() {
        return SchubertStatus::Ok;
    }
    if out.is_null() {
        return fail(SchubertStatus::NullPointer, "out is NULL");
    }
    ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    SchubertStatus::Ok
}

/// Writes `kappa_1 .. kappa_d` into `out[0..d]`.
///
/// # Safety
/// `inst` must be a live handle and `out` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn schubert_instance_kappa(inst: *const SchubertInstance, out: *mut usize, len: usize) -> SchubertStatus {
    match inst.as_ref() {
        Some(i) => copy_out(i.inner.kappa(), out, len),
        None => fail(SchubertStatus::NullPointer, "instance is NULL"),
    }
}

/// Writes the connection permutation, 1-based, into `out[0..d]`.
///
/// # Safety
/// As [`schubert_instance_kappa`].
#[no_mangle]
pub unsafe extern "C" fn schubert_instance_sigma(inst: *const SchubertInstance, out: *mut usize, len: usize) -> SchubertStatus {
    match inst.as_ref() {
        Some(i) => copy_out(&i.inner.sigma_one_based(), out, len),
        None => fail(SchubertStatus::NullPointer, "instance is NULL"),
    }
}

/// Multiplicity as a decimal string. `method` is one of the
/// `SCHUBERT_METHOD_*` constants; `budget` caps the reflection-set search.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_multiplicity(
    inst: *const SchubertInstance,
    method: u32,
    budget: usize,
    out: *mut *mut c_char,
) -> SchubertStatus {
    let (Some(i), false) = (inst.as_ref(), out.is_null()) else {
        return fail(SchubertStatus::NullPointer, "instance or out is NULL");
    };
    let method = match method {
        SCHUBERT_METHOD_DETERMINANT => Method::Determinant,
        SCHUBERT_METHOD_PATHS => Method::Paths,
        SCHUBERT_METHOD_REFLECTIONS => Method::Reflections,
        other => return fail(SchubertStatus::InvalidInput, format!("unknown method {other}")),
    };
    match cmd_mult(&i.inner, method, budget) {
        Ok(doc) => hand_out(doc.multiplicity.expect("mult sets multiplicity").value.0.to_string(), out),
        Err(e) => from_cli(e),
    }
}

/// Pole order `T` of the Hilbert series (the dimension of `X(w)`).
///
/// # Safety
/// `inst` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schubert_pole_order(inst: *const SchubertInstance) -> usize {
    inst.as_ref().map_or(0, |i| pole_order(&i.inner))
}

/// Numerator coefficients `h_0,h_1,...` of the (conjectural) Hilbert series
/// as comma-separated decimals.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_hilbert_numerator(inst: *const SchubertInstance, out: *mut *mut c_char) -> SchubertStatus {
    let (Some(i), false) = (inst.as_ref(), out.is_null()) else {
        return fail(SchubertStatus::NullPointer, "instance or out is NULL");
    };
    let hs = hilbert_series(&i.inner);
    let coeffs: Vec<String> = hs.numerator.coefficients().iter().map(|c| c.to_string()).collect();
    hand_out(coeffs.join(","), out)
}

/// Coefficient of `z^m` in the Hilbert series, as a decimal string.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_hilbert_function(inst: *const SchubertInstance, m: usize, out: *mut *mut c_char) -> SchubertStatus {
    let (Some(i), false) = (inst.as_ref(), out.is_null()) else {
        return fail(SchubertStatus::NullPointer, "instance or out is NULL");
    };
    hand_out(hilbert_function(&hilbert_series(&i.inner), m).to_string(), out)
}

/// Runs the exhaustive cross-checks for every pair with `n <= max_n`.
#[no_mangle]
pub extern "C" fn schubert_verify(max_n: usize) -> SchubertStatus {
    match cmd_verify(max_n) {
        Ok(report) if report.passed => SchubertStatus::Ok,
        Ok(report) => fail(SchubertStatus::Mismatch, report.failure.unwrap_or_default()),
        Err(e) => from_cli(e),
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed only once.
#[no_mangle]
pub unsafe extern "C" fn schubert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
