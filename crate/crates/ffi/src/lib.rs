//! C ABI for the `nakayama` crate.
//!
//! Algebras are passed around as opaque `NkAlgebra` handles. Every fallible
//! function returns an [`NkStatus`]; on failure a human readable message is
//! available from [`nk_last_error_message`] until the next failing call on the
//! same thread. Infinite dimensions are reported as `-1`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use nakayama::{
    dimension_report, epsilon, kupisch_from_relations, opposite, Algebra, Dim, InvariantsReport,
    RelationSystem,
};

/// Result codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidKupisch = 2,
    InvalidRelations = 3,
    InvalidUtf8 = 4,
    BufferTooSmall = 5,
    Undefined = 6,
    Panic = 7,
}

/// Opaque handle to a validated cyclic Nakayama algebra.
pub struct NkAlgebra {
    inner: Algebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: NkStatus, msg: impl Into<String>) -> NkStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> NkStatus) -> NkStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(NkStatus::Panic, "internal panic"),
    }
}

fn dim_to_i64(d: Dim) -> i64 {
    match d {
        Dim::Finite(k) => k as i64,
        Dim::Infinite => -1,
    }
}

unsafe fn algebra<'a>(h: *const NkAlgebra) -> Option<&'a Algebra> {
    h.as_ref().map(|h| &h.inner)
}

fn into_handle(a: Algebra, out: *mut *mut NkAlgebra) -> NkStatus {
    unsafe { *out = Box::into_raw(Box::new(NkAlgebra { inner: a })) };
    NkStatus::Ok
}

/// Builds an algebra from `len` Kupisch lengths.
///
/// # Safety
/// `lengths` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_from_kupisch(
    lengths: *const usize,
    len: usize,
    out: *mut *mut NkAlgebra,
) -> NkStatus {
    guard(|| {
        if out.is_null() || (lengths.is_null() && len > 0) {
            return fail(NkStatus::NullPointer, "null pointer argument");
        }
        let c = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(lengths, len).to_vec()
        };
        match Algebra::new(c) {
            Ok(a) => into_handle(a, out),
            Err(e) => fail(NkStatus::InvalidKupisch, e.to_string()),
        }
    })
}

/// Builds an algebra from a relation string such as `"n=5;1:3,3:3,5:2"`.
///
/// # Safety
/// `spec` must be a NUL terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_from_relations(
    spec: *const c_char,
    out: *mut *mut NkAlgebra,
) -> NkStatus {
    guard(|| {
        if spec.is_null() || out.is_null() {
            return fail(NkStatus::NullPointer, "null pointer argument");
        }
        let s = match CStr::from_ptr(spec).to_str() {
            Ok(s) => s,
            Err(_) => return fail(NkStatus::InvalidUtf8, "relations are not valid UTF-8"),
        };
        let rels: RelationSystem = match s.parse() {
            Ok(r) => r,
            Err(e) => return fail(NkStatus::InvalidRelations, format!("{e}")),
        };
        match kupisch_from_relations(&rels) {
            Ok(a) => into_handle(a, out),
            Err(e) => fail(NkStatus::InvalidRelations, e.to_string()),
        }
    })
}

/// Releases a handle. Passing null is a no-op.
///
/// # Safety
/// `h` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_free(h: *mut NkAlgebra) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_rank(h: *const NkAlgebra) -> usize {
    algebra(h).map_or(0, Algebra::rank)
}

/// Copies the Kupisch series into `buf`. `written` always receives the rank,
/// so a call with `cap == 0` can be used to size the buffer.
///
/// # Safety
/// `buf` must have room for `cap` values; `h` and `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_kupisch(
    h: *const NkAlgebra,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> NkStatus {
    guard(|| {
        let (Some(a), false) = (algebra(h), written.is_null()) else {
            return fail(NkStatus::NullPointer, "null pointer argument");
        };
        *written = a.rank();
        if cap < a.rank() {
            return fail(
                NkStatus::BufferTooSmall,
                format!("buffer holds {cap}, need {}", a.rank()),
            );
        }
        if buf.is_null() {
            return fail(NkStatus::NullPointer, "null buffer");
        }
        ptr::copy_nonoverlapping(a.lengths().as_ptr(), buf, a.rank());
        NkStatus::Ok
    })
}

unsafe fn query(h: *const NkAlgebra, out: *mut i64, f: impl FnOnce(&Algebra) -> i64) -> NkStatus {
    guard(|| {
        let (Some(a), false) = (algebra(h), out.is_null()) else {
            return fail(NkStatus::NullPointer, "null pointer argument");
        };
        *out = f(a);
        NkStatus::Ok
    })
}

/// Global dimension; `-1` when infinite.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_gldim(h: *const NkAlgebra, out: *mut i64) -> NkStatus {
    query(h, out, |a| dim_to_i64(dimension_report(a).gldim))
}

/// Finitistic dimension.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_findim(h: *const NkAlgebra, out: *mut i64) -> NkStatus {
    query(h, out, |a| dimension_report(a).findim as i64)
}

/// φ-dimension.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_phi_dim(h: *const NkAlgebra, out: *mut i64) -> NkStatus {
    query(h, out, |a| nakayama::phi_dim(a) as i64)
}

/// Delooping level; `-1` when infinite.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_del(h: *const NkAlgebra, out: *mut i64) -> NkStatus {
    query(h, out, |a| dim_to_i64(nakayama::del_algebra(a)))
}

/// Writes a new handle for the opposite algebra.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_opposite(
    h: *const NkAlgebra,
    out: *mut *mut NkAlgebra,
) -> NkStatus {
    guard(|| {
        let (Some(a), false) = (algebra(h), out.is_null()) else {
            return fail(NkStatus::NullPointer, "null pointer argument");
        };
        into_handle(opposite(a), out)
    })
}

/// Writes a new handle for the syzygy filtered algebra. Returns
/// `NK_STATUS_UNDEFINED` for selfinjective algebras and for those whose
/// filtered algebra is not cyclic.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_epsilon(
    h: *const NkAlgebra,
    out: *mut *mut NkAlgebra,
) -> NkStatus {
    guard(|| {
        let (Some(a), false) = (algebra(h), out.is_null()) else {
            return fail(NkStatus::NullPointer, "null pointer argument");
        };
        match epsilon(a) {
            Ok(e) => into_handle(e.algebra, out),
            Err(e) => fail(NkStatus::Undefined, e.to_string()),
        }
    })
}

/// Full invariants report as JSON. Free the result with [`nk_string_free`].
/// Returns null on a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nk_algebra_invariants_json(h: *const NkAlgebra) -> *mut c_char {
    let Some(a) = algebra(h) else {
        set_error("null pointer argument");
        return ptr::null_mut();
    };
    match std::panic::catch_unwind(|| InvariantsReport::compute(a).to_json()) {
        Ok(s) => CString::new(s).map_or(ptr::null_mut(), CString::into_raw),
        Err(_) => {
            set_error("internal panic");
            ptr::null_mut()
        }
    }
}

/// Releases a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
