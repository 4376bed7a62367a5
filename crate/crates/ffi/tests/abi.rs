use std::ffi::{CStr, CString};
use std::ptr;

use nakayama_ffi::*;

fn from_kupisch(c: &[usize]) -> Result<*mut NkAlgebra, NkStatus> {
    let mut h = ptr::null_mut();
    match unsafe { nk_algebra_from_kupisch(c.as_ptr(), c.len(), &mut h) } {
        NkStatus::Ok => Ok(h),
        s => Err(s),
    }
}

fn kupisch(h: *const NkAlgebra) -> Vec<usize> {
    let mut n = 0;
    let mut buf = vec![0; unsafe { nk_algebra_rank(h) }];
    let s = unsafe { nk_algebra_kupisch(h, buf.as_mut_ptr(), buf.len(), &mut n) };
    assert_eq!(s, NkStatus::Ok);
    assert_eq!(n, buf.len());
    buf
}

fn last_error() -> String {
    let p = nk_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn get(
    f: unsafe extern "C" fn(*const NkAlgebra, *mut i64) -> NkStatus,
    h: *const NkAlgebra,
) -> i64 {
    let mut out = i64::MIN;
    assert_eq!(unsafe { f(h, &mut out) }, NkStatus::Ok);
    out
}

#[test]
fn dimensions_of_worked_example() {
    let h = from_kupisch(&[3, 4, 3, 3, 2]).unwrap();
    assert_eq!(unsafe { nk_algebra_rank(h) }, 5);
    assert_eq!(kupisch(h), [3, 4, 3, 3, 2]);
    assert_eq!(get(nk_algebra_gldim, h), -1);
    assert_eq!(get(nk_algebra_findim, h), 1);
    assert_eq!(get(nk_algebra_del, h), 1);
    assert_eq!(get(nk_algebra_phi_dim, h), 2);

    let mut e = ptr::null_mut();
    assert_eq!(unsafe { nk_algebra_epsilon(h, &mut e) }, NkStatus::Ok);
    assert_eq!(kupisch(e), [2, 2, 2]);

    let mut op = ptr::null_mut();
    assert_eq!(unsafe { nk_algebra_opposite(h, &mut op) }, NkStatus::Ok);
    assert_eq!(get(nk_algebra_findim, op), 1);

    unsafe {
        nk_algebra_free(h);
        nk_algebra_free(e);
        nk_algebra_free(op);
    }
}

#[test]
fn relations_constructor() {
    let spec = CString::new("n=5;1:3,3:3,5:2").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { nk_algebra_from_relations(spec.as_ptr(), &mut h) },
        NkStatus::Ok
    );
    assert_eq!(kupisch(h), [3, 4, 3, 3, 2]);
    unsafe { nk_algebra_free(h) };

    let bad = CString::new("n=3;1:2,2:5").unwrap();
    assert_eq!(
        unsafe { nk_algebra_from_relations(bad.as_ptr(), &mut h) },
        NkStatus::InvalidRelations
    );
    assert!(last_error().contains("inconsistent"));
}

#[test]
fn error_codes() {
    assert_eq!(from_kupisch(&[3, 1, 2]), Err(NkStatus::InvalidKupisch));
    assert!(last_error().contains("index 2"));
    assert_eq!(from_kupisch(&[]), Err(NkStatus::InvalidKupisch));

    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { nk_algebra_from_kupisch(ptr::null(), 3, &mut h) },
        NkStatus::NullPointer
    );
    let mut out = 0;
    assert_eq!(
        unsafe { nk_algebra_findim(ptr::null(), &mut out) },
        NkStatus::NullPointer
    );
    assert_eq!(unsafe { nk_algebra_rank(ptr::null()) }, 0);

    let h = from_kupisch(&[2, 2]).unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(
        unsafe { nk_algebra_epsilon(h, &mut e) },
        NkStatus::Undefined
    );
    assert!(e.is_null());

    let mut buf = [0usize; 1];
    let mut n = 0;
    assert_eq!(
        unsafe { nk_algebra_kupisch(h, buf.as_mut_ptr(), buf.len(), &mut n) },
        NkStatus::BufferTooSmall
    );
    assert_eq!(n, 2);
    unsafe {
        nk_algebra_free(h);
        nk_algebra_free(ptr::null_mut());
    }
}

#[test]
fn invariants_json() {
    let h = from_kupisch(&[3, 3, 2]).unwrap();
    let s = unsafe { nk_algebra_invariants_json(h) };
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    let want = nakayama::InvariantsReport::compute(&"3,3,2".parse().unwrap());
    assert_eq!(text, want.to_json());
    assert!(
        text.contains("\"epsilon_kupisch\": [\n    2,\n    2\n  ]"),
        "{text}"
    );
    unsafe {
        nk_string_free(s);
        nk_algebra_free(h);
    }
    assert!(unsafe { nk_algebra_invariants_json(ptr::null()) }.is_null());
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/nakayama.h");
    for name in [
        "NkAlgebra",
        "NK_STATUS_OK",
        "NK_STATUS_UNDEFINED",
        "nk_algebra_from_kupisch",
        "nk_algebra_from_relations",
        "nk_algebra_free",
        "nk_algebra_rank",
        "nk_algebra_kupisch",
        "nk_algebra_gldim",
        "nk_algebra_findim",
        "nk_algebra_phi_dim",
        "nk_algebra_del",
        "nk_algebra_opposite",
        "nk_algebra_epsilon",
        "nk_algebra_invariants_json",
        "nk_string_free",
        "nk_last_error_message",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
