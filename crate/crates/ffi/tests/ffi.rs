use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qrwe_ffi::*;

/// Takes ownership of a library string.
fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { qrwe_string_free(s) };
    out
}

fn last_error() -> String {
    let p = qrwe_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn string_call(f: impl FnOnce(*mut *mut c_char) -> QrweStatus) -> Result<String, QrweStatus> {
    let mut s = ptr::null_mut();
    match f(&mut s) {
        QrweStatus::Ok => Ok(take(s)),
        st => {
            assert!(s.is_null(), "out-pointer written on failure");
            Err(st)
        }
    }
}

struct Handle(*mut QrweEnumerator);

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { qrwe_enumerator_free(self.0) };
    }
}

impl Handle {
    fn coefficient(&self, j: usize, k: usize) -> String {
        string_call(|o| unsafe { qrwe_enumerator_coefficient(self.0, j, k, o) }).unwrap()
    }

    fn json(&self) -> String {
        string_call(|o| unsafe { qrwe_enumerator_to_json(self.0, o) }).unwrap()
    }

    fn length(&self) -> usize {
        let mut n = 0;
        assert_eq!(unsafe { qrwe_enumerator_length(self.0, &mut n) }, QrweStatus::Ok);
        n
    }
}

fn c14(q: u64, classical: bool) -> Handle {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { qrwe_enumerator_c14(q, classical, &mut h) }, QrweStatus::Ok);
    Handle(h)
}

fn brute(q: u64, h: usize, classical: bool, budget: u64) -> Result<Handle, QrweStatus> {
    let mut out = ptr::null_mut();
    match unsafe { qrwe_enumerator_brute(q, h, classical, budget, &mut out) } {
        QrweStatus::Ok => Ok(Handle(out)),
        st => Err(st),
    }
}

#[test]
fn closed_form_matches_brute_force_through_handles() {
    for (q, classical) in [(5, false), (7, false), (9, false), (7, true)] {
        let a = c14(q, classical);
        let b = brute(q, 4, classical, 0).unwrap();
        assert_eq!(a.json(), b.json(), "q = {q}, classical = {classical}");
        assert_eq!(a.length(), q as usize + usize::from(!classical));
    }
    let e = c14(5, false);
    assert_eq!(e.coefficient(0, 0), "1");
    assert_eq!(e.coefficient(2, 0), "30");
    let b = brute(5, 4, false, 0).unwrap();
    for (j, k) in [(6, 0), (0, 6), (3, 3), (1, 1)] {
        assert_eq!(e.coefficient(j, k), b.coefficient(j, k));
    }
    let csv = string_call(|o| unsafe { qrwe_enumerator_to_csv(e.0, o) }).unwrap();
    assert!(csv.starts_with("i,j,k,A\n6,0,0,1\n"));
}

#[test]
fn dual_handle_matches_brute_dual() {
    let d = {
        let mut h = ptr::null_mut();
        assert_eq!(unsafe { qrwe_enumerator_dual(7, 8, false, &mut h) }, QrweStatus::Ok);
        Handle(h)
    };
    let b = brute(7, 2, false, 0).unwrap();
    assert_eq!(d.json(), b.json());
}

#[test]
fn scalar_functions() {
    let trace = |n, k, q| string_call(|o| unsafe { qrwe_hecke_trace(n, k, q, o) });
    assert_eq!(trace(1, 12, 5).unwrap(), "4830");
    assert_eq!(trace(2, 8, 3).unwrap(), "12");
    assert_eq!(trace(4, 6, 3).unwrap(), "-12");
    assert_eq!(trace(3, 6, 3), Err(QrweStatus::Domain));

    let moment = |q, r, f| string_call(|o| unsafe { qrwe_moment(q, r, f, o) });
    assert_eq!(moment(5, 0, QrweFlavor::All).unwrap(), "5");
    for (q, r) in [(5, 2), (9, 3), (13, 1)] {
        for (f, core) in [
            (QrweFlavor::All, qrwe_core::curve_census::Flavor::All),
            (QrweFlavor::TwoTorsion, qrwe_core::curve_census::Flavor::TwoTorsion),
            (QrweFlavor::FullTwoTorsion, qrwe_core::curve_census::Flavor::FullTwoTorsion),
        ] {
            let expect = qrwe_core::hecke_traces::moment_formula(q, r, core).unwrap().to_string();
            assert_eq!(moment(q, r, f).unwrap(), expect);
        }
    }

    let mut h = 0u64;
    assert_eq!(unsafe { qrwe_class_number(-23, &mut h) }, QrweStatus::Ok);
    assert_eq!(h, 3);
    assert_eq!(unsafe { qrwe_class_number(-5, &mut h) }, QrweStatus::Domain);
    assert_eq!(h, 3, "out-pointer untouched on failure");

    let hurwitz = |d| string_call(|o| unsafe { qrwe_hurwitz_class_number(d, o) });
    assert_eq!(hurwitz(-3).unwrap(), "1/3");
    assert_eq!(hurwitz(-12).unwrap(), "4/3");

    let v = unsafe { CStr::from_ptr(qrwe_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn errors_carry_status_and_message() {
    assert_eq!(brute(7, 4, false, 1000).err(), Some(QrweStatus::Budget));
    assert!(last_error().contains("16807"), "{}", last_error());

    let mut h = ptr::null_mut();
    assert_eq!(unsafe { qrwe_enumerator_c14(6, false, &mut h) }, QrweStatus::Domain);
    assert!(h.is_null());
    assert!(last_error().contains('6'));

    assert_eq!(unsafe { qrwe_enumerator_c14(5, false, ptr::null_mut()) }, QrweStatus::NullPointer);
    assert_eq!(
        string_call(|o| unsafe { qrwe_enumerator_coefficient(ptr::null(), 0, 0, o) }),
        Err(QrweStatus::Domain)
    );
    let e = c14(5, false);
    assert_eq!(
        string_call(|o| unsafe { qrwe_enumerator_coefficient(e.0, 4, 3, o) }),
        Err(QrweStatus::Domain)
    );

    unsafe {
        qrwe_enumerator_free(ptr::null_mut());
        qrwe_string_free(ptr::null_mut());
    }
}

#[test]
fn last_error_is_thread_local() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { qrwe_enumerator_c14(4, false, &mut h) }, QrweStatus::Domain);
    std::thread::spawn(|| assert!(qrwe_last_error_message().is_null())).join().unwrap();
    assert!(!qrwe_last_error_message().is_null());
}

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/qrwe.h")
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).unwrap();
    let src = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|s| s.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 14, "{exports:?}");
    for name in exports {
        assert!(text.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(text.contains("typedef struct QrweEnumerator QrweEnumerator;"));
}

#[test]
fn header_compiles_as_c_and_cxx() {
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let status = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg(header())
            .status()
            .unwrap_or_else(|e| panic!("{compiler}: {e}"));
        assert!(status.success(), "{compiler} rejected the header");
    }
}
