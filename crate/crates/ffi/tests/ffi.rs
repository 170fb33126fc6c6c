use std::ffi::{c_char, c_int, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use disemisimple_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = ds_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ds_string_free(s) };
    out
}

unsafe fn module(alg: &str, text: &str) -> (*mut DsAlgebra, *mut DsModule) {
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { ds_algebra_parse(cstr(alg).as_ptr(), &mut a) }, DsStatus::Ok);
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { ds_module_parse(a, cstr(text).as_ptr(), &mut m) }, DsStatus::Ok, "{}", last_error());
    (a, m)
}

#[test]
fn parse_and_inspect() {
    unsafe {
        let (a, m) = module("A1xA2", "L(1)#L(0,1)");
        let mut dim = 0usize;
        assert_eq!(ds_algebra_dim(a, &mut dim), DsStatus::Ok);
        assert_eq!(dim, 11);
        assert_eq!(ds_module_dim(m, &mut dim), DsStatus::Ok);
        assert_eq!(dim, 6);
        let mut s = ptr::null_mut();
        assert_eq!(ds_module_decompose(m, &mut s), DsStatus::Ok);
        assert_eq!(take(s), "L(1)#L(0,1)");
        ds_module_free(m);
        ds_algebra_free(a);

        let (a, m) = module("A2", "nat * dual(nat)");
        assert_eq!(ds_module_decompose(m, &mut s), DsStatus::Ok);
        assert_eq!(take(s), "L(0,0) + L(1,1)");
        ds_module_free(m);
        ds_algebra_free(a);
    }
    assert!(unsafe { CStr::from_ptr(ds_version()) }.to_str().unwrap().starts_with(env!("CARGO_PKG_VERSION")));
}

#[test]
fn prehom_verdicts() {
    let cases = [
        ("A1xA2", "L(1)#L(0,1)", DsVerdict::Prehomogeneous),
        ("A1xA1", "L(1)#L(1)", DsVerdict::NotPrehomogeneous),
        ("A1", "triv", DsVerdict::NotPrehomogeneous),
        ("C3", "L(1,0,0)", DsVerdict::Prehomogeneous),
    ];
    for (alg, text, expected) in cases {
        for exact in [0, 1] {
            unsafe {
                let (a, m) = module(alg, text);
                let mut v = DsVerdict::Inconclusive;
                let mut json = ptr::null_mut();
                assert_eq!(ds_prehom(m, 7, 3, exact, &mut v, &mut json), DsStatus::Ok);
                assert_eq!(v, expected, "{alg} {text} exact={exact}");
                let parsed: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
                assert!(parsed.is_object());
                assert_eq!(ds_prehom(m, 7, 3, exact, &mut v, ptr::null_mut()), DsStatus::Ok);
                ds_module_free(m);
                ds_algebra_free(a);
            }
        }
    }
}

#[test]
fn certify_and_crosscheck() {
    unsafe {
        let (a, m) = module("A1", "nat");
        let mut flag: c_int = -1;
        let mut json = ptr::null_mut();
        assert_eq!(ds_certify(m, 0, &mut flag, &mut json), DsStatus::Ok);
        assert_eq!(flag, 1);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["certificate"]["intersection_dim"], 1);
        ds_module_free(m);
        ds_algebra_free(a);

        let (a, m) = module("A1", "L(2)");
        assert_eq!(ds_certify(m, 1, &mut flag, ptr::null_mut()), DsStatus::Ok);
        assert_eq!(flag, 0);
        ds_module_free(m);
        ds_algebra_free(a);

        let mut clean: c_int = -1;
        assert_eq!(ds_crosscheck(cstr("A2").as_ptr(), 0, &mut clean, &mut json), DsStatus::Ok);
        assert_eq!(clean, 1);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["bound"], 7);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(ds_algebra_parse(cstr("D2").as_ptr(), &mut a), DsStatus::ParseError);
        assert!(a.is_null());
        assert!(last_error().contains("byte 0"), "{}", last_error());

        assert_eq!(ds_algebra_parse(ptr::null(), &mut a), DsStatus::NullPointer);
        assert_eq!(ds_algebra_parse(cstr("A1").as_ptr(), ptr::null_mut()), DsStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(ds_algebra_parse(bad.as_ptr().cast(), &mut a), DsStatus::InvalidUtf8);

        assert_eq!(ds_algebra_parse(cstr("A2").as_ptr(), &mut a), DsStatus::Ok);
        assert!(ds_last_error().is_null());
        let mut m = ptr::null_mut();
        assert_eq!(ds_module_parse(a, cstr("L(1)").as_ptr(), &mut m), DsStatus::ParseError);
        assert!(m.is_null());
        assert_eq!(ds_module_parse(ptr::null(), cstr("nat").as_ptr(), &mut m), DsStatus::NullPointer);
        let mut dim = 0usize;
        assert_eq!(ds_module_dim(ptr::null(), &mut dim), DsStatus::NullPointer);
        ds_algebra_free(a);

        let mut clean = 0;
        let mut json = ptr::null_mut();
        assert_eq!(ds_crosscheck(cstr("A1xA1").as_ptr(), 0, &mut clean, &mut json), DsStatus::ParseError);
        assert!(json.is_null());

        ds_algebra_free(ptr::null_mut());
        ds_module_free(ptr::null_mut());
        ds_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/disemisimple.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "ds_last_error",
        "ds_version",
        "ds_string_free",
        "ds_algebra_parse",
        "ds_algebra_dim",
        "ds_algebra_free",
        "ds_module_parse",
        "ds_module_dim",
        "ds_module_decompose",
        "ds_module_free",
        "ds_prehom",
        "ds_certify",
        "ds_crosscheck",
        "DS_STATUS_OK",
        "DS_VERDICT_INCONCLUSIVE",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    // Syntax-check the header when a C compiler is available.
    let probe =
        Command::new("cc").args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror"]).arg(&header).output();
    if let Ok(out) = probe {
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
