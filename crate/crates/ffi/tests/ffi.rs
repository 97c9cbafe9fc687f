use std::ffi::{CStr, CString};
use std::ptr;

use lpres_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lpres_last_error()) }.to_str().unwrap().to_string()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    lpres_string_free(s);
    out
}

fn group(name: &str) -> *mut LpresGroup {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { lpres_group_from_catalog(c(name).as_ptr(), &mut g) }, LpresStatus::Ok);
    g
}

#[test]
fn catalog_roundtrip_through_print_and_parse() {
    unsafe {
        let g = group("grigorchuk");
        let mut text = ptr::null_mut();
        assert_eq!(lpres_group_print(g, &mut text), LpresStatus::Ok);
        let text = take(text);
        let expected = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../groups/grigorchuk.grp")).unwrap();
        assert_eq!(text, expected);
        let mut h = ptr::null_mut();
        assert_eq!(lpres_group_parse(c(&text).as_ptr(), &mut h), LpresStatus::Ok);
        let (mut r1, mut r2) = (0, 0);
        lpres_group_rank(g, &mut r1);
        lpres_group_rank(h, &mut r2);
        assert_eq!((r1, r2), (3, 3));
        lpres_group_free(g);
        lpres_group_free(h);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(lpres_group_from_catalog(c("nope").as_ptr(), &mut g), LpresStatus::UnknownEntry);
        assert!(g.is_null());
        assert!(last_error().contains("nope"));
        assert_eq!(lpres_group_parse(c("group g { generators: a; fixed: b; }").as_ptr(), &mut g), LpresStatus::Syntax);
        assert!(last_error().contains("line 1"), "{}", last_error());
        assert_eq!(lpres_group_from_catalog(ptr::null(), &mut g), LpresStatus::NullArgument);
        assert_eq!(lpres_group_rank(ptr::null(), &mut 0), LpresStatus::NullArgument);
        let bad = [0xffu8, 0];
        assert_eq!(lpres_group_parse(bad.as_ptr().cast(), &mut g), LpresStatus::InvalidUtf8);
        let s = group("sym(5)");
        let mut order = 0;
        assert_eq!(lpres_order(s, 8, 1000, &mut order), LpresStatus::ResourceLimit);
        assert_eq!(lpres_order(s, 4, 100_000, &mut order), LpresStatus::Ok);
        assert_eq!(order, 120);
        assert_eq!(last_error(), "");
        lpres_group_free(s);
        lpres_group_free(ptr::null_mut());
        lpres_string_free(ptr::null_mut());
    }
}

#[test]
fn word_problem_and_action() {
    unsafe {
        let g = group("grigorchuk");
        let mut trivial = -1;
        for (src, expect) in [("a^2", 1), ("(a d)^4", 1), ("a b", 0), ("b c d", 1)] {
            let mut w = ptr::null_mut();
            assert_eq!(lpres_word_parse(g, c(src).as_ptr(), &mut w), LpresStatus::Ok, "{src}: {}", last_error());
            assert_eq!(lpres_word_is_trivial(g, w, &mut trivial), LpresStatus::Ok);
            assert_eq!(trivial, expect, "{src}");
            lpres_word_free(w);
        }
        let mut w = ptr::null_mut();
        lpres_word_parse(g, c("a").as_ptr(), &mut w);
        let mut len = 0;
        lpres_word_length(w, &mut len);
        assert_eq!(len, 1);
        let v = [0u32, 1, 1];
        let mut out = [9u32; 3];
        assert_eq!(lpres_word_act(g, w, v.as_ptr(), 3, out.as_mut_ptr()), LpresStatus::Ok);
        assert_eq!(out, [1, 1, 1]);
        let bad = [5u32];
        assert_eq!(lpres_word_act(g, w, bad.as_ptr(), 1, out.as_mut_ptr()), LpresStatus::InvalidInput);
        lpres_word_free(w);
        lpres_group_free(g);

        let z = group("zn(2)");
        let mut w = ptr::null_mut();
        assert_eq!(lpres_word_parse(z, c("x1").as_ptr(), &mut w), LpresStatus::Ok);
        assert_eq!(lpres_word_is_trivial(z, w, &mut trivial), LpresStatus::NoTreeAction);
        lpres_word_free(w);
        lpres_group_free(z);
    }
}

#[test]
fn enumerate_abelianize_verify() {
    unsafe {
        let g = group("lamplighter");
        let mut n = 0;
        assert_eq!(lpres_enumerate_count(g, 2, &mut n), LpresStatus::Ok);
        let mut text = ptr::null_mut();
        lpres_enumerate(g, 2, &mut text);
        assert_eq!(take(text).lines().count(), n);
        let (mut free, mut inv) = (0, ptr::null_mut());
        assert_eq!(lpres_abelianize(g, 4, &mut free, &mut inv), LpresStatus::Ok);
        assert_eq!(free, 1);
        assert_eq!(take(inv), "Z/2 x Z");
        lpres_group_free(g);

        let (mut passed, mut json) = (-1, ptr::null_mut());
        assert_eq!(lpres_verify_json(c("zn(3)").as_ptr(), &mut passed, &mut json), LpresStatus::Ok);
        assert_eq!(passed, 1);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert!(v.as_array().unwrap().iter().all(|c| c["status"] != "fail"));
        assert_eq!(lpres_verify_json(c("gamma-bar").as_ptr(), &mut passed, &mut json), LpresStatus::Ok);
        assert_eq!(passed, 0);
        lpres_string_free(json);
    }
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(lpres_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
