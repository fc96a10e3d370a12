use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use placticc_ffi::*;

struct Word(*mut PlacticcWord);

impl Drop for Word {
    fn drop(&mut self) {
        unsafe { placticc_word_free(self.0) }
    }
}

fn parse(src: &str, n: usize) -> Word {
    let c = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { placticc_word_parse(c.as_ptr(), n, &mut out) },
        PlacticcStatus::Ok
    );
    Word(out)
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { placticc_string_free(p) };
    s
}

fn text(w: &Word) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { placticc_word_to_string(w.0, &mut out) }, PlacticcStatus::Ok);
    take_string(out)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(placticc_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn parse_and_print() {
    let w = parse("[1 2][1] [2 -2]", 2);
    assert_eq!(text(&w), "[1 2] [1] [2 -2]");
    let mut len = 0;
    assert_eq!(unsafe { placticc_word_len(w.0, &mut len) }, PlacticcStatus::Ok);
    assert_eq!(len, 3);
}

#[test]
fn parse_errors_set_the_message() {
    let c = CString::new("[1 3]").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { placticc_word_parse(c.as_ptr(), 2, &mut out) },
        PlacticcStatus::ParseError
    );
    assert!(out.is_null());
    assert!(last_error().contains("byte 3"));
    assert_eq!(
        unsafe { placticc_word_parse(c.as_ptr(), 0, &mut out) },
        PlacticcStatus::DomainError
    );
    assert_eq!(
        unsafe { placticc_word_parse(ptr::null(), 2, &mut out) },
        PlacticcStatus::NullPointer
    );
    assert_eq!(
        unsafe { placticc_word_parse(c.as_ptr(), 2, ptr::null_mut()) },
        PlacticcStatus::NullPointer
    );
}

#[test]
fn normalize_product_and_insert() {
    let w = parse("[1 2] [1] [2 -2]", 2);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { placticc_normalize(w.0, &mut out) }, PlacticcStatus::Ok);
    assert_eq!(text(&Word(out)), "[] [1] [1 2]");
    let (a, b) = (parse("[1 2]", 2), parse("[1]", 2));
    assert_eq!(unsafe { placticc_product(a.0, b.0, &mut out) }, PlacticcStatus::Ok);
    assert_eq!(text(&Word(out)), "[1] [1 2]");
    let pair = parse("[1 2] [1]", 2);
    assert_eq!(unsafe { placticc_insert_pair(pair.0, &mut out) }, PlacticcStatus::Ok);
    assert_eq!(text(&Word(out)), "[1] [1 2]");
    assert_eq!(
        unsafe { placticc_insert_pair(w.0, &mut out) },
        PlacticcStatus::InvalidInput
    );
    let c = parse("[1]", 3);
    assert_eq!(
        unsafe { placticc_product(a.0, c.0, &mut out) },
        PlacticcStatus::InvalidInput
    );
}

#[test]
fn crystal_operators() {
    let w = parse("[1] [1]", 2);
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { placticc_crystal_apply(w.0, PLACTICC_OP_F, 1, &mut out) },
        PlacticcStatus::Ok
    );
    let lowered = Word(out);
    assert_eq!(text(&lowered), "[2] [1]");
    assert_eq!(
        unsafe { placticc_crystal_apply(w.0, PLACTICC_OP_E, 1, &mut out) },
        PlacticcStatus::Undefined
    );
    assert_eq!(
        unsafe { placticc_crystal_apply(w.0, 7, 1, &mut out) },
        PlacticcStatus::DomainError
    );
    assert_eq!(
        unsafe { placticc_crystal_apply(w.0, PLACTICC_OP_F, 3, &mut out) },
        PlacticcStatus::DomainError
    );
    assert_eq!(
        unsafe { placticc_highest_weight(lowered.0, &mut out) },
        PlacticcStatus::Ok
    );
    assert_eq!(text(&Word(out)), "[1] [1]");
}

#[test]
fn confluence_shape() {
    let w = parse("[1 2] [1] [2 -2]", 2);
    let (mut a, mut b) = (0, 0);
    assert_eq!(
        unsafe { placticc_conf(w.0, PLACTICC_VARIANT_ACOL, &mut a, &mut b) },
        PlacticcStatus::Ok
    );
    assert_eq!((a, b), (4, 3));
    let normal = parse("[] [1] [1 2]", 2);
    assert_eq!(
        unsafe { placticc_conf(normal.0, PLACTICC_VARIANT_ACOL, &mut a, &mut b) },
        PlacticcStatus::InvalidInput
    );
    assert_eq!(
        unsafe { placticc_conf(w.0, 9, &mut a, &mut b) },
        PlacticcStatus::DomainError
    );
}

#[test]
fn tree_round_trip() {
    let w = parse("[1 2] [1] [2 -2]", 2);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { placticc_tree_encode(w.0, &mut json) }, PlacticcStatus::Ok);
    let json = take_string(json);
    assert_eq!(json, r#"{"1.0":2,"2.0":1,"2.1+":1,"2.1-":1,"n":2,"rank":3}"#);
    let c = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { placticc_tree_decode(c.as_ptr(), &mut out) },
        PlacticcStatus::Ok
    );
    assert_eq!(text(&Word(out)), "[1 2] [1] [2 -2]");
    let bad = CString::new(r#"{"n":2,"rank":1,"1.0":3}"#).unwrap();
    assert_eq!(
        unsafe { placticc_tree_decode(bad.as_ptr(), &mut out) },
        PlacticcStatus::InvalidInput
    );
    assert!(last_error().contains("1.0"));
    let garbage = CString::new("{").unwrap();
    assert_eq!(
        unsafe { placticc_tree_decode(garbage.as_ptr(), &mut out) },
        PlacticcStatus::ParseError
    );
    let lower = parse("[2] [1]", 2);
    let mut none = ptr::null_mut();
    assert_eq!(
        unsafe { placticc_tree_encode(lower.0, &mut none) },
        PlacticcStatus::InvalidInput
    );
    assert!(none.is_null());
}

#[test]
fn verify_shapes_report() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { placticc_verify_shapes(2, PLACTICC_VARIANT_ACOL_BULLET, 1, &mut out) },
        PlacticcStatus::Ok
    );
    let report = take_string(out);
    assert!(report.contains("\"total\": 134"), "{report}");
    assert_eq!(
        unsafe { placticc_verify_shapes(5, PLACTICC_VARIANT_ACOL, 1, &mut out) },
        PlacticcStatus::CapExceeded
    );
}

#[test]
fn free_accepts_null() {
    unsafe {
        placticc_word_free(ptr::null_mut());
        placticc_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(placticc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
