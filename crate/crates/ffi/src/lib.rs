//! C ABI for `placticc`.
//!
//! Words of columns live behind the opaque [`PlacticcWord`] handle. Every
//! function returns a [`PlacticcStatus`]; results go through out-pointers.
//! On failure a message is available from [`placticc_last_error_message`]
//! until the next call on the same thread. Strings returned by the library
//! must be released with [`placticc_string_free`], words with
//! [`placticc_word_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use placticc::crystal::{self, CrystalOp};
use placticc::ctree::{self, CTree};
use placticc::insertion::{decorated_product, insert_pair, normal_form};
use placticc::rewriting::{self, Variant};
use placticc::text::{format_decorated, parse_decorated};
use placticc::{DecoratedWord, Error, Rank};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlacticcStatus {
    Ok = 0,
    /// Malformed text or JSON input.
    ParseError = 1,
    /// A value violates the precondition of the operation.
    InvalidInput = 2,
    /// A numeric argument is out of range for the rank.
    DomainError = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// The crystal operator does not apply to the word.
    Undefined = 5,
    /// Rewriting exceeded its step limit.
    StepLimit = 6,
    /// Enumeration refused because the rank exceeds the cap.
    CapExceeded = 7,
    /// A verification report contains violations.
    Violations = 8,
    /// Internal error or caught panic.
    Internal = 9,
}

pub const PLACTICC_OP_E: u32 = 0;
pub const PLACTICC_OP_F: u32 = 1;
pub const PLACTICC_VARIANT_ACOL: u32 = 0;
pub const PLACTICC_VARIANT_ACOL_BULLET: u32 = 1;

/// A word of admissible columns over `C_n` together with its rank `n`.
pub struct PlacticcWord {
    word: DecoratedWord,
    rank: Rank,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(PlacticcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain(_) => PlacticcStatus::DomainError,
            Error::InvalidInput(_) => PlacticcStatus::InvalidInput,
            Error::Parse { .. } => PlacticcStatus::ParseError,
            Error::StepLimit { .. } => PlacticcStatus::StepLimit,
            Error::CapExceeded { .. } => PlacticcStatus::CapExceeded,
            Error::Internal(_) => PlacticcStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: PlacticcStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PlacticcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PlacticcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside placticc");
            PlacticcStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(PlacticcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(PlacticcStatus::ParseError, format!("{what} is not UTF-8: {e}")))
}

unsafe fn word_arg<'a>(p: *const PlacticcWord, what: &str) -> Result<&'a PlacticcWord, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(PlacticcStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| fail(PlacticcStatus::NullPointer, format!("{what} is null")))
}

fn new_word(word: DecoratedWord, rank: Rank) -> *mut PlacticcWord {
    Box::into_raw(Box::new(PlacticcWord { word, rank }))
}

fn new_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(PlacticcStatus::Internal, "output contains a NUL byte"))
}

fn variant_arg(v: u32) -> Result<Variant, Failure> {
    match v {
        PLACTICC_VARIANT_ACOL => Ok(Variant::ACol),
        PLACTICC_VARIANT_ACOL_BULLET => Ok(Variant::AColBullet),
        _ => Err(fail(PlacticcStatus::DomainError, format!("unknown variant {v}"))),
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn placticc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a word of columns such as `[1 2] [1] [2 -2]` over `C_n`.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_word_parse(
    src: *const c_char,
    n: usize,
    out: *mut *mut PlacticcWord,
) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let rank = Rank::new(n)?;
        let word = parse_decorated(str_arg(src, "src")?, rank)?;
        *out = new_word(word, rank);
        Ok(())
    })
}

/// Releases a word. Null is ignored.
///
/// # Safety
/// `w` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn placticc_word_free(w: *mut PlacticcWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn placticc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Bracketed text form of `w`.
///
/// # Safety
/// `w` must be a live word and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_word_to_string(w: *const PlacticcWord, out: *mut *mut c_char) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = new_string(format_decorated(&word_arg(w, "w")?.word))?;
        Ok(())
    })
}

/// Number of columns of `w`, `ε` included.
///
/// # Safety
/// `w` must be a live word and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_word_len(w: *const PlacticcWord, out: *mut usize) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = word_arg(w, "w")?.word.len();
        Ok(())
    })
}

/// Normal form of `w`.
///
/// # Safety
/// `w` must be a live word and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_normalize(w: *const PlacticcWord, out: *mut *mut PlacticcWord) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let w = word_arg(w, "w")?;
        *out = new_word(normal_form(&w.word, w.rank)?.to_word(), w.rank);
        Ok(())
    })
}

/// Normal form of the product `a b`; both words must share their rank.
///
/// # Safety
/// `a` and `b` must be live words and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_product(
    a: *const PlacticcWord,
    b: *const PlacticcWord,
    out: *mut *mut PlacticcWord,
) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let (a, b) = (word_arg(a, "a")?, word_arg(b, "b")?);
        if a.rank != b.rank {
            return Err(fail(PlacticcStatus::InvalidInput, "words have different ranks"));
        }
        let p = decorated_product(&normal_form(&a.word, a.rank)?, &normal_form(&b.word, b.rank)?)?;
        *out = new_word(p.to_word(), a.rank);
        Ok(())
    })
}

/// Inserts the second column of a two-column word into the first and
/// returns the resulting standard pair.
///
/// # Safety
/// `pair` must be a live word and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_insert_pair(
    pair: *const PlacticcWord,
    out: *mut *mut PlacticcWord,
) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let w = word_arg(pair, "pair")?;
        let [c1, c2] = w.word.columns() else {
            return Err(fail(PlacticcStatus::InvalidInput, "expected exactly two columns"));
        };
        let (d1, d2) = insert_pair(c1, c2, w.rank)?;
        *out = new_word(DecoratedWord::new(vec![d1, d2], w.rank)?, w.rank);
        Ok(())
    })
}

/// Applies `e_i` (`op = PLACTICC_OP_E`) or `f_i` (`op = PLACTICC_OP_F`).
/// Returns `Undefined` and leaves `out` untouched when the operator does
/// not apply.
///
/// # Safety
/// `w` must be a live word and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_crystal_apply(
    w: *const PlacticcWord,
    op: u32,
    i: usize,
    out: *mut *mut PlacticcWord,
) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let w = word_arg(w, "w")?;
        let op = match op {
            PLACTICC_OP_E => CrystalOp::E,
            PLACTICC_OP_F => CrystalOp::F,
            _ => return Err(fail(PlacticcStatus::DomainError, format!("unknown operator {op}"))),
        };
        match crystal::apply(&w.word, op, i, w.rank)? {
            Some(moved) => {
                *out = new_word(moved, w.rank);
                Ok(())
            }
            None => Err(fail(
                PlacticcStatus::Undefined,
                format!("operator {op:?}_{i} does not apply"),
            )),
        }
    })
}

/// Highest-weight word of the crystal component of `w`.
///
/// # Safety
/// `w` must be a live word and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_highest_weight(
    w: *const PlacticcWord,
    out: *mut *mut PlacticcWord,
) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let w = word_arg(w, "w")?;
        *out = new_word(crystal::highest_weight(&w.word, w.rank), w.rank);
        Ok(())
    })
}

/// Lengths of the leftmost and rightmost reductions of a critical
/// branching source.
///
/// # Safety
/// `w` must be a live word; `a_len` and `b_len` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn placticc_conf(
    w: *const PlacticcWord,
    variant: u32,
    a_len: *mut usize,
    b_len: *mut usize,
) -> PlacticcStatus {
    guard(|| {
        let a_len = out_arg(a_len, "a_len")?;
        let b_len = out_arg(b_len, "b_len")?;
        let w = word_arg(w, "w")?;
        let shape = rewriting::conf(&w.word, variant_arg(variant)?, w.rank)?;
        *a_len = shape.a_len;
        *b_len = shape.b_len;
        Ok(())
    })
}

/// C-tree of a highest-weight word, as JSON.
///
/// # Safety
/// `w` must be a live word and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_tree_encode(w: *const PlacticcWord, out: *mut *mut c_char) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let w = word_arg(w, "w")?;
        *out = new_string(ctree::encode(&w.word, w.rank)?.to_json())?;
        Ok(())
    })
}

/// Reading of a valid tree given as JSON. An invalid tree yields
/// `InvalidInput` with its violations in the error message.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_tree_decode(json: *const c_char, out: *mut *mut PlacticcWord) -> PlacticcStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let tree = CTree::from_json(str_arg(json, "json")?)?;
        let violations = tree.validate();
        if !violations.is_empty() {
            let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(fail(PlacticcStatus::InvalidInput, text.join("; ")));
        }
        *out = new_word(tree.reading()?, tree.n());
        Ok(())
    })
}

/// Checks every critical branching at rank `n` and writes the JSON report.
/// Returns `Violations` (with the report still written) if any check fails.
/// `jobs = 0` uses all cores.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn placticc_verify_shapes(
    n: usize,
    variant: u32,
    jobs: usize,
    out: *mut *mut c_char,
) -> PlacticcStatus {
    let mut clean = true;
    let status = guard(|| {
        let out = out_arg(out, "out")?;
        let report =
            rewriting::verify_coherence(Rank::new(n)?, variant_arg(variant)?, jobs, rewriting::DEFAULT_RANK_CAP)?;
        clean = report.is_ok();
        *out = new_string(report.to_json())?;
        Ok(())
    });
    if status == PlacticcStatus::Ok && !clean {
        set_error("coherence report contains violations");
        return PlacticcStatus::Violations;
    }
    status
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn placticc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
