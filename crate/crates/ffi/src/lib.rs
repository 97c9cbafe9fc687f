//! C ABI over the `lpres` toolkit.
//!
//! Every fallible function returns an [`LpresStatus`]; on failure a
//! message is available from [`lpres_last_error`] until the next call on
//! the same thread. Handles and strings returned through out-pointers are
//! owned by the caller and released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lpres::catalog::{get_entry, CatalogEntry};
use lpres::contract::WordProblem;
use lpres::coset::{abelianization, order_from_presentation};
use lpres::dsl::{parse_file, parse_word, print};
use lpres::lpres::DedupMode;
use lpres::verify::{reports_to_json, run_suite, SuiteConfig, DEFAULT_SEED};
use lpres::{Error, Word};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpresStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    UnknownEntry = 4,
    InvalidInput = 5,
    /// Coset, recursion or point bound hit; retry with larger limits.
    ResourceLimit = 6,
    NoTreeAction = 7,
    Unsupported = 8,
    Internal = 9,
}

/// A group: a catalog entry or a parsed `.grp` file.
pub struct LpresGroup {
    entry: CatalogEntry,
}

/// A freely reduced word over a group's generators.
pub struct LpresWord {
    word: Word,
    /// Already mapped into the tree generators when the group has a tree action.
    tree: Option<Word>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "?")).expect("NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(LpresStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Syntax { .. } | Error::UnknownGenerator(_) => LpresStatus::Syntax,
            Error::UnknownEntry(_) => LpresStatus::UnknownEntry,
            Error::BoundExceeded(_) | Error::CosetOverflow(_) | Error::RecursionLimit(_) => LpresStatus::ResourceLimit,
            Error::Unsupported(_) | Error::NotAscending => LpresStatus::Unsupported,
            _ => LpresStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn fail<T>(status: LpresStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(status, msg.into()))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LpresStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LpresStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LpresStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return fail(LpresStatus::NullArgument, format!("{what} is NULL"));
    }
    CStr::from_ptr(p).to_str().or_else(|_| fail(LpresStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(LpresStatus::NullArgument, format!("{what} is NULL")))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return fail(LpresStatus::NullArgument, "output pointer is NULL");
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).or_else(|_| fail(LpresStatus::Internal, "string contains NUL"))?;
    put(out, c.into_raw())
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next `lpres_*` call on the same thread.
#[no_mangle]
pub extern "C" fn lpres_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static, NUL-terminated crate version.
#[no_mangle]
pub extern "C" fn lpres_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lpres_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_group_from_catalog(name: *const c_char, out: *mut *mut LpresGroup) -> LpresStatus {
    guard(|| {
        let entry = get_entry(str_arg(name, "name")?)?;
        put(out, Box::into_raw(Box::new(LpresGroup { entry })))
    })
}

/// Parses a group file in the `.grp` language.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_group_parse(source: *const c_char, out: *mut *mut LpresGroup) -> LpresStatus {
    guard(|| {
        let file = parse_file(str_arg(source, "source")?)?;
        put(out, Box::into_raw(Box::new(LpresGroup { entry: CatalogEntry::from_file(file) })))
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lpres_group_free(g: *mut LpresGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Canonical `.grp` text.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_group_print(g: *const LpresGroup, out: *mut *mut c_char) -> LpresStatus {
    guard(|| put_string(out, print(&ref_arg(g, "group")?.entry.file)))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_group_rank(g: *const LpresGroup, out: *mut usize) -> LpresStatus {
    guard(|| put(out, ref_arg(g, "group")?.entry.lpres().rank()))
}

/// Number of relators up to substitution depth `depth`, cyclic dedup.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_enumerate_count(g: *const LpresGroup, depth: usize, out: *mut usize) -> LpresStatus {
    guard(|| put(out, ref_arg(g, "group")?.entry.lpres().enumerate_relators(depth, DedupMode::Cyclic).len()))
}

/// Relators up to `depth`, one per line.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_enumerate(g: *const LpresGroup, depth: usize, out: *mut *mut c_char) -> LpresStatus {
    guard(|| {
        let l = ref_arg(g, "group")?.entry.lpres();
        let lines: Vec<String> = l.enumerate_relators(depth, DedupMode::Cyclic).iter().map(|w| l.format_word(w)).collect();
        put_string(out, lines.join("\n"))
    })
}

/// Abelian invariants of the depth-`depth` truncation, e.g. `Z/2 x Z`.
///
/// # Safety
/// `g` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_abelianize(
    g: *const LpresGroup,
    depth: usize,
    free_rank_out: *mut usize,
    text_out: *mut *mut c_char,
) -> LpresStatus {
    guard(|| {
        let a = abelianization(ref_arg(g, "group")?.entry.lpres(), depth).invariants;
        if free_rank_out.is_null() || text_out.is_null() {
            return fail(LpresStatus::NullArgument, "output pointer is NULL");
        }
        put(free_rank_out, a.free_rank)?;
        put_string(text_out, a.to_string())
    })
}

/// Order by Todd–Coxeter on the depth-`depth` truncation.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_order(g: *const LpresGroup, depth: usize, max_cosets: usize, out: *mut u64) -> LpresStatus {
    guard(|| {
        let n = order_from_presentation(ref_arg(g, "group")?.entry.lpres(), depth, max_cosets)?;
        put(out, n as u64)
    })
}

/// Parses a word over the group's generators (or its tree generators).
///
/// # Safety
/// `g` must be a live handle, `source` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_word_parse(g: *const LpresGroup, source: *const c_char, out: *mut *mut LpresWord) -> LpresStatus {
    guard(|| {
        let e = &ref_arg(g, "group")?.entry;
        let src = str_arg(source, "source")?;
        let w = match (parse_word(&e.lpres().alphabet, src), e.model()) {
            (Ok(w), m) => {
                let tree = m.map(|m| m.embed(&w));
                LpresWord { word: w, tree }
            }
            (Err(_), Some(m)) if parse_word(m.spec.alphabet(), src).is_ok() => {
                let t = parse_word(m.spec.alphabet(), src)?;
                LpresWord { word: t.clone(), tree: Some(t) }
            }
            (Err(err), _) => return Err(err.into()),
        };
        put(out, Box::into_raw(Box::new(w)))
    })
}

/// # Safety
/// `w` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lpres_word_free(w: *mut LpresWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Length of the freely reduced word.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_word_length(w: *const LpresWord, out: *mut usize) -> LpresStatus {
    guard(|| put(out, ref_arg(w, "word")?.word.len()))
}

/// Decides triviality with the contracting word-problem algorithm;
/// writes 1 for trivial, 0 otherwise.
///
/// # Safety
/// `g` and `w` must be live handles, `w` parsed against `g`; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_word_is_trivial(g: *const LpresGroup, w: *const LpresWord, out: *mut i32) -> LpresStatus {
    guard(|| {
        let e = &ref_arg(g, "group")?.entry;
        let w = ref_arg(w, "word")?;
        let (Some(spec), Some(t)) = (e.spec(), &w.tree) else {
            return fail(LpresStatus::NoTreeAction, format!("`{}` has no tree action", e.name));
        };
        let trivial = WordProblem::for_spec(spec)?.is_trivial(t)?;
        put(out, trivial as i32)
    })
}

/// Image of a vertex (0-based digits, `len` of them) under the word.
///
/// # Safety
/// `vertex` and `out` must each point to `len` `u32`s; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn lpres_word_act(
    g: *const LpresGroup,
    w: *const LpresWord,
    vertex: *const u32,
    len: usize,
    out: *mut u32,
) -> LpresStatus {
    guard(|| {
        let e = &ref_arg(g, "group")?.entry;
        let w = ref_arg(w, "word")?;
        let (Some(spec), Some(t)) = (e.spec(), &w.tree) else {
            return fail(LpresStatus::NoTreeAction, format!("`{}` has no tree action", e.name));
        };
        if len > 0 && (vertex.is_null() || out.is_null()) {
            return fail(LpresStatus::NullArgument, "vertex or output is NULL");
        }
        let v = if len == 0 { &[][..] } else { std::slice::from_raw_parts(vertex, len) };
        let image = spec.act(t, v)?;
        if len > 0 {
            ptr::copy_nonoverlapping(image.as_ptr(), out, len);
        }
        Ok(())
    })
}

/// Runs the verification suite on a catalog entry and returns the JSON
/// report. `passed` receives 1 when no check failed.
///
/// # Safety
/// `name` must be NUL-terminated; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn lpres_verify_json(name: *const c_char, passed: *mut i32, out: *mut *mut c_char) -> LpresStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let reports = run_suite(&[name], &SuiteConfig::seeded(DEFAULT_SEED))?;
        if passed.is_null() {
            return fail(LpresStatus::NullArgument, "output pointer is NULL");
        }
        put(passed, reports.iter().all(|r| r.passed()) as i32)?;
        put_string(out, serde_json::to_string_pretty(&reports_to_json(&reports)).expect("serializable"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_mapping() {
        let code = |e: Error| Failure::from(e).0;
        assert_eq!(code(Error::CosetOverflow(5)), LpresStatus::ResourceLimit);
        assert_eq!(code(Error::RecursionLimit(5)), LpresStatus::ResourceLimit);
        assert_eq!(code(Error::UnknownGenerator("q".into())), LpresStatus::Syntax);
        assert_eq!(code(Error::NotAscending), LpresStatus::Unsupported);
        assert_eq!(code(Error::InvalidInput(String::new())), LpresStatus::InvalidInput);
    }

    #[test]
    fn panics_do_not_cross_the_boundary() {
        let prev = std::panic::take_hook();
        std::panic::set_hook(Box::new(|_| {}));
        let status = guard(|| panic!("boom"));
        std::panic::set_hook(prev);
        assert_eq!(status, LpresStatus::Internal);
        let msg = unsafe { CStr::from_ptr(lpres_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "internal panic");
    }
}
