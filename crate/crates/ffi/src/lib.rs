//! C interface. Graphs are opaque handles; every fallible call returns an
//! [`LrmsoStatus`] and leaves a message for [`lrmso_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lrmso::eval::{eval, Assignment, EvalConfig, LowRankStrategy};
use lrmso::generators::{self, Family};
use lrmso::io::parse_graph;
use lrmso::logic::parse_formula;
use lrmso::lowrank::{brute_lowrank, lowrank_via_suffixes, DEFAULT_BRUTE_MAX_N, DEFAULT_SUFFIX_CAP};
use lrmso::rank::{cutrank, rank_measures};
use lrmso::{ColoredGraph, Error, VertexSet};

/// Opaque graph handle.
pub struct LrmsoGraph(ColoredGraph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrmsoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedInput = 3,
    VertexOutOfRange = 4,
    BadParameter = 5,
    BadFormula = 6,
    TooLarge = 7,
    CapExceeded = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrmsoStrategy {
    Brute = 0,
    Suffix = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LrmsoRankMeasures {
    pub rk_f2: usize,
    pub rk_q: usize,
    pub dv: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> LrmsoStatus {
    match e {
        Error::MalformedDocument(_) | Error::SelfLoop(_) => LrmsoStatus::MalformedInput,
        Error::VertexOutOfRange { .. } => LrmsoStatus::VertexOutOfRange,
        Error::TooLarge(_) => LrmsoStatus::TooLarge,
        Error::CapExceeded { .. } => LrmsoStatus::CapExceeded,
        Error::Formula(_) | Error::UnboundVariable(_) | Error::SymmetryRequired(_) => {
            LrmsoStatus::BadFormula
        }
        _ => LrmsoStatus::BadParameter,
    }
}

struct Failure(LrmsoStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LrmsoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LrmsoStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            LrmsoStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(LrmsoStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(LrmsoStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn graph<'a>(g: *const LrmsoGraph) -> Result<&'a ColoredGraph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(null)
}

unsafe fn vertex_set(n: usize, set: *const usize, len: usize) -> Result<VertexSet, Failure> {
    if len == 0 {
        return Ok(VertexSet::empty(n));
    }
    if set.is_null() {
        return Err(null());
    }
    let items = std::slice::from_raw_parts(set, len);
    VertexSet::try_from_indices(n, items.iter().copied())
        .map_err(|vertex| Error::VertexOutOfRange { vertex, n }.into())
}

unsafe fn emit<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

/// Parses a graph from its JSON form and stores a new handle in `*out`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lrmso_graph_from_json(
    json: *const c_char,
    out: *mut *mut LrmsoGraph,
) -> LrmsoStatus {
    guard(|| {
        let g = parse_graph(text(json)?)?;
        emit(out, Box::into_raw(Box::new(LrmsoGraph(g))))
    })
}

/// Builds a graph from a named family; `seed` is used only when `has_seed` is true.
///
/// # Safety
/// `family` must be NUL-terminated, `params` must point to `nparams` doubles
/// (or be null when `nparams` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lrmso_graph_generate(
    family: *const c_char,
    params: *const f64,
    nparams: usize,
    seed: u64,
    has_seed: bool,
    out: *mut *mut LrmsoGraph,
) -> LrmsoStatus {
    guard(|| {
        let values: &[f64] = if nparams == 0 {
            &[]
        } else if params.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(params, nparams)
        };
        let fam = Family::from_name(text(family)?, values, has_seed.then_some(seed))?;
        let g = generators::generate(&fam)?;
        emit(out, Box::into_raw(Box::new(LrmsoGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lrmso_graph_free(g: *mut LrmsoGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lrmso_graph_order(g: *const LrmsoGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Cutrank over F2 of the vertex set given as `len` indices.
///
/// # Safety
/// `g` must be live, `set` must point to `len` indices and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lrmso_cutrank(
    g: *const LrmsoGraph,
    set: *const usize,
    len: usize,
    out: *mut usize,
) -> LrmsoStatus {
    guard(|| {
        let g = graph(g)?;
        let x = vertex_set(g.n(), set, len)?;
        emit(out, cutrank(g, &x))
    })
}

/// F2 rank, rational rank and diversity of the cut of the given set.
///
/// # Safety
/// As for [`lrmso_cutrank`].
#[no_mangle]
pub unsafe extern "C" fn lrmso_rank_measures(
    g: *const LrmsoGraph,
    set: *const usize,
    len: usize,
    out: *mut LrmsoRankMeasures,
) -> LrmsoStatus {
    guard(|| {
        let g = graph(g)?;
        let x = vertex_set(g.n(), set, len)?;
        let m = rank_measures(g, &x);
        emit(
            out,
            LrmsoRankMeasures {
                rk_f2: m.rk_f2,
                rk_q: m.rk_q,
                dv: m.dv,
            },
        )
    })
}

fn strategy(s: LrmsoStrategy) -> LowRankStrategy {
    match s {
        LrmsoStrategy::Brute => LowRankStrategy::Brute,
        LrmsoStrategy::Suffix => LowRankStrategy::Suffix,
    }
}

/// Evaluates a sentence (with optional flip declarations) on `g`.
///
/// # Safety
/// `g` must be live, `formula` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lrmso_check(
    g: *const LrmsoGraph,
    formula: *const c_char,
    how: LrmsoStrategy,
    out: *mut bool,
) -> LrmsoStatus {
    guard(|| {
        let g = graph(g)?;
        let doc = parse_formula(text(formula)?).map_err(Error::from)?;
        let cfg = EvalConfig::with_strategy(strategy(how));
        emit(out, eval(g, &doc, &Assignment::new(), &cfg)?)
    })
}

/// All vertex sets of cutrank at most `r` as a JSON array of index arrays.
/// A `cap` of 0 selects the default. Free the result with [`lrmso_string_free`].
///
/// # Safety
/// `g` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lrmso_enum_lowrank_json(
    g: *const LrmsoGraph,
    r: usize,
    how: LrmsoStrategy,
    cap: usize,
    out: *mut *mut c_char,
) -> LrmsoStatus {
    guard(|| {
        let g = graph(g)?;
        let cap = if cap == 0 { DEFAULT_SUFFIX_CAP } else { cap };
        let fam = match how {
            LrmsoStrategy::Brute => brute_lowrank(g, r, DEFAULT_BRUTE_MAX_N)?,
            LrmsoStrategy::Suffix => lowrank_via_suffixes(g, r, cap)?,
        };
        let sets: Vec<Vec<usize>> = fam.sets.iter().map(VertexSet::to_vec).collect();
        let json = serde_json::to_string(&sets).expect("index arrays serialize");
        let c = CString::new(json).expect("JSON has no NUL bytes");
        emit(out, c.into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lrmso_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lrmso_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
