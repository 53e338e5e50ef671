//! C ABI over `pentacover`.
//!
//! Graphs are opaque `PcGraph` handles released with `pc_graph_free`.
//! Strings returned to the caller are released with `pc_string_free`.
//! Every function returns a `PcStatus`; on failure the message is available
//! from `pc_last_error_message` on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pentacover::construct::{family, ConstructError, Family, Params};
use pentacover::graph::{parse_graph, to_graph6, to_sparse6, Graph};
use pentacover::modarith::solve_eq1;
use pentacover::symmetry::{are_isomorphic, automorphism_group};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The family's parameters violate a side condition.
    SideCondition = 3,
    Parse = 4,
    /// A computation failed or a verification did not hold.
    Failed = 5,
    /// The output buffer is too small; the required length was still written.
    BufferTooSmall = 6,
    Panic = 7,
}

/// A graph owned by the library.
pub struct PcGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

type Outcome = Result<(), (PcStatus, String)>;

fn guard(f: impl FnOnce() -> Outcome) -> PcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PcStatus::Panic
        }
    }
}

fn null(what: &str) -> (PcStatus, String) {
    (PcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (PcStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (PcStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn graph_arg<'a>(g: *const PcGraph, what: &str) -> Result<&'a Graph, (PcStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Outcome {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn new_handle(graph: Graph) -> *mut PcGraph {
    Box::into_raw(Box::new(PcGraph { graph }))
}

/// The message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn pc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a named graph (`k6`, `cd`, `cgd1`, ...). Unused parameters are ignored.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_family_build(name: *const c_char, m: u64, p: u64, e: u32, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f: Family = str_arg(name, "name")?.parse().map_err(|e: ConstructError| (PcStatus::InvalidArgument, e.to_string()))?;
        let inst = family(f, Params { m, p, e }).map_err(|e| match e {
            ConstructError::SideCondition { .. } => (PcStatus::SideCondition, e.to_string()),
            _ => (PcStatus::Failed, e.to_string()),
        })?;
        out.write(new_handle(inst.graph));
        Ok(())
    })
}

/// Reads one graph in graph6 or sparse6 (leading `:`) encoding.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_graph6(text: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (graph, _) = parse_graph(str_arg(text, "text")?).map_err(|e| (PcStatus::Parse, e.to_string()))?;
        out.write(new_handle(graph));
        Ok(())
    })
}

unsafe fn encode(g: *const PcGraph, out: *mut *mut c_char, f: fn(&Graph) -> String) -> PcStatus {
    guard(|| {
        let text = f(graph_arg(g, "graph")?);
        let s = CString::new(text).map_err(|_| (PcStatus::Failed, "encoding produced a NUL byte".to_string()))?;
        put(out, s.into_raw(), "out")
    })
}

/// graph6 encoding without a trailing newline; free with `pc_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_to_graph6(g: *const PcGraph, out: *mut *mut c_char) -> PcStatus {
    encode(g, out, to_graph6)
}

/// sparse6 encoding without a trailing newline; free with `pc_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_to_sparse6(g: *const PcGraph, out: *mut *mut c_char) -> PcStatus {
    encode(g, out, to_sparse6)
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live handle or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_vertex_count(g: *const PcGraph, out: *mut usize) -> PcStatus {
    guard(|| put(out, graph_arg(g, "graph")?.vertex_count(), "out"))
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_edge_count(g: *const PcGraph, out: *mut usize) -> PcStatus {
    guard(|| put(out, graph_arg(g, "graph")?.edge_count(), "out"))
}

/// Order of the automorphism group. `PC_STATUS_FAILED` if it exceeds `u64`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_aut_order(g: *const PcGraph, out: *mut u64) -> PcStatus {
    guard(|| {
        let a = automorphism_group(graph_arg(g, "graph")?).map_err(|e| (PcStatus::Failed, e.to_string()))?;
        let order = u64::try_from(a.order).map_err(|_| (PcStatus::Failed, format!("order {} exceeds u64", a.order)))?;
        put(out, order, "out")
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graphs_isomorphic(a: *const PcGraph, b: *const PcGraph, out: *mut bool) -> PcStatus {
    guard(|| {
        let found = are_isomorphic(graph_arg(a, "a")?, graph_arg(b, "b")?).map_err(|e| (PcStatus::Failed, e.to_string()))?;
        put(out, found.is_some(), "out")
    })
}

/// Roots of `x^4+x^3+x^2+x+1` mod `m` in ascending order. `count` receives the
/// number of roots; if it exceeds `capacity` nothing is written to `roots` and
/// `PC_STATUS_BUFFER_TOO_SMALL` is returned. `roots` may be null when
/// `capacity` is 0.
///
/// # Safety
/// `roots` must point to `capacity` writable values and `count` be valid.
#[no_mangle]
pub unsafe extern "C" fn pc_solve_eq1(m: u64, roots: *mut u64, capacity: usize, count: *mut usize) -> PcStatus {
    guard(|| {
        if m == 0 {
            return Err((PcStatus::InvalidArgument, "m must be positive".into()));
        }
        let found = solve_eq1(m).map_err(|e| (PcStatus::Failed, e.to_string()))?;
        put(count, found.len(), "count")?;
        if found.len() > capacity {
            return Err((PcStatus::BufferTooSmall, format!("{} roots, capacity {capacity}", found.len())));
        }
        if !found.is_empty() && roots.is_null() {
            return Err(null("roots"));
        }
        for (i, r) in found.iter().enumerate() {
            roots.add(i).write(r.value());
        }
        Ok(())
    })
}
