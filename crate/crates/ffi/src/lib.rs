//! C ABI for `daisycube`.
//!
//! Graphs are handed out as opaque `DcGraph` pointers that the caller owns
//! and releases with [`dc_graph_free`]. Every fallible function returns a
//! [`DcStatus`]; on failure a message is kept per thread and can be read with
//! [`dc_last_error_message`]. Labels cross the boundary as packed `uint64_t`
//! words with coordinate `u_1` in the least significant bit.
//!
//! # Safety
//!
//! Pointer arguments must be null or valid for the access the function
//! documents. Null pointers are reported as [`DcStatus::NullPointer`]; any
//! other invalid pointer is undefined behavior. Handles are immutable and may
//! be shared across threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::{ptr, slice};

use daisycube::analysis::{indices_by, verify};
use daisycube::io::{graph_from_json, graph_to_json};
use daisycube::oracle::{all_pairs, build_adjacency};
use daisycube::{
    daisy_closure_with, direction_profile, fibonacci_number, maximal_antichain, CubeSubgraph,
    Error, Family, GeneratorSet, IndexReport, Limits, Method, VertexLabel,
};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SizeLimit = 3,
    Parse = 4,
    Disconnected = 5,
    NotIsometric = 6,
    NotDaisy = 7,
    Disagreement = 8,
    Overflow = 9,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcMethod {
    Semicube = 0,
    Oracle = 1,
    Corollary = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcFamily {
    Hypercube = 0,
    Fibonacci = 1,
    Lucas = 2,
    Qnf = 3,
    VertexDeleted = 4,
}

/// Indices of one graph by one method.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DcIndexReport {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub wiener: u64,
    pub mostar: u64,
    /// `2W - Mo - |V||E|`
    pub residual: i64,
    pub method: DcMethod,
    pub relation_holds: bool,
}

/// Opaque graph handle.
pub struct DcGraph(CubeSubgraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(err: &Error) -> DcStatus {
    match err {
        Error::SizeLimit { .. } => DcStatus::SizeLimit,
        Error::BadBitString { .. } | Error::Json(_) => DcStatus::Parse,
        Error::Disconnected => DcStatus::Disconnected,
        Error::NotIsometric(_) => DcStatus::NotIsometric,
        Error::NotDaisyEmbedding(_) => DcStatus::NotDaisy,
        Error::MethodDisagreement(_) => DcStatus::Disagreement,
        Error::Overflow(_) => DcStatus::Overflow,
        Error::DimensionTooLarge { .. }
        | Error::LabelOutOfRange { .. }
        | Error::DuplicateVertex { .. }
        | Error::EmptyGraph
        | Error::EmptyGenerators
        | Error::InvalidArgument(_) => DcStatus::InvalidArgument,
    }
}

fn fail(status: DcStatus, message: impl Into<String>) -> DcStatus {
    set_last_error(message);
    status
}

impl From<Error> for DcStatus {
    fn from(err: Error) -> Self {
        fail(status_of(&err), err.to_string())
    }
}

/// Runs `f`, converting panics into [`DcStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), DcStatus>) -> DcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(DcStatus::Panic, "panic inside daisycube"),
    }
}

unsafe fn graph_ref<'a>(g: *const DcGraph) -> Result<&'a CubeSubgraph, DcStatus> {
    unsafe { g.as_ref() }
        .map(|g| &g.0)
        .ok_or_else(|| fail(DcStatus::NullPointer, "graph handle is null"))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, DcStatus> {
    unsafe { p.as_mut() }.ok_or_else(|| fail(DcStatus::NullPointer, format!("{what} is null")))
}

unsafe fn input_slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], DcStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(DcStatus::NullPointer, format!("{what} is null")));
    }
    Ok(unsafe { slice::from_raw_parts(p, len) })
}

fn limits(max_vertices: u64) -> Limits {
    if max_vertices == 0 {
        Limits::default()
    } else {
        Limits::with_max_vertices(usize::try_from(max_vertices).unwrap_or(usize::MAX))
    }
}

unsafe fn store_graph(out: *mut *mut DcGraph, g: CubeSubgraph) -> Result<(), DcStatus> {
    let slot = unsafe { out_ref(out, "output handle") }?;
    *slot = Box::into_raw(Box::new(DcGraph(g)));
    Ok(())
}

/// Copies `src` into a caller buffer of `cap` elements, always reporting the
/// full length through `written`.
unsafe fn copy_out(
    src: &[u64],
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> Result<(), DcStatus> {
    let written = unsafe { out_ref(written, "length output") }?;
    *written = src.len();
    if src.len() > cap {
        return Err(fail(
            DcStatus::BufferTooSmall,
            format!("buffer holds {cap} values, {} needed", src.len()),
        ));
    }
    if src.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Err(fail(DcStatus::NullPointer, "output buffer is null"));
    }
    unsafe { ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len()) };
    Ok(())
}

/// Builds a member of a named family. `pattern_bits`/`pattern_len` give the
/// forbidden substring for [`DcFamily::Qnf`] and are ignored otherwise.
/// `max_vertices == 0` selects the default cap.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn dc_family_build(
    family: DcFamily,
    n: u32,
    pattern_bits: u64,
    pattern_len: u32,
    max_vertices: u64,
    out: *mut *mut DcGraph,
) -> DcStatus {
    guard(|| {
        let (family, pattern) = match family {
            DcFamily::Hypercube => (Family::Hypercube, None),
            DcFamily::Fibonacci => (Family::Fibonacci, None),
            DcFamily::Lucas => (Family::Lucas, None),
            DcFamily::VertexDeleted => (Family::VertexDeleted, None),
            DcFamily::Qnf => (
                Family::Qnf,
                Some(VertexLabel::new(pattern_bits, pattern_len)?),
            ),
        };
        let g = family.build(n, pattern, &limits(max_vertices))?;
        unsafe { store_graph(out, g) }
    })
}

/// Downward closure of `len` generators of dimension `n`.
///
/// # Safety
/// `generators` must point to `len` readable words; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_daisy_closure(
    n: u32,
    generators: *const u64,
    len: usize,
    max_vertices: u64,
    out: *mut *mut DcGraph,
) -> DcStatus {
    guard(|| {
        let gens = unsafe { input_slice(generators, len, "generators") }?;
        let set = GeneratorSet::from_bits(n, gens.iter().copied())?;
        let g = daisy_closure_with(&set, &limits(max_vertices))?;
        unsafe { store_graph(out, g) }
    })
}

/// Graph induced by `len` labels of dimension `n`. Duplicates are rejected.
///
/// # Safety
/// `labels` must point to `len` readable words; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_labels(
    n: u32,
    labels: *const u64,
    len: usize,
    out: *mut *mut DcGraph,
) -> DcStatus {
    guard(|| {
        let labels = unsafe { input_slice(labels, len, "labels") }?;
        let g = CubeSubgraph::from_bits(n, labels.to_vec())?;
        unsafe { store_graph(out, g) }
    })
}

/// Parses a graph JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_json(
    json: *const c_char,
    out: *mut *mut DcGraph,
) -> DcStatus {
    guard(|| {
        if json.is_null() {
            return Err(fail(DcStatus::NullPointer, "json is null"));
        }
        let text = unsafe { CStr::from_ptr(json) }
            .to_str()
            .map_err(|e| fail(DcStatus::Parse, e.to_string()))?;
        let g = graph_from_json(text)?;
        unsafe { store_graph(out, g) }
    })
}

/// Serializes a graph to JSON. Release the string with [`dc_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_to_json(g: *const DcGraph, out: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let slot = unsafe { out_ref(out, "output string") }?;
        let text = CString::new(graph_to_json(g)).expect("JSON contains no NUL");
        *slot = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `g` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_free(g: *mut DcGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Dimension `n`, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_dimension(g: *const DcGraph) -> u32 {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.dim())
}

/// `|V|`, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_vertex_count(g: *const DcGraph) -> u64 {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.vertex_count() as u64)
}

/// `|E|`, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_edge_count(g: *const DcGraph) -> u64 {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.edge_count())
}

/// Copies the sorted labels into `buf`. `written` receives `|V|` even when
/// the buffer is too small.
///
/// # Safety
/// `buf` must be writable for `cap` words; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_labels(
    g: *const DcGraph,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> DcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { copy_out(g.bits(), buf, cap, written) }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_is_downward_closed(
    g: *const DcGraph,
    out: *mut bool,
) -> DcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        *unsafe { out_ref(out, "output flag") }? = g.is_downward_closed();
        Ok(())
    })
}

/// BFS distances against Hamming distances over all pairs. Fails with
/// [`DcStatus::Disconnected`] on a disconnected graph.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_is_isometric(g: *const DcGraph, out: *mut bool) -> DcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let ap = all_pairs(&build_adjacency(g))?;
        *unsafe { out_ref(out, "output flag") }? = ap.is_isometric();
        Ok(())
    })
}

/// Per-direction `|E_i|`, `|W(i,0)|`, `|W(i,1)|`. Each buffer must hold
/// `cap >= n` words; `written` receives `n`.
///
/// # Safety
/// `e`, `w0`, `w1` must be writable for `cap` words; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_profile(
    g: *const DcGraph,
    e: *mut u64,
    w0: *mut u64,
    w1: *mut u64,
    cap: usize,
    written: *mut usize,
) -> DcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let p = direction_profile(g);
        unsafe {
            copy_out(&p.e, e, cap, written)?;
            copy_out(&p.w0, w0, cap, written)?;
            copy_out(&p.w1, w1, cap, written)
        }
    })
}

fn to_c_report(r: &IndexReport) -> Result<DcIndexReport, DcStatus> {
    let narrow =
        |x: u128| u64::try_from(x).map_err(|_| DcStatus::from(Error::Overflow("C report")));
    Ok(DcIndexReport {
        vertex_count: r.vertex_count,
        edge_count: r.edge_count,
        wiener: narrow(r.wiener)?,
        mostar: narrow(r.mostar)?,
        residual: i64::try_from(r.residual)
            .map_err(|_| DcStatus::from(Error::Overflow("C report")))?,
        method: match r.method {
            Method::Semicube => DcMethod::Semicube,
            Method::Oracle => DcMethod::Oracle,
            Method::Corollary => DcMethod::Corollary,
        },
        relation_holds: r.residual == 0,
    })
}

/// Wiener and Mostar indices by one method.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_indices(
    g: *const DcGraph,
    method: DcMethod,
    out: *mut DcIndexReport,
) -> DcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let method = match method {
            DcMethod::Semicube => Method::Semicube,
            DcMethod::Oracle => Method::Oracle,
            DcMethod::Corollary => Method::Corollary,
        };
        let report = to_c_report(&indices_by(g, method)?)?;
        *unsafe { out_ref(out, "report output") }? = report;
        Ok(())
    })
}

/// Runs the full property check. `passed` is false when any check fails; the
/// reason is then available from [`dc_last_error_message`].
///
/// # Safety
/// `g` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_verify(g: *const DcGraph, passed: *mut bool) -> DcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let v = verify(g)?;
        if let Some(reason) = &v.reason {
            set_last_error(reason.clone());
        }
        *unsafe { out_ref(passed, "output flag") }? = v.passed;
        Ok(())
    })
}

/// Maximal elements of `len` labels of dimension `n`, sorted.
///
/// # Safety
/// `labels` must be readable for `len` words, `buf` writable for `cap`
/// words, `written` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_maximal_antichain(
    n: u32,
    labels: *const u64,
    len: usize,
    buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> DcStatus {
    guard(|| {
        let labels = unsafe { input_slice(labels, len, "labels") }?
            .iter()
            .map(|&b| VertexLabel::new(b, n))
            .collect::<Result<Vec<_>, _>>()?;
        let max: Vec<u64> = maximal_antichain(&labels)
            .iter()
            .map(|l| l.bits())
            .collect();
        unsafe { copy_out(&max, buf, cap, written) }
    })
}

/// `F_k` with `F_0 = 0`; [`DcStatus::Overflow`] past `F_93`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_fibonacci_number(k: u32, out: *mut u64) -> DcStatus {
    guard(|| {
        let value = fibonacci_number(k)?;
        *unsafe { out_ref(out, "output") }? = value;
        Ok(())
    })
}

/// Length in bytes of the last error message on this thread, excluding the
/// terminating NUL; 0 when there is none.
#[no_mangle]
pub extern "C" fn dc_last_error_length() -> usize {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(0, |s| s.as_bytes().len()))
}

/// Copies the last error message, NUL-terminated and truncated to `cap`
/// bytes. Returns the number of bytes written excluding the NUL.
///
/// # Safety
/// `buf` must be writable for `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn dc_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    if buf.is_null() || cap == 0 {
        return 0;
    }
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_ref().map_or(&[][..], |s| s.as_bytes());
        let n = bytes.len().min(cap - 1);
        unsafe {
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        n
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn dc_status_string(status: DcStatus) -> *const c_char {
    let s: &'static CStr = match status {
        DcStatus::Ok => c"ok",
        DcStatus::NullPointer => c"null pointer",
        DcStatus::InvalidArgument => c"invalid argument",
        DcStatus::SizeLimit => c"size limit exceeded",
        DcStatus::Parse => c"parse error",
        DcStatus::Disconnected => c"graph is disconnected",
        DcStatus::NotIsometric => c"labeling is not isometric",
        DcStatus::NotDaisy => c"not a daisy-cube embedding",
        DcStatus::Disagreement => c"index methods disagree",
        DcStatus::Overflow => c"integer overflow",
        DcStatus::BufferTooSmall => c"buffer too small",
        DcStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}
