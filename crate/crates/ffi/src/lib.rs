//! C ABI over `degseq`.
//!
//! Every fallible function returns a [`DegseqStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`degseq_last_error_message`]. Handles are opaque and must be
//! released with the matching `_free` function; strings returned by the
//! library are released with [`degseq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use degseq::oracle::verify_all;
use degseq::report::{analysis_to_json, verification_to_json};
use degseq::{AnalysisReport, DegreeSequence, Edge, Error, LabeledGraph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegseqStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidSequence = 3,
    NotGraphic = 4,
    LabelOutOfRange = 5,
    TooLarge = 6,
    SamplerStuck = 7,
    Utf8 = 8,
    Panic = 9,
    Other = 10,
}

/// A validated non-increasing degree sequence.
pub struct DegseqSequence {
    inner: DegreeSequence,
}

/// Forced and forbidden edges of one sequence.
pub struct DegseqAnalysis {
    report: AnalysisReport,
    forced: Vec<Edge>,
    forbidden: Vec<Edge>,
}

/// A labeled simple graph on vertices `1..=n`.
pub struct DegseqGraph {
    graph: LabeledGraph,
    edges: Vec<Edge>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> DegseqStatus {
    match e {
        Error::Parse { .. } => DegseqStatus::Parse,
        Error::EmptySequence | Error::NotNonIncreasing { .. } | Error::DegreeOutOfRange { .. } => {
            DegseqStatus::InvalidSequence
        }
        Error::NotGraphic => DegseqStatus::NotGraphic,
        Error::IndexOutOfRange { .. } | Error::InvalidEdge(..) => DegseqStatus::LabelOutOfRange,
        Error::TooLarge { .. } => DegseqStatus::TooLarge,
        Error::SamplerStuck { .. } => DegseqStatus::SamplerStuck,
        _ => DegseqStatus::Other,
    }
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), (DegseqStatus, String)>) -> DegseqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            DegseqStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DegseqStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (DegseqStatus, String)>;
}

impl<T> IntoFfi<T> for degseq::Result<T> {
    fn ffi(self) -> Result<T, (DegseqStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null(what: &str) -> (DegseqStatus, String) {
    (DegseqStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (DegseqStatus, String)> {
    // SAFETY: caller guarantees `p` is null or a live handle from this library.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (DegseqStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, per the caller contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn into_c_string(text: String) -> *mut c_char {
    CString::new(text)
        .expect("JSON contains no nul bytes")
        .into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn degseq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn degseq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses comma- or space-separated degrees.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_sequence_parse(
    text: *const c_char,
    out: *mut *mut DegseqSequence,
) -> DegseqStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: caller passes a NUL-terminated string.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| (DegseqStatus::Utf8, e.to_string()))?;
        let inner: DegreeSequence = text.parse().ffi()?;
        unsafe {
            write(
                out,
                Box::into_raw(Box::new(DegseqSequence { inner })),
                "out",
            )
        }
    })
}

/// Builds a sequence from `len` non-increasing degrees.
///
/// # Safety
/// `values` must point to `len` readable entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_sequence_from_array(
    values: *const usize,
    len: usize,
    out: *mut *mut DegseqSequence,
) -> DegseqStatus {
    guard(|| {
        if values.is_null() && len > 0 {
            return Err(null("values"));
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            // SAFETY: caller guarantees `len` readable entries.
            unsafe { std::slice::from_raw_parts(values, len) }
        };
        let inner = DegreeSequence::new(slice.to_vec()).ffi()?;
        unsafe {
            write(
                out,
                Box::into_raw(Box::new(DegseqSequence { inner })),
                "out",
            )
        }
    })
}

/// # Safety
/// `seq` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn degseq_sequence_free(seq: *mut DegseqSequence) {
    if !seq.is_null() {
        // SAFETY: created by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(seq) });
    }
}

/// Number of entries; 0 for a null handle.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn degseq_sequence_len(seq: *const DegseqSequence) -> usize {
    unsafe { seq.as_ref() }.map_or(0, |s| s.inner.len())
}

/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_sequence_is_graphic(
    seq: *const DegseqSequence,
    out: *mut bool,
) -> DegseqStatus {
    guard(|| {
        let s = unsafe { deref(seq, "seq") }?;
        unsafe { write(out, s.inner.is_graphic(), "out") }
    })
}

/// Whether edge `(i, j)` (1-based labels) is in every realization.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_is_forced(
    seq: *const DegseqSequence,
    i: usize,
    j: usize,
    out: *mut bool,
) -> DegseqStatus {
    guard(|| {
        let s = unsafe { deref(seq, "seq") }?;
        let v = degseq::is_forced(&s.inner, i, j).ffi()?;
        unsafe { write(out, v, "out") }
    })
}

/// Whether edge `(i, j)` (1-based labels) is in no realization.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_is_forbidden(
    seq: *const DegseqSequence,
    i: usize,
    j: usize,
    out: *mut bool,
) -> DegseqStatus {
    guard(|| {
        let s = unsafe { deref(seq, "seq") }?;
        let v = degseq::is_forbidden(&s.inner, i, j).ffi()?;
        unsafe { write(out, v, "out") }
    })
}

/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_analyze(
    seq: *const DegseqSequence,
    out: *mut *mut DegseqAnalysis,
) -> DegseqStatus {
    guard(|| {
        let s = unsafe { deref(seq, "seq") }?;
        let report = degseq::analyze(&s.inner).ffi()?;
        let analysis = DegseqAnalysis {
            forced: report.forced.edges().collect(),
            forbidden: report.forbidden.edges().collect(),
            report,
        };
        unsafe { write(out, Box::into_raw(Box::new(analysis)), "out") }
    })
}

/// # Safety
/// `analysis` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_free(analysis: *mut DegseqAnalysis) {
    if !analysis.is_null() {
        // SAFETY: created by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(analysis) });
    }
}

/// # Safety
/// `analysis` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_forced_count(analysis: *const DegseqAnalysis) -> usize {
    unsafe { analysis.as_ref() }.map_or(0, |a| a.forced.len())
}

/// # Safety
/// `analysis` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_forbidden_count(analysis: *const DegseqAnalysis) -> usize {
    unsafe { analysis.as_ref() }.map_or(0, |a| a.forbidden.len())
}

unsafe fn edge_at(
    edges: &[Edge],
    index: usize,
    i: *mut usize,
    j: *mut usize,
) -> Result<(), (DegseqStatus, String)> {
    let e = edges.get(index).ok_or_else(|| {
        (
            DegseqStatus::LabelOutOfRange,
            format!("edge index {index} out of range (count {})", edges.len()),
        )
    })?;
    unsafe {
        write(i, e.i(), "out_i")?;
        write(j, e.j(), "out_j")
    }
}

/// The `index`-th forced edge in lexicographic order.
///
/// # Safety
/// `analysis` must be a live handle; `out_i` and `out_j` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_forced_edge(
    analysis: *const DegseqAnalysis,
    index: usize,
    out_i: *mut usize,
    out_j: *mut usize,
) -> DegseqStatus {
    guard(|| {
        let a = unsafe { deref(analysis, "analysis") }?;
        unsafe { edge_at(&a.forced, index, out_i, out_j) }
    })
}

/// The `index`-th forbidden edge in lexicographic order.
///
/// # Safety
/// `analysis` must be a live handle; `out_i` and `out_j` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_forbidden_edge(
    analysis: *const DegseqAnalysis,
    index: usize,
    out_i: *mut usize,
    out_j: *mut usize,
) -> DegseqStatus {
    guard(|| {
        let a = unsafe { deref(analysis, "analysis") }?;
        unsafe { edge_at(&a.forbidden, index, out_i, out_j) }
    })
}

/// True iff the sequence has a single realization.
///
/// # Safety
/// `analysis` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_is_threshold(analysis: *const DegseqAnalysis) -> bool {
    unsafe { analysis.as_ref() }.is_some_and(|a| a.report.is_threshold_sequence)
}

/// # Safety
/// `analysis` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_max_forced_clique(
    analysis: *const DegseqAnalysis,
) -> usize {
    unsafe { analysis.as_ref() }.map_or(0, |a| a.report.max_forced_clique)
}

/// The analysis as a JSON document; free with `degseq_string_free`.
///
/// # Safety
/// `analysis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_analysis_to_json(
    analysis: *const DegseqAnalysis,
    out: *mut *mut c_char,
) -> DegseqStatus {
    guard(|| {
        let a = unsafe { deref(analysis, "analysis") }?;
        unsafe { write(out, into_c_string(analysis_to_json(&a.report)), "out") }
    })
}

fn graph_handle(graph: LabeledGraph) -> *mut DegseqGraph {
    let edges = graph.edges().collect();
    Box::into_raw(Box::new(DegseqGraph { graph, edges }))
}

/// One realization by sequential importance sampling.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_sample_sis(
    seq: *const DegseqSequence,
    seed: u64,
    out: *mut *mut DegseqGraph,
) -> DegseqStatus {
    guard(|| {
        let s = unsafe { deref(seq, "seq") }?;
        let g = degseq::sis_sample(&s.inner, seed).ffi()?;
        unsafe { write(out, graph_handle(g), "out") }
    })
}

/// One realization after `steps` steps of the 2-switch chain.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_sample_mcmc(
    seq: *const DegseqSequence,
    steps: u64,
    seed: u64,
    out: *mut *mut DegseqGraph,
) -> DegseqStatus {
    guard(|| {
        let s = unsafe { deref(seq, "seq") }?;
        let g = degseq::mcmc_sample(&s.inner, steps, seed).ffi()?;
        unsafe { write(out, graph_handle(g), "out") }
    })
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn degseq_graph_free(graph: *mut DegseqGraph) {
    if !graph.is_null() {
        // SAFETY: created by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn degseq_graph_vertex_count(graph: *const DegseqGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.graph.n())
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn degseq_graph_edge_count(graph: *const DegseqGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.edges.len())
}

/// The `index`-th edge in lexicographic order.
///
/// # Safety
/// `graph` must be a live handle; `out_i` and `out_j` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_graph_edge(
    graph: *const DegseqGraph,
    index: usize,
    out_i: *mut usize,
    out_j: *mut usize,
) -> DegseqStatus {
    guard(|| {
        let g = unsafe { deref(graph, "graph") }?;
        unsafe { edge_at(&g.edges, index, out_i, out_j) }
    })
}

/// Runs the exhaustive sweep for length `n` (at most 7) on `jobs` threads
/// (0 for all cores). Writes the JSON report and whether every check passed.
///
/// # Safety
/// `out_json` and `out_all_pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn degseq_verify(
    n: usize,
    jobs: usize,
    out_json: *mut *mut c_char,
    out_all_pass: *mut bool,
) -> DegseqStatus {
    guard(|| {
        if out_json.is_null() || out_all_pass.is_null() {
            return Err(null("output pointer"));
        }
        let report = verify_all(n, jobs).ffi()?;
        let json = verification_to_json(&report);
        unsafe {
            write(out_all_pass, report.all_passed(), "out_all_pass")?;
            write(out_json, into_c_string(json), "out_json")
        }
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn degseq_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}
