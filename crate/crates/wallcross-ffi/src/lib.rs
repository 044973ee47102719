//! C ABI over the wallcross library.
//!
//! Conventions:
//! - Quivers are opaque handles created by [`wc_quiver_parse`] and released
//!   by [`wc_quiver_free`].
//! - Every fallible call returns a [`WcStatus`]; on failure the thread-local
//!   message from [`wc_last_error`] describes the problem.
//! - Structured results come back as JSON strings allocated by this
//!   library; release them with [`wc_string_free`]. All numbers inside the
//!   JSON are exact (integers, or rationals as `"n/d"` strings).
//! - Dimension vectors are `uint32_t` arrays aligned with the quiver's
//!   canonical (sorted) vertex order; see `wc_quiver_vertices`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use wallcross::classify::{
    classify_extended_flip, classify_symmetric_flop, classify_two_vertex,
    grassmannian_model_dims, local_model_dims,
};
use wallcross::error::Error;
use wallcross::formats::{ExtendedSpecFile, QuiverFile};
use wallcross::presets::classify_irreducible_wall;
use wallcross::quiver::{DimVector, Quiver};
use wallcross::series::mac_mahon;
use wallcross::simples::has_simple;
use wallcross::stability::enumerate_walls;

/// Status codes shared with the CLI exit-code contract.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WcStatus {
    /// Success.
    Ok = 0,
    /// Malformed input (parse failure, index mismatch, refused budget).
    InputError = 2,
    /// A theorem precondition is violated.
    PreconditionError = 3,
    /// A pointer argument was null or not valid UTF-8.
    PointerError = 10,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let cstring = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn status_of(err: &Error) -> WcStatus {
    match err.exit_code() {
        3 => WcStatus::PreconditionError,
        _ => WcStatus::InputError,
    }
}

fn fail(err: Error) -> WcStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

fn pointer_error(what: &str) -> WcStatus {
    set_error(format!("{what} pointer was null or not valid UTF-8"));
    WcStatus::PointerError
}

/// Opaque quiver handle.
pub struct WcQuiver {
    inner: Quiver,
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, WcStatus> {
    if ptr.is_null() {
        return Err(pointer_error(what));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| pointer_error(what))
}

unsafe fn read_dims(
    quiver: &Quiver,
    entries: *const u32,
    len: usize,
) -> Result<DimVector, WcStatus> {
    if entries.is_null() {
        return Err(pointer_error("dimension vector"));
    }
    let slice = std::slice::from_raw_parts(entries, len);
    let m = DimVector::new(slice.to_vec());
    if m.len() != quiver.vertex_count() {
        set_error(format!(
            "dimension vector has {} entries but the quiver has {} vertices",
            m.len(),
            quiver.vertex_count()
        ));
        return Err(WcStatus::InputError);
    }
    Ok(m)
}

fn json_out(value: serde_json::Value, out: *mut *mut c_char) -> WcStatus {
    let text = serde_json::to_string(&value).expect("JSON serializes");
    let cstring = CString::new(text).expect("JSON has no interior NUL");
    unsafe { *out = cstring.into_raw() };
    WcStatus::Ok
}

/// Message for the most recent failure on this thread. Valid until the
/// next failing call on the same thread; never free this pointer.
#[no_mangle]
pub extern "C" fn wc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |msg| msg.as_ptr())
    })
}

/// Frees a string allocated by this library.
///
/// # Safety
/// `s` must be a pointer previously returned through a `char**` output of
/// this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a quiver from its JSON record `{"vertices": [...], "edges": [[src, tgt], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wc_quiver_parse(json: *const c_char, out: *mut *mut WcQuiver) -> WcStatus {
    if out.is_null() {
        return pointer_error("output");
    }
    let text = match read_str(json, "quiver JSON") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let file: QuiverFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(e) => {
            set_error(format!("invalid quiver JSON: {e}"));
            return WcStatus::InputError;
        }
    };
    match file.to_quiver() {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(WcQuiver { inner }));
            WcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Releases a quiver handle.
///
/// # Safety
/// `q` must come from [`wc_quiver_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wc_quiver_free(q: *mut WcQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of vertices, or -1 on a null handle.
///
/// # Safety
/// `q` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn wc_quiver_vertex_count(q: *const WcQuiver) -> i64 {
    if q.is_null() {
        return -1;
    }
    (*q).inner.vertex_count() as i64
}

/// Vertex ids in canonical order, as a JSON array of strings.
///
/// # Safety
/// `q` must be a live handle; `out` receives a string to release with
/// [`wc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn wc_quiver_vertices(
    q: *const WcQuiver,
    out: *mut *mut c_char,
) -> WcStatus {
    if q.is_null() || out.is_null() {
        return pointer_error("quiver or output");
    }
    json_out(serde_json::json!((*q).inner.vertices()), out)
}

/// Whether the edge-count matrix is symmetric.
///
/// # Safety
/// `q` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wc_quiver_is_symmetric(q: *const WcQuiver, out: *mut bool) -> WcStatus {
    if q.is_null() || out.is_null() {
        return pointer_error("quiver or output");
    }
    *out = (*q).inner.is_symmetric();
    WcStatus::Ok
}

/// Euler pairing of two dimension vectors.
///
/// # Safety
/// `m` and `m2` must point to `len` entries each; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wc_euler_pairing(
    q: *const WcQuiver,
    m: *const u32,
    m2: *const u32,
    len: usize,
    out: *mut i64,
) -> WcStatus {
    if q.is_null() || out.is_null() {
        return pointer_error("quiver or output");
    }
    let quiver = &(*q).inner;
    let m = match read_dims(quiver, m, len) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let m2 = match read_dims(quiver, m2, len) {
        Ok(v) => v,
        Err(s) => return s,
    };
    match quiver.euler_pairing(&m, &m2) {
        Ok(value) => {
            *out = value;
            WcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Number of walls of a primitive dimension vector.
///
/// # Safety
/// `m` must point to `len` entries; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wc_wall_count(m: *const u32, len: usize, out: *mut u64) -> WcStatus {
    if m.is_null() || out.is_null() {
        return pointer_error("dimension vector or output");
    }
    let slice = std::slice::from_raw_parts(m, len);
    match enumerate_walls(&DimVector::new(slice.to_vec())) {
        Ok(walls) => {
            *out = walls.len() as u64;
            WcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Simple-representation existence with its certificate, as JSON.
///
/// # Safety
/// `q` live handle, `m` an array of `len` entries, `out_exists` and
/// `out_json` valid; release the string with [`wc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn wc_has_simple(
    q: *const WcQuiver,
    m: *const u32,
    len: usize,
    out_exists: *mut bool,
    out_json: *mut *mut c_char,
) -> WcStatus {
    if q.is_null() || out_exists.is_null() || out_json.is_null() {
        return pointer_error("quiver or output");
    }
    let quiver = &(*q).inner;
    let m = match read_dims(quiver, m, len) {
        Ok(v) => v,
        Err(s) => return s,
    };
    match has_simple(quiver, &m) {
        Ok(verdict) => {
            *out_exists = verdict.exists;
            json_out(serde_json::to_value(&verdict).expect("verdict serializes"), out_json)
        }
        Err(e) => fail(e),
    }
}

/// Flop classification of a symmetric quiver at a primitive vector,
/// as JSON.
///
/// # Safety
/// Same contracts as [`wc_has_simple`].
#[no_mangle]
pub unsafe extern "C" fn wc_classify_symmetric_flop(
    q: *const WcQuiver,
    m: *const u32,
    len: usize,
    out_json: *mut *mut c_char,
) -> WcStatus {
    if q.is_null() || out_json.is_null() {
        return pointer_error("quiver or output");
    }
    let quiver = &(*q).inner;
    let m = match read_dims(quiver, m, len) {
        Ok(v) => v,
        Err(s) => return s,
    };
    match classify_symmetric_flop(quiver, &m) {
        Ok(class) => json_out(serde_json::to_value(&class).expect("class serializes"), out_json),
        Err(e) => fail(e),
    }
}

/// Flip/MFS classification of an extended quiver described by the JSON
/// record `{"base": {...}, "a": {...}, "b": {...}, "c": n}` at the base
/// dimension vector `m`.
///
/// # Safety
/// `spec_json` NUL-terminated; `m` points to `len` entries; `out_json`
/// valid.
#[no_mangle]
pub unsafe extern "C" fn wc_classify_extended_flip(
    spec_json: *const c_char,
    m: *const u32,
    len: usize,
    out_json: *mut *mut c_char,
) -> WcStatus {
    if out_json.is_null() {
        return pointer_error("output");
    }
    let text = match read_str(spec_json, "spec JSON") {
        Ok(t) => t,
        Err(s) => return s,
    };
    let file: ExtendedSpecFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(e) => {
            set_error(format!("invalid spec JSON: {e}"));
            return WcStatus::InputError;
        }
    };
    let spec = match file.to_spec() {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let m = match read_dims(&spec.base, m, len) {
        Ok(v) => v,
        Err(s) => return s,
    };
    match classify_extended_flip(&spec, &m) {
        Ok(class) => json_out(serde_json::to_value(&class).expect("class serializes"), out_json),
        Err(e) => fail(e),
    }
}

/// Two-vertex local model classification with side dimensions, as JSON.
///
/// # Safety
/// `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wc_classify_two_vertex(
    a: u32,
    b: u32,
    c: u32,
    out_json: *mut *mut c_char,
) -> WcStatus {
    if out_json.is_null() {
        return pointer_error("output");
    }
    let class = classify_two_vertex(a, b);
    let dims = local_model_dims(a, b, c);
    let mut value = serde_json::to_value(&class).expect("class serializes");
    value["dims"] = serde_json::json!([dims.0, dims.1]);
    json_out(value, out_json)
}

/// Irreducible-class wall classification by (n, h1), as JSON.
///
/// # Safety
/// `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wc_classify_irreducible(
    n: i64,
    h1: u32,
    out_json: *mut *mut c_char,
) -> WcStatus {
    if out_json.is_null() {
        return pointer_error("output");
    }
    let class = classify_irreducible_wall(n, h1);
    json_out(serde_json::to_value(&class).expect("class serializes"), out_json)
}

/// Dimensions of the Grassmannian local model; empty sides are JSON null.
///
/// # Safety
/// `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wc_grassmannian_dims(
    a1: u32,
    b1: u32,
    c: u32,
    m: u32,
    out_json: *mut *mut c_char,
) -> WcStatus {
    if out_json.is_null() {
        return pointer_error("output");
    }
    match grassmannian_model_dims(a1, b1, c, m) {
        Ok(dims) => json_out(serde_json::json!([dims.0, dims.1]), out_json),
        Err(e) => fail(e),
    }
}

/// MacMahon coefficients for exponent `e` up to `q^qmax`, as a JSON array
/// of decimal strings.
///
/// # Safety
/// `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wc_macmahon(e: i64, qmax: u32, out_json: *mut *mut c_char) -> WcStatus {
    if out_json.is_null() {
        return pointer_error("output");
    }
    let series = mac_mahon(e, qmax);
    let coefficients: Vec<String> = (0..=qmax as i64)
        .map(|n| wallcross::arith::rat_display(&series.coeff(&vec![], n)))
        .collect();
    json_out(serde_json::json!(coefficients), out_json)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    fn cstr(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    unsafe fn take_string(ptr: *mut c_char) -> String {
        let s = CStr::from_ptr(ptr).to_str().unwrap().to_owned();
        wc_string_free(ptr);
        s
    }

    #[test]
    fn quiver_lifecycle_and_pairing() {
        unsafe {
            let json = cstr(r#"{"vertices": ["1", "2"], "edges": [["1","2"],["1","2"],["1","2"]]}"#);
            let mut q: *mut WcQuiver = ptr::null_mut();
            assert_eq!(wc_quiver_parse(json.as_ptr(), &mut q), WcStatus::Ok);
            assert_eq!(wc_quiver_vertex_count(q), 2);

            let mut sym = true;
            assert_eq!(wc_quiver_is_symmetric(q, &mut sym), WcStatus::Ok);
            assert!(!sym);

            let mut names: *mut c_char = ptr::null_mut();
            assert_eq!(wc_quiver_vertices(q, &mut names), WcStatus::Ok);
            assert_eq!(take_string(names), r#"["1","2"]"#);

            let m = [1u32, 1];
            let mut pairing = 0i64;
            assert_eq!(
                wc_euler_pairing(q, m.as_ptr(), m.as_ptr(), 2, &mut pairing),
                WcStatus::Ok
            );
            assert_eq!(pairing, -1);

            // length mismatch is an input error with a message
            let bad = [1u32];
            assert_eq!(
                wc_euler_pairing(q, bad.as_ptr(), bad.as_ptr(), 1, &mut pairing),
                WcStatus::InputError
            );
            let msg = CStr::from_ptr(wc_last_error()).to_str().unwrap();
            assert!(msg.contains("entries"));

            wc_quiver_free(q);
        }
    }

    #[test]
    fn parse_rejections() {
        unsafe {
            let mut q: *mut WcQuiver = ptr::null_mut();
            let broken = cstr("{");
            assert_eq!(wc_quiver_parse(broken.as_ptr(), &mut q), WcStatus::InputError);
            let unknown = cstr(r#"{"vertices": ["1"], "edges": [["1","9"]]}"#);
            assert_eq!(wc_quiver_parse(unknown.as_ptr(), &mut q), WcStatus::InputError);
            assert_eq!(wc_quiver_parse(ptr::null(), &mut q), WcStatus::PointerError);
        }
    }

    #[test]
    fn wall_count_and_simple_verdict() {
        unsafe {
            let m = [2u32, 1];
            let mut count = 0u64;
            assert_eq!(wc_wall_count(m.as_ptr(), 2, &mut count), WcStatus::Ok);
            assert_eq!(count, 2);

            // non-primitive refused
            let bad = [2u32, 2];
            assert_eq!(wc_wall_count(bad.as_ptr(), 2, &mut count), WcStatus::InputError);

            let json = cstr(r#"{"vertices": ["1", "2"], "edges": [["1","2"],["2","1"]]}"#);
            let mut q: *mut WcQuiver = ptr::null_mut();
            assert_eq!(wc_quiver_parse(json.as_ptr(), &mut q), WcStatus::Ok);
            let m = [1u32, 1];
            let mut exists = false;
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(
                wc_has_simple(q, m.as_ptr(), 2, &mut exists, &mut out),
                WcStatus::Ok
            );
            assert!(exists);
            let text = take_string(out);
            assert!(text.contains("type_i"));
            wc_quiver_free(q);
        }
    }

    #[test]
    fn classification_surface() {
        unsafe {
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(wc_classify_two_vertex(4, 1, 0, &mut out), WcStatus::Ok);
            let text = take_string(out);
            assert!(text.contains("DivisorialContraction"));

            assert_eq!(wc_classify_irreducible(0, 2, &mut out), WcStatus::Ok);
            let text = take_string(out);
            assert!(text.contains("GeneralizedFlop"));

            let spec = cstr(
                r#"{"base": {"vertices": ["1"], "edges": []}, "a": {"1": 4}, "b": {"1": 2}, "c": 0}"#,
            );
            let m = [3u32];
            assert_eq!(
                wc_classify_extended_flip(spec.as_ptr(), m.as_ptr(), 1, &mut out),
                WcStatus::Ok
            );
            let text = take_string(out);
            assert!(text.contains("GeneralizedMfs"));

            // balanced framing: precondition status
            let balanced = cstr(
                r#"{"base": {"vertices": ["1"], "edges": []}, "a": {"1": 2}, "b": {"1": 2}, "c": 0}"#,
            );
            let m = [1u32];
            assert_eq!(
                wc_classify_extended_flip(balanced.as_ptr(), m.as_ptr(), 1, &mut out),
                WcStatus::PreconditionError
            );

            assert_eq!(wc_grassmannian_dims(4, 2, 0, 3, &mut out), WcStatus::Ok);
            let text = take_string(out);
            assert_eq!(text, "[9,null]");
        }
    }

    #[test]
    fn flop_classification_and_macmahon() {
        unsafe {
            let json = cstr(r#"{"vertices": ["1", "2"], "edges": [["1","2"],["2","1"]]}"#);
            let mut q: *mut WcQuiver = ptr::null_mut();
            assert_eq!(wc_quiver_parse(json.as_ptr(), &mut q), WcStatus::Ok);
            let m = [1u32, 1];
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(
                wc_classify_symmetric_flop(q, m.as_ptr(), 2, &mut out),
                WcStatus::Ok
            );
            let text = take_string(out);
            assert!(text.contains("GeneralizedFlop"));
            wc_quiver_free(q);

            assert_eq!(wc_macmahon(1, 9, &mut out), WcStatus::Ok);
            let text = take_string(out);
            assert_eq!(
                text,
                r#"["1","1","3","6","13","24","48","86","160","282"]"#
            );
        }
    }
}
