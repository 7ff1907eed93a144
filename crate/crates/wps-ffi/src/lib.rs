//! C ABI for the classification toolkit.
//!
//! Conventions:
//!
//! - Every fallible call returns a [`WpsStatus`] code; `WPS_STATUS_OK`
//!   means success. On failure, [`wps_last_error`] returns a
//!   thread-local, NUL-terminated description of the most recent error.
//! - Results cross the boundary either through the opaque
//!   [`WpsRecord`] handle (freed with [`wps_record_free`]) or as
//!   heap-allocated JSON strings (freed with [`wps_string_free`]).
//!   JSON payloads have the same shape as the `wps` CLI output.
//! - All pointers must be non-null unless documented otherwise; null
//!   arguments are reported as `WPS_STATUS_NULL_ARGUMENT`, never
//!   dereferenced.
//! - No Rust panic crosses the boundary: internal panics are caught
//!   and surfaced as `WPS_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use wps::enumerate::{enumerate_index, reproduce_list, EnumerationQuery};
use wps::obstructions::verify_theorem_bl;
use wps::record::ClassifiedRecord;
use wps::weights::WeightSystem;
use wps::WpsError;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WpsStatus {
    /// The call succeeded.
    Ok = 0,
    /// Malformed input: nonpositive weight or degree, bad range.
    InvalidInput = 1,
    /// Structurally valid input outside the operation's domain.
    Domain = 2,
    /// Classification data could not be loaded.
    Data = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
    /// A string argument was not valid UTF-8.
    Utf8 = 5,
    /// An internal invariant failed; see wps_last_error.
    Internal = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &WpsError) -> WpsStatus {
    match err {
        WpsError::InvalidInput(_) => WpsStatus::InvalidInput,
        WpsError::Domain(_) => WpsStatus::Domain,
        WpsError::Data(_) => WpsStatus::Data,
    }
}

/// Run `body`, mapping library errors and panics to status codes.
fn guarded(body: impl FnOnce() -> Result<WpsStatus, WpsError>) -> WpsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(err)) => {
            set_error(&err.to_string());
            status_of(&err)
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".to_string());
            set_error(&message);
            WpsStatus::Internal
        }
    }
}

/// Hand a JSON string to the caller through `out`.
fn emit_json<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> Result<WpsStatus, WpsError> {
    let text = serde_json::to_string(value)
        .map_err(|e| WpsError::Data(format!("serializing result: {e}")))?;
    let c = CString::new(text).map_err(|e| WpsError::Data(format!("embedded NUL: {e}")))?;
    unsafe { *out = c.into_raw() };
    Ok(WpsStatus::Ok)
}

/// Opaque classification record for one weight system.
pub struct WpsRecord {
    record: ClassifiedRecord,
}

/// The crate version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn wps_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Description of the most recent error on this thread. The pointer is
/// valid until the next failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn wps_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Build the full classification record for `(weights; degree)` and
/// store the handle in `out_record`. The caller owns the handle and
/// must release it with [`wps_record_free`].
///
/// # Safety
///
/// `weights` must point to four readable `uint64_t` values and
/// `out_record` must be a valid location to write a pointer to.
#[no_mangle]
pub unsafe extern "C" fn wps_record_build(
    weights: *const u64,
    degree: u64,
    out_record: *mut *mut WpsRecord,
) -> WpsStatus {
    if weights.is_null() || out_record.is_null() {
        set_error("null argument");
        return WpsStatus::NullArgument;
    }
    let raw: [u64; 4] = std::slice::from_raw_parts(weights, 4).try_into().unwrap();
    guarded(|| {
        let ws = WeightSystem::canonicalize(raw, degree)?;
        let record = ClassifiedRecord::build(&ws)?;
        unsafe { *out_record = Box::into_raw(Box::new(WpsRecord { record })) };
        Ok(WpsStatus::Ok)
    })
}

/// Release a record handle. Null is ignored.
///
/// # Safety
///
/// `record` must be a pointer previously returned by
/// [`wps_record_build`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wps_record_free(record: *mut WpsRecord) {
    if !record.is_null() {
        drop(Box::from_raw(record));
    }
}

/// Fano index `a0+a1+a2+a3-d` of the record's weight system.
///
/// # Safety
///
/// `record` must be a live handle from [`wps_record_build`].
#[no_mangle]
pub unsafe extern "C" fn wps_record_index(record: *const WpsRecord) -> i64 {
    (*record).record.index
}

/// True when the recorded system is well-formed.
///
/// # Safety
///
/// `record` must be a live handle from [`wps_record_build`].
#[no_mangle]
pub unsafe extern "C" fn wps_record_well_formed(record: *const WpsRecord) -> bool {
    (*record).record.well_formed.verdict
}

/// True when the generic member is quasismooth.
///
/// # Safety
///
/// `record` must be a live handle from [`wps_record_build`].
#[no_mangle]
pub unsafe extern "C" fn wps_record_quasismooth(record: *const WpsRecord) -> bool {
    (*record).record.quasismooth.verdict
}

/// True when the degree equals one of the weights (a linear cone).
///
/// # Safety
///
/// `record` must be a live handle from [`wps_record_build`].
#[no_mangle]
pub unsafe extern "C" fn wps_record_degenerate(record: *const WpsRecord) -> bool {
    (*record).record.degenerate
}

/// True when the record describes a del Pezzo surface: well-formed,
/// quasismooth, positive index.
///
/// # Safety
///
/// `record` must be a live handle from [`wps_record_build`].
#[no_mangle]
pub unsafe extern "C" fn wps_record_is_del_pezzo(record: *const WpsRecord) -> bool {
    (*record).record.is_del_pezzo()
}

/// Serialize the whole record as JSON into `out_json` (caller frees
/// with [`wps_string_free`]).
///
/// # Safety
///
/// `record` must be a live handle and `out_json` a valid location to
/// write a pointer to.
#[no_mangle]
pub unsafe extern "C" fn wps_record_to_json(
    record: *const WpsRecord,
    out_json: *mut *mut c_char,
) -> WpsStatus {
    if record.is_null() || out_json.is_null() {
        set_error("null argument");
        return WpsStatus::NullArgument;
    }
    guarded(|| emit_json(&(*record).record, out_json))
}

/// Classify one quintuple and return the record as JSON in one step.
///
/// # Safety
///
/// `weights` must point to four readable `uint64_t` values and
/// `out_json` must be a valid location to write a pointer to.
#[no_mangle]
pub unsafe extern "C" fn wps_classify_json(
    weights: *const u64,
    degree: u64,
    out_json: *mut *mut c_char,
) -> WpsStatus {
    if weights.is_null() || out_json.is_null() {
        set_error("null argument");
        return WpsStatus::NullArgument;
    }
    let raw: [u64; 4] = std::slice::from_raw_parts(weights, 4).try_into().unwrap();
    guarded(|| {
        let ws = WeightSystem::canonicalize(raw, degree)?;
        let record = ClassifiedRecord::build(&ws)?;
        emit_json(&record, out_json)
    })
}

/// Enumerate every well-formed quasismooth system with the given index
/// and weights up to `max_weight`; returns a JSON array of records.
///
/// # Safety
///
/// `out_json` must be a valid location to write a pointer to.
#[no_mangle]
pub unsafe extern "C" fn wps_enumerate_json(
    index: i64,
    max_weight: u64,
    out_json: *mut *mut c_char,
) -> WpsStatus {
    if out_json.is_null() {
        set_error("null argument");
        return WpsStatus::NullArgument;
    }
    guarded(|| {
        let found = enumerate_index(&EnumerationQuery::all(index, max_weight))?;
        let records = found
            .iter()
            .map(ClassifiedRecord::build)
            .collect::<Result<Vec<_>, _>>()?;
        emit_json(&records, out_json)
    })
}

/// Diff a stored catalog (`thm-kollar-johnson`, `thm-i2`, `thm-bgn`,
/// `table-1`, or `table-2`) against a fresh enumeration. On success,
/// `out_clean` reports whether the diff is empty and `out_json` holds
/// the full report.
///
/// # Safety
///
/// `source` must be a NUL-terminated string; `out_clean` and `out_json`
/// must be valid locations to write to.
#[no_mangle]
pub unsafe extern "C" fn wps_reproduce_json(
    source: *const c_char,
    max_weight: u64,
    out_clean: *mut bool,
    out_json: *mut *mut c_char,
) -> WpsStatus {
    if source.is_null() || out_clean.is_null() || out_json.is_null() {
        set_error("null argument");
        return WpsStatus::NullArgument;
    }
    let Ok(name) = CStr::from_ptr(source).to_str() else {
        set_error("source name is not valid UTF-8");
        return WpsStatus::Utf8;
    };
    let name = name.to_string();
    guarded(|| {
        let diff = reproduce_list(&name, max_weight)?;
        unsafe { *out_clean = diff.is_empty() };
        emit_json(&diff, out_json)
    })
}

/// Run the seeded Bishop-implies-Lichnerowicz sweep over tuple lengths
/// `n_lo..=n_hi`. On success, `out_clean` reports whether every sample
/// satisfied the implication and the defect inequality, and `out_json`
/// holds the tallies.
///
/// # Safety
///
/// `out_clean` and `out_json` must be valid locations to write to.
#[no_mangle]
pub unsafe extern "C" fn wps_verify_bl_json(
    n_lo: u32,
    n_hi: u32,
    samples: u64,
    seed: u64,
    out_clean: *mut bool,
    out_json: *mut *mut c_char,
) -> WpsStatus {
    if out_clean.is_null() || out_json.is_null() {
        set_error("null argument");
        return WpsStatus::NullArgument;
    }
    guarded(|| {
        if n_lo > n_hi {
            return Err(WpsError::InvalidInput(format!(
                "empty tuple-length range {n_lo}..{n_hi}"
            )));
        }
        let range: Vec<u32> = (n_lo..=n_hi).collect();
        let summary = verify_theorem_bl(&range, samples, seed)?;
        unsafe { *out_clean = summary.clean() };
        emit_json(&summary, out_json)
    })
}

/// Release a string returned by any `*_json` call. Null is ignored.
///
/// # Safety
///
/// `text` must be a pointer previously returned by this library, not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn wps_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
