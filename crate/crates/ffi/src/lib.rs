//! C ABI over the `eqsort` library.
//!
//! Every entry point returns an [`EqsortStatus`] (or a sentinel for the few
//! lookup functions) and never unwinds across the boundary: panics are caught
//! and reported as [`EqsortStatus::Panic`].
//!
//! Methods are addressed by their stable numeric codes; see
//! [`eqsort_method_from_name`] and [`eqsort_method_name`].
//!
//! Sorting already sorted or organ-pipe input drives the first-element-pivot
//! methods about `len` calls deep. Callers sorting such inputs at scale must
//! provide a large stack.

use std::ffi::{c_char, CStr};
use std::panic::{self, AssertUnwindSafe};
use std::slice;

use eqsort::bench::counting_cell;
use eqsort::datagen::{gen_keys, Domain, TotalF64};
use eqsort::{is_sorted, ByContext, CountingContext, MethodId, NaturalOrder, OpCounters};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqsortStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidMethod = 2,
    InvalidArgument = 3,
    SortCheckFailed = 4,
    Panic = 5,
}

/// Key domain of generated data, matching the `--domain` flag of the CLI.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqsortDomain {
    Int = 0,
    Float = 1,
    String = 2,
}

impl From<EqsortDomain> for Domain {
    fn from(d: EqsortDomain) -> Self {
        match d {
            EqsortDomain::Int => Domain::Int,
            EqsortDomain::Float => Domain::Float,
            EqsortDomain::String => Domain::Str,
        }
    }
}

/// Mean operation counts of one benchmark cell.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqsortCountingRow {
    pub method: u32,
    pub n: usize,
    pub k: u64,
    pub d: usize,
    pub mean_comparisons: f64,
    pub mean_swaps: f64,
}

/// Opaque accumulator of comparison and swap counts.
pub struct EqsortCounters {
    counters: OpCounters,
}

fn guard(f: impl FnOnce() -> EqsortStatus) -> EqsortStatus {
    panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or(EqsortStatus::Panic)
}

fn method(code: u32) -> Result<MethodId, EqsortStatus> {
    MethodId::from_code(code).ok_or(EqsortStatus::InvalidMethod)
}

/// # Safety
/// `data` must be valid for `len` reads and writes, or may be null when
/// `len` is zero.
unsafe fn slice_mut<'a, T>(data: *mut T, len: usize) -> Result<&'a mut [T], EqsortStatus> {
    if len == 0 {
        return Ok(&mut []);
    }
    if data.is_null() {
        return Err(EqsortStatus::NullPointer);
    }
    Ok(slice::from_raw_parts_mut(data, len))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Returns a static, NUL-terminated description of `status`.
#[no_mangle]
pub extern "C" fn eqsort_status_message(status: EqsortStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        EqsortStatus::Ok => c"ok",
        EqsortStatus::NullPointer => c"null pointer argument",
        EqsortStatus::InvalidMethod => c"unknown method",
        EqsortStatus::InvalidArgument => c"invalid argument",
        EqsortStatus::SortCheckFailed => c"sorted output check failed",
        EqsortStatus::Panic => c"internal panic",
    };
    msg.as_ptr()
}

/// Looks up a method code by name (`eqsort1`, `dualpivot`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out_code` writable.
#[no_mangle]
pub unsafe extern "C" fn eqsort_method_from_name(name: *const c_char, out_code: *mut u32) -> EqsortStatus {
    if name.is_null() || out_code.is_null() {
        return EqsortStatus::NullPointer;
    }
    guard(|| {
        let Ok(name) = CStr::from_ptr(name).to_str() else {
            return EqsortStatus::InvalidMethod;
        };
        match name.parse::<MethodId>() {
            Ok(m) => {
                *out_code = m.code();
                EqsortStatus::Ok
            }
            Err(_) => EqsortStatus::InvalidMethod,
        }
    })
}

/// Returns the static name of method `code`, or null for an unknown code.
#[no_mangle]
pub extern "C" fn eqsort_method_name(code: u32) -> *const c_char {
    let Some(m) = MethodId::from_code(code) else {
        return std::ptr::null();
    };
    let name: &'static CStr = match m {
        MethodId::Sedgewick => c"sedgewick",
        MethodId::Dijkstra3 => c"dijkstra3",
        MethodId::BentleyMcIlroy => c"bentley_mcilroy",
        MethodId::DualPivot => c"dualpivot",
        MethodId::PdqBaseline => c"pdq_baseline",
        MethodId::Eqsort1 => c"eqsort1",
        MethodId::Eqsort2 => c"eqsort2",
        MethodId::Eqsort3 => c"eqsort3",
        MethodId::Reference => c"reference",
    };
    name.as_ptr()
}

/// Number of methods; valid codes are `0..eqsort_method_count()`.
#[no_mangle]
pub extern "C" fn eqsort_method_count() -> u32 {
    MethodId::ALL.len() as u32
}

/// Sorts `len` integers in place.
///
/// # Safety
/// `data` must point to `len` writable values (may be null if `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn eqsort_sort_i64(method_code: u32, data: *mut i64, len: usize) -> EqsortStatus {
    let m = tri!(method(method_code));
    let v = tri!(slice_mut(data, len));
    guard(|| {
        m.sort_with(v, &mut NaturalOrder);
        EqsortStatus::Ok
    })
}

/// Sorts `len` doubles in place under IEEE 754 total order, so NaNs and
/// signed zeros are placed deterministically.
///
/// # Safety
/// `data` must point to `len` writable values (may be null if `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn eqsort_sort_f64(method_code: u32, data: *mut f64, len: usize) -> EqsortStatus {
    let m = tri!(method(method_code));
    let v = tri!(slice_mut(data, len));
    guard(|| {
        m.sort_with(v, &mut ByContext(|a: &f64, b: &f64| a.total_cmp(b)));
        EqsortStatus::Ok
    })
}

/// Allocates a zeroed counter handle. Release it with
/// [`eqsort_counters_free`].
#[no_mangle]
pub extern "C" fn eqsort_counters_new() -> *mut EqsortCounters {
    Box::into_raw(Box::new(EqsortCounters {
        counters: OpCounters::new(),
    }))
}

/// # Safety
/// `handle` must come from [`eqsort_counters_new`] and not be used again.
/// Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn eqsort_counters_free(handle: *mut EqsortCounters) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn eqsort_counters_reset(handle: *mut EqsortCounters) -> EqsortStatus {
    let Some(h) = handle.as_mut() else {
        return EqsortStatus::NullPointer;
    };
    h.counters.reset();
    EqsortStatus::Ok
}

/// Reads the accumulated totals without modifying them.
///
/// # Safety
/// `handle` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqsort_counters_snapshot(
    handle: *const EqsortCounters,
    out_comparisons: *mut u64,
    out_swaps: *mut u64,
) -> EqsortStatus {
    let Some(h) = handle.as_ref() else {
        return EqsortStatus::NullPointer;
    };
    if out_comparisons.is_null() || out_swaps.is_null() {
        return EqsortStatus::NullPointer;
    }
    let (c, s) = h.counters.snapshot();
    *out_comparisons = c;
    *out_swaps = s;
    EqsortStatus::Ok
}

/// Sorts `len` integers in place, adding the comparisons and exchanges
/// performed to `handle`.
///
/// # Safety
/// `handle` must be a live handle; `data` must point to `len` writable
/// values (may be null if `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn eqsort_sort_i64_counted(
    handle: *mut EqsortCounters,
    method_code: u32,
    data: *mut i64,
    len: usize,
) -> EqsortStatus {
    let Some(h) = handle.as_mut() else {
        return EqsortStatus::NullPointer;
    };
    let m = tri!(method(method_code));
    let v = tri!(slice_mut(data, len));
    guard(|| {
        let mut ctx = CountingContext::with_counters(NaturalOrder, h.counters);
        m.sort_with(v, &mut ctx);
        h.counters = ctx.counters();
        EqsortStatus::Ok
    })
}

/// Fills `out[0..n]` with a uniform multiset over the integer palette
/// `0..k`, reproducible from `seed`.
///
/// # Safety
/// `out` must point to `n` writable values (may be null if `n` is 0).
#[no_mangle]
pub unsafe extern "C" fn eqsort_gen_i64(n: usize, k: u64, seed: u64, out: *mut i64) -> EqsortStatus {
    let dst = tri!(slice_mut(out, n));
    guard(|| match gen_keys::<i64>(n, k, seed) {
        Ok(keys) => {
            dst.copy_from_slice(&keys);
            EqsortStatus::Ok
        }
        Err(_) => EqsortStatus::InvalidArgument,
    })
}

/// Fills `out[0..n]` with a uniform multiset over `k` doubles in `[0, 1)`,
/// reproducible from `seed`.
///
/// # Safety
/// `out` must point to `n` writable values (may be null if `n` is 0).
#[no_mangle]
pub unsafe extern "C" fn eqsort_gen_f64(n: usize, k: u64, seed: u64, out: *mut f64) -> EqsortStatus {
    let dst = tri!(slice_mut(out, n));
    guard(|| match gen_keys::<TotalF64>(n, k, seed) {
        Ok(keys) => {
            for (d, key) in dst.iter_mut().zip(keys) {
                *d = key.0;
            }
            EqsortStatus::Ok
        }
        Err(_) => EqsortStatus::InvalidArgument,
    })
}

/// Runs one counting cell: `d` arrays of length `n` over `k` keys, sorted
/// with counters; fills `out` with the means.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqsort_counting_cell(
    method_code: u32,
    n: usize,
    k: u64,
    d: usize,
    seed: u64,
    domain: EqsortDomain,
    out: *mut EqsortCountingRow,
) -> EqsortStatus {
    if out.is_null() {
        return EqsortStatus::NullPointer;
    }
    let m = tri!(method(method_code));
    if d == 0 || k == 0 {
        return EqsortStatus::InvalidArgument;
    }
    guard(|| match counting_cell(m, n, k, d, seed, domain.into()) {
        Ok(row) => {
            *out = EqsortCountingRow {
                method: method_code,
                n,
                k,
                d,
                mean_comparisons: row.mean_comparisons.unwrap_or(f64::NAN),
                mean_swaps: row.mean_swaps.unwrap_or(f64::NAN),
            };
            EqsortStatus::Ok
        }
        Err(eqsort::Error::NotSorted { .. }) => EqsortStatus::SortCheckFailed,
        Err(_) => EqsortStatus::InvalidArgument,
    })
}

/// Returns 1 when `data[0..len]` is non-decreasing, 0 otherwise, and -1 for
/// a null pointer with nonzero `len`.
///
/// # Safety
/// `data` must point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn eqsort_is_sorted_i64(data: *const i64, len: usize) -> i32 {
    if len == 0 {
        return 1;
    }
    if data.is_null() {
        return -1;
    }
    i32::from(is_sorted(slice::from_raw_parts(data, len)))
}
