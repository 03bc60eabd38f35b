#ifndef EQSORT_H
#define EQSORT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EqsortStatus {
  EQSORT_STATUS_OK = 0,
  EQSORT_STATUS_NULL_POINTER = 1,
  EQSORT_STATUS_INVALID_METHOD = 2,
  EQSORT_STATUS_INVALID_ARGUMENT = 3,
  EQSORT_STATUS_SORT_CHECK_FAILED = 4,
  EQSORT_STATUS_PANIC = 5,
} EqsortStatus;

// Key domain of generated data, matching the `--domain` flag of the CLI.
typedef enum EqsortDomain {
  EQSORT_DOMAIN_INT = 0,
  EQSORT_DOMAIN_FLOAT = 1,
  EQSORT_DOMAIN_STRING = 2,
} EqsortDomain;

// Opaque accumulator of comparison and swap counts.
typedef struct EqsortCounters EqsortCounters;

// Mean operation counts of one benchmark cell.
typedef struct EqsortCountingRow {
  uint32_t method;
  size_t n;
  uint64_t k;
  size_t d;
  double mean_comparisons;
  double mean_swaps;
} EqsortCountingRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns a static, NUL-terminated description of `status`.
const char *eqsort_status_message(enum EqsortStatus status);

// Looks up a method code by name (`eqsort1`, `dualpivot`, ...).
//
// # Safety
// `name` must be a NUL-terminated string and `out_code` writable.
enum EqsortStatus eqsort_method_from_name(const char *name, uint32_t *out_code);

// Returns the static name of method `code`, or null for an unknown code.
const char *eqsort_method_name(uint32_t code);

// Number of methods; valid codes are `0..eqsort_method_count()`.
uint32_t eqsort_method_count(void);

// Sorts `len` integers in place.
//
// # Safety
// `data` must point to `len` writable values (may be null if `len` is 0).
enum EqsortStatus eqsort_sort_i64(uint32_t method_code, int64_t *data, size_t len);

// Sorts `len` doubles in place under IEEE 754 total order, so NaNs and
// signed zeros are placed deterministically.
//
// # Safety
// `data` must point to `len` writable values (may be null if `len` is 0).
enum EqsortStatus eqsort_sort_f64(uint32_t method_code, double *data, size_t len);

// Allocates a zeroed counter handle. Release it with
// [`eqsort_counters_free`].
struct EqsortCounters *eqsort_counters_new(void);

// # Safety
// `handle` must come from [`eqsort_counters_new`] and not be used again.
// Null is ignored.
void eqsort_counters_free(struct EqsortCounters *handle);

// # Safety
// `handle` must be a live handle.
enum EqsortStatus eqsort_counters_reset(struct EqsortCounters *handle);

// Reads the accumulated totals without modifying them.
//
// # Safety
// `handle` must be a live handle; both outputs must be writable.
enum EqsortStatus eqsort_counters_snapshot(const struct EqsortCounters *handle,
                                           uint64_t *out_comparisons,
                                           uint64_t *out_swaps);

// Sorts `len` integers in place, adding the comparisons and exchanges
// performed to `handle`.
//
// # Safety
// `handle` must be a live handle; `data` must point to `len` writable
// values (may be null if `len` is 0).
enum EqsortStatus eqsort_sort_i64_counted(struct EqsortCounters *handle,
                                          uint32_t method_code,
                                          int64_t *data,
                                          size_t len);

// Fills `out[0..n]` with a uniform multiset over the integer palette
// `0..k`, reproducible from `seed`.
//
// # Safety
// `out` must point to `n` writable values (may be null if `n` is 0).
enum EqsortStatus eqsort_gen_i64(size_t n, uint64_t k, uint64_t seed, int64_t *out);

// Fills `out[0..n]` with a uniform multiset over `k` doubles in `[0, 1)`,
// reproducible from `seed`.
//
// # Safety
// `out` must point to `n` writable values (may be null if `n` is 0).
enum EqsortStatus eqsort_gen_f64(size_t n, uint64_t k, uint64_t seed, double *out);

// Runs one counting cell: `d` arrays of length `n` over `k` keys, sorted
// with counters; fills `out` with the means.
//
// # Safety
// `out` must be writable.
enum EqsortStatus eqsort_counting_cell(uint32_t method_code,
                                       size_t n,
                                       uint64_t k,
                                       size_t d,
                                       uint64_t seed,
                                       enum EqsortDomain domain,
                                       struct EqsortCountingRow *out);

// Returns 1 when `data[0..len]` is non-decreasing, 0 otherwise, and -1 for
// a null pointer with nonzero `len`.
//
// # Safety
// `data` must point to `len` readable values.
int32_t eqsort_is_sorted_i64(const int64_t *data, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQSORT_H */
