/* C interface for the wps del Pezzo classification toolkit.
 * Generated by cbindgen from crates/wps-ffi; do not edit by hand. */

#ifndef WPS_FFI_H
#define WPS_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum WpsStatus {
  /**
   * The call succeeded.
   */
  WPS_STATUS_OK = 0,
  /**
   * Malformed input: nonpositive weight or degree, bad range.
   */
  WPS_STATUS_INVALID_INPUT = 1,
  /**
   * Structurally valid input outside the operation's domain.
   */
  WPS_STATUS_DOMAIN = 2,
  /**
   * Classification data could not be loaded.
   */
  WPS_STATUS_DATA = 3,
  /**
   * A required pointer argument was null.
   */
  WPS_STATUS_NULL_ARGUMENT = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  WPS_STATUS_UTF8 = 5,
  /**
   * An internal invariant failed; see wps_last_error.
   */
  WPS_STATUS_INTERNAL = 6,
} WpsStatus;

/**
 * Opaque classification record for one weight system.
 */
typedef struct WpsRecord WpsRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The crate version as a static NUL-terminated string.
 */
const char *wps_version(void);

/**
 * Description of the most recent error on this thread. The pointer is
 * valid until the next failing call on the same thread. Never null.
 */
const char *wps_last_error(void);

/**
 * Build the full classification record for `(weights; degree)` and
 * store the handle in `out_record`. The caller owns the handle and
 * must release it with [`wps_record_free`].
 *
 * # Safety
 *
 * `weights` must point to four readable `uint64_t` values and
 * `out_record` must be a valid location to write a pointer to.
 */
enum WpsStatus wps_record_build(const uint64_t *weights,
                                uint64_t degree,
                                struct WpsRecord **out_record);

/**
 * Release a record handle. Null is ignored.
 *
 * # Safety
 *
 * `record` must be a pointer previously returned by
 * [`wps_record_build`], not yet freed.
 */
void wps_record_free(struct WpsRecord *record);

/**
 * Fano index `a0+a1+a2+a3-d` of the record's weight system.
 *
 * # Safety
 *
 * `record` must be a live handle from [`wps_record_build`].
 */
int64_t wps_record_index(const struct WpsRecord *record);

/**
 * True when the recorded system is well-formed.
 *
 * # Safety
 *
 * `record` must be a live handle from [`wps_record_build`].
 */
bool wps_record_well_formed(const struct WpsRecord *record);

/**
 * True when the generic member is quasismooth.
 *
 * # Safety
 *
 * `record` must be a live handle from [`wps_record_build`].
 */
bool wps_record_quasismooth(const struct WpsRecord *record);

/**
 * True when the degree equals one of the weights (a linear cone).
 *
 * # Safety
 *
 * `record` must be a live handle from [`wps_record_build`].
 */
bool wps_record_degenerate(const struct WpsRecord *record);

/**
 * True when the record describes a del Pezzo surface: well-formed,
 * quasismooth, positive index.
 *
 * # Safety
 *
 * `record` must be a live handle from [`wps_record_build`].
 */
bool wps_record_is_del_pezzo(const struct WpsRecord *record);

/**
 * Serialize the whole record as JSON into `out_json` (caller frees
 * with [`wps_string_free`]).
 *
 * # Safety
 *
 * `record` must be a live handle and `out_json` a valid location to
 * write a pointer to.
 */
enum WpsStatus wps_record_to_json(const struct WpsRecord *record, char **out_json);

/**
 * Classify one quintuple and return the record as JSON in one step.
 *
 * # Safety
 *
 * `weights` must point to four readable `uint64_t` values and
 * `out_json` must be a valid location to write a pointer to.
 */
enum WpsStatus wps_classify_json(const uint64_t *weights, uint64_t degree, char **out_json);

/**
 * Enumerate every well-formed quasismooth system with the given index
 * and weights up to `max_weight`; returns a JSON array of records.
 *
 * # Safety
 *
 * `out_json` must be a valid location to write a pointer to.
 */
enum WpsStatus wps_enumerate_json(int64_t index, uint64_t max_weight, char **out_json);

/**
 * Diff a stored catalog (`thm-kollar-johnson`, `thm-i2`, `thm-bgn`,
 * `table-1`, or `table-2`) against a fresh enumeration. On success,
 * `out_clean` reports whether the diff is empty and `out_json` holds
 * the full report.
 *
 * # Safety
 *
 * `source` must be a NUL-terminated string; `out_clean` and `out_json`
 * must be valid locations to write to.
 */
enum WpsStatus wps_reproduce_json(const char *source,
                                  uint64_t max_weight,
                                  bool *out_clean,
                                  char **out_json);

/**
 * Run the seeded Bishop-implies-Lichnerowicz sweep over tuple lengths
 * `n_lo..=n_hi`. On success, `out_clean` reports whether every sample
 * satisfied the implication and the defect inequality, and `out_json`
 * holds the tallies.
 *
 * # Safety
 *
 * `out_clean` and `out_json` must be valid locations to write to.
 */
enum WpsStatus wps_verify_bl_json(uint32_t n_lo,
                                  uint32_t n_hi,
                                  uint64_t samples,
                                  uint64_t seed,
                                  bool *out_clean,
                                  char **out_json);

/**
 * Release a string returned by any `*_json` call. Null is ignored.
 *
 * # Safety
 *
 * `text` must be a pointer previously returned by this library, not
 * yet freed.
 */
void wps_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WPS_FFI_H */
