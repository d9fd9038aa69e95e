/* fixitylab C API: fixed-point analysis of finite permutation groups. */

#pragma once

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from fixitylab-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirror the CLI exit codes where the concepts coincide.
 */
typedef enum FxlStatus {
  FXL_STATUS_OK = 0,
  FXL_STATUS_PRECONDITION_FAILED = 1,
  FXL_STATUS_PARSE_ERROR = 2,
  FXL_STATUS_TOO_LARGE = 3,
  FXL_STATUS_VIOLATION = 4,
  FXL_STATUS_NULL_ARGUMENT = 5,
  FXL_STATUS_INVALID_UTF8 = 6,
  FXL_STATUS_INTERNAL_ERROR = 7,
} FxlStatus;

/**
 * An opaque permutation group handle.
 */
typedef struct FxlGroup FxlGroup;

/**
 * Parses a group file (line 1 `degree <n>`, then one generator per line in
 * cycle notation) into a new group handle. The handle must be released with
 * `fxl_group_free`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated C string and `out` a valid pointer.
 */
enum FxlStatus fxl_group_parse(const char *text, struct FxlGroup **out);

/**
 * Builds a group handle from `len` generators in cycle notation at the
 * stated degree.
 *
 * # Safety
 * `generators` must point to `len` valid NUL-terminated C strings and `out`
 * must be a valid pointer.
 */
enum FxlStatus fxl_group_from_cycles(uint32_t degree,
                                     const char *const *generators,
                                     size_t len,
                                     struct FxlGroup **out);

/**
 * Releases a group handle. A null handle is a no-op.
 *
 * # Safety
 * `group` must be null or a handle produced by this library, not yet freed.
 */
void fxl_group_free(struct FxlGroup *group);

/**
 * Releases a string produced by this library. A null pointer is a no-op.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fxl_string_free(char *s);

/**
 * Degree of the natural domain.
 *
 * # Safety
 * `group` must be a valid handle.
 */
uint32_t fxl_group_degree(const struct FxlGroup *group);

/**
 * Exact group order. Returns `TooLarge` if the order does not fit in 64 bits.
 *
 * # Safety
 * `group` must be a valid handle and `out` a valid pointer.
 */
enum FxlStatus fxl_group_order(const struct FxlGroup *group, uint64_t *out);

/**
 * Whether the group acts transitively on its natural domain.
 *
 * # Safety
 * `group` must be a valid handle.
 */
bool fxl_group_is_transitive(const struct FxlGroup *group);

/**
 * Whether the derived series reaches the trivial group.
 *
 * # Safety
 * `group` must be a valid handle.
 */
bool fxl_group_is_soluble(const struct FxlGroup *group);

/**
 * The fixity of the natural action: the maximum number of fixed points of a
 * nonidentity element.
 *
 * # Safety
 * `group` must be a valid handle and `out` a valid pointer.
 */
enum FxlStatus fxl_fixity(const struct FxlGroup *group, uint32_t *out);

/**
 * The full fixed-point profile as JSON `{"fixity": .., "counts": {..}}`.
 *
 * # Safety
 * `group` must be a valid handle and `out` a valid pointer; the returned
 * string is freed with `fxl_string_free`.
 */
enum FxlStatus fxl_fixity_profile_json(const struct FxlGroup *group, char **out);

/**
 * Classifies the natural action under the stated theorem (2 or 3) and
 * returns the report as JSON. `Ok` when at least one case matched,
 * `Violation` when the report is empty (with the JSON still written),
 * `PreconditionFailed` when the action is not transitive+soluble of the
 * stated fixity.
 *
 * # Safety
 * `group` must be a valid handle and `out` a valid pointer; the returned
 * string is freed with `fxl_string_free`.
 */
enum FxlStatus fxl_classify_json(const struct FxlGroup *group, uint32_t theorem, char **out);
