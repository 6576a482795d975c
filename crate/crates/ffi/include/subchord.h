#ifndef SUBCHORD_H
#define SUBCHORD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SubchordMoveSet {
  SUBCHORD_MOVE_SET_RI = 0,
  SUBCHORD_MOVE_SET_RI_WEAK_RIII = 1,
  SUBCHORD_MOVE_SET_RI_STRONG_RIII = 2,
} SubchordMoveSet;

typedef enum SubchordStatus {
  SUBCHORD_STATUS_OK = 0,
  SUBCHORD_STATUS_NULL_POINTER = 1,
  SUBCHORD_STATUS_INVALID_UTF8 = 2,
  SUBCHORD_STATUS_LABEL_NOT_TWICE = 3,
  SUBCHORD_STATUS_EMPTY_TOKEN = 4,
  SUBCHORD_STATUS_BOUND_EXCEEDED = 5,
  SUBCHORD_STATUS_NOT_REALIZABLE = 6,
  SUBCHORD_STATUS_NON_INTEGRAL = 7,
  SUBCHORD_STATUS_EMBEDDING_MISMATCH = 8,
  SUBCHORD_STATUS_SITE_INVALID = 9,
  SUBCHORD_STATUS_POSTCONDITION_VIOLATION = 10,
  SUBCHORD_STATUS_IO = 11,
  SUBCHORD_STATUS_PANIC = 12,
  SUBCHORD_STATUS_VERIFICATION_FAILED = 13,
} SubchordStatus;

typedef enum SubchordSuite {
  SUBCHORD_SUITE_THEOREM1 = 0,
  SUBCHORD_SUITE_THEOREM2 = 1,
  SUBCHORD_SUITE_THEOREM3 = 2,
  SUBCHORD_SUITE_FLYPE = 3,
  SUBCHORD_SUITE_AVERAGED = 4,
  SUBCHORD_SUITE_ADDITIVITY = 5,
  SUBCHORD_SUITE_ORACLE = 6,
} SubchordSuite;

/**
 * Opaque handle to a parsed Gauss word.
 */
typedef struct SubchordWord SubchordWord;

/**
 * The five sub-chord counts.
 */
typedef struct SubchordCounts {
  uint64_t cross;
  uint64_t triple;
  uint64_t h;
  uint64_t iii;
  uint64_t hh;
} SubchordCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `text` into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum SubchordStatus subchord_word_parse(const char *text, struct SubchordWord **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `w` must come from [`subchord_word_parse`] and not be freed twice.
 */
void subchord_word_free(struct SubchordWord *w);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void subchord_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *subchord_last_error(void);

/**
 * Stable name of a status code, such as `"NOT_REALIZABLE"`.
 */
const char *subchord_status_name(enum SubchordStatus s);

/**
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_word_crossing_count(const struct SubchordWord *w, size_t *out);

/**
 * Canonical form as a space-separated string.
 *
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_word_canonical(const struct SubchordWord *w, char **out);

/**
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_is_realizable(const struct SubchordWord *w, bool *out);

/**
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_counts(const struct SubchordWord *w, struct SubchordCounts *out);

/**
 * Lambda of a realizable word.
 *
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_lambda(const struct SubchordWord *w, int64_t *out);

/**
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_averaged(const struct SubchordWord *w, int64_t *out);

/**
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_trivializable(const struct SubchordWord *w,
                                           enum SubchordMoveSet set,
                                           bool *out);

/**
 * The full analysis as one JSON object.
 *
 * # Safety
 * `w` must be a live handle and `out` writable.
 */
enum SubchordStatus subchord_analyze_json(const struct SubchordWord *w, char **out);

/**
 * Census records up to `n_max` crossings as a JSON array.
 *
 * # Safety
 * `out` must be writable.
 */
enum SubchordStatus subchord_census_json(size_t n_max, bool prime_reduced, char **out);

/**
 * Runs a verification suite. The report is written to `*report_json` when
 * that pointer is non-null; a failing suite returns `VerificationFailed`.
 *
 * # Safety
 * `report_json` must be null or writable.
 */
enum SubchordStatus subchord_verify(enum SubchordSuite suite, size_t n_max, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBCHORD_H */
