#ifndef SMASHALG_H
#define SMASHALG_H

/* Generated by cbindgen from crates/ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every entry point.
typedef enum SmashStatus {
  SMASH_STATUS_OK = 0,
  // The expression text did not parse.
  SMASH_STATUS_PARSE_ERROR = 1,
  // The expression parsed but could not be evaluated.
  SMASH_STATUS_EVAL_ERROR = 2,
  // A verification suite ran to completion and found a counterexample.
  SMASH_STATUS_VERIFY_FAILED = 3,
  // Unknown suite, table, or algebra name, or text that is not UTF-8.
  SMASH_STATUS_INVALID_ARGUMENT = 4,
  // A required pointer argument was NULL.
  SMASH_STATUS_NULL_POINTER = 5,
} SmashStatus;

// Opaque handle to an evaluated expression.
typedef struct SmashValue SmashValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Evaluate an expression such as `"X[2,1] # X[3]"` and store a handle in
// `*out`. On any failure `*out` is set to NULL.
//
// # Safety
// `expr_text` must be a NUL-terminated string and `out` a valid pointer.
enum SmashStatus smash_eval(const char *expr_text, struct SmashValue **out);

// Render a value as plain text, e.g. `"X[1] + X[1,1]"`.
//
// Returns NULL only if `value` is NULL. Free the result with
// `smash_string_free`.
//
// # Safety
// `value` must be NULL or a handle obtained from `smash_eval`.
char *smash_value_render_text(const struct SmashValue *value);

// Render a value as a JSON document describing its kind and terms.
//
// Returns NULL only if `value` is NULL. Free the result with
// `smash_string_free`.
//
// # Safety
// `value` must be NULL or a handle obtained from `smash_eval`.
char *smash_value_render_json(const struct SmashValue *value);

// Release a value handle. NULL is accepted and ignored.
//
// # Safety
// `value` must be NULL or a handle obtained from `smash_eval`, freed at
// most once.
void smash_value_free(struct SmashValue *value);

// Release a string returned by this library. NULL is accepted and ignored.
//
// # Safety
// `s` must be NULL or a string returned by this library, freed at most
// once.
void smash_string_free(char *s);

// Message for the most recent failure on this thread, or NULL if the last
// call succeeded. Free the result with `smash_string_free`.
char *smash_last_error_message(void);

// 1-based byte offset of the most recent parse or eval failure on this
// thread, or 0 when there is none or the failure has no position.
uintptr_t smash_last_error_offset(void);

// Run one verification suite up to `max_degree` and store its JSON report
// in `*out_json`.
//
// The report is written whenever the suite runs, so a `VerifyFailed`
// return still carries the per-case details; free it with
// `smash_string_free`. An unknown suite name yields `InvalidArgument` and
// leaves `*out_json` NULL.
//
// # Safety
// `suite` must be a NUL-terminated string and `out_json` a valid pointer.
enum SmashStatus smash_verify(const char *suite, uintptr_t max_degree, char **out_json);

// Compute a structure-constant table as JSON and store it in `*out_json`.
//
// `op` is one of `smash`, `conv`, `internal`; `algebra` is `nsym` or
// `sym`; `p` and `q` are the degrees of the two factors. Free the result
// with `smash_string_free`.
//
// # Safety
// `op` and `algebra` must be NUL-terminated strings and `out_json` a
// valid pointer.
enum SmashStatus smash_tables(const char *op,
                              const char *algebra,
                              uintptr_t p,
                              uintptr_t q,
                              char **out_json);

// Library version as a static string; do not free.
const char *smash_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SMASHALG_H */
