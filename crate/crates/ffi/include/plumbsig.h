#ifndef PLUMBSIG_H
#define PLUMBSIG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlumbsigStatus {
  PLUMBSIG_STATUS_OK = 0,
  PLUMBSIG_STATUS_NULL_POINTER = 1,
  PLUMBSIG_STATUS_INVALID_UTF8 = 2,
  PLUMBSIG_STATUS_SYNTAX = 3,
  PLUMBSIG_STATUS_BAD_PARAMETERS = 4,
  PLUMBSIG_STATUS_NOT_EVEN_TYPE = 5,
  /**
   * Singular matrix, non-integral data and other numeric failures.
   */
  PLUMBSIG_STATUS_NUMERIC = 6,
  PLUMBSIG_STATUS_INTERNAL = 7,
  PLUMBSIG_STATUS_PANIC = 8,
} PlumbsigStatus;

/**
 * Opaque handle to a parsed complex scheme.
 */
typedef struct PlumbsigScheme PlumbsigScheme;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. Valid until the next
 * call into the library from the same thread; do not free.
 */
const char *plumbsig_last_error(void);

/**
 * Parses a scheme such as `"J 1-<2-> 2+"` into a new handle.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_scheme_parse(const char *text, struct PlumbsigScheme **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void plumbsig_scheme_free(struct PlumbsigScheme *h);

/**
 * Canonical text of a scheme.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_scheme_render(const struct PlumbsigScheme *h, char **out);

/**
 * Number of ovals of a scheme.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_scheme_oval_count(const struct PlumbsigScheme *h, uint64_t *out);

/**
 * `sig_{b/p}` and `eta_p` for an odd prime `p` and `1 <= b <= (p-1)/2`.
 *
 * # Safety
 * `h` must be a live handle; `sig` and `eta` must be writable.
 */
enum PlumbsigStatus plumbsig_sig_eta(const struct PlumbsigScheme *h,
                                     uint64_t p,
                                     uint64_t b,
                                     int64_t *sig,
                                     int64_t *eta);

/**
 * The generic nullity.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_nul(const struct PlumbsigScheme *h, int64_t *out);

/**
 * Profile listing, one interval or point per line.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_profile_text(const struct PlumbsigScheme *h, char **out);

/**
 * Profile as JSON.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_profile_json(const struct PlumbsigScheme *h, char **out);

/**
 * Degree-`m` prohibition report as JSON.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_check_json(const struct PlumbsigScheme *h, uint64_t m, char **out);

/**
 * Member `k` of the family `"odd_nest"` or `"double_nest"`.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum PlumbsigStatus plumbsig_family(const char *name, uint64_t k, struct PlumbsigScheme **out);

/**
 * Releases a string returned by the library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void plumbsig_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLUMBSIG_H */
