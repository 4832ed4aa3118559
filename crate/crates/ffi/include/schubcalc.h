#ifndef SCHUBCALC_H
#define SCHUBCALC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SchubcalcStatus {
  SCHUBCALC_STATUS_OK = 0,
  SCHUBCALC_STATUS_NULL_POINTER = 1,
  SCHUBCALC_STATUS_INVALID_UTF8 = 2,
  SCHUBCALC_STATUS_INVALID_INPUT = 3,
  SCHUBCALC_STATUS_INTERNAL = 4,
  SCHUBCALC_STATUS_PANIC = 5,
} SchubcalcStatus;

// A permutation handle.
typedef struct SchubcalcPermutation SchubcalcPermutation;

// A polynomial handle.
typedef struct SchubcalcPoly SchubcalcPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. Valid until the next
// failing call on the same thread.
const char *schubcalc_last_error(void);

// Library version as a static string.
const char *schubcalc_version(void);

// # Safety
// `s` must be null or come from this library and not have been freed.
void schubcalc_string_free(char *s);

// Parse a permutation window such as `"[1,0]@0"`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum SchubcalcStatus schubcalc_permutation_parse(const char *text,
                                                 struct SchubcalcPermutation **out);

// # Safety
// `w` must be null or a live handle from this library.
void schubcalc_permutation_free(struct SchubcalcPermutation *w);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum SchubcalcStatus schubcalc_permutation_length(const struct SchubcalcPermutation *w,
                                                  size_t *out);

// Parse a polynomial from its text form (`"c1*y0 - 2*x1^2"`) or JSON.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum SchubcalcStatus schubcalc_poly_parse(const char *text, struct SchubcalcPoly **out);

// # Safety
// `p` must be null or a live handle from this library.
void schubcalc_poly_free(struct SchubcalcPoly *p);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SchubcalcStatus schubcalc_poly_to_json(const struct SchubcalcPoly *p, char **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SchubcalcStatus schubcalc_poly_to_text(const struct SchubcalcPoly *p, char **out);

// Writes 1 to `out` when the polynomials are equal, 0 otherwise.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum SchubcalcStatus schubcalc_poly_equal(const struct SchubcalcPoly *a,
                                          const struct SchubcalcPoly *b,
                                          int32_t *out);

// The enriched Schubert polynomial of `w`.
//
// # Safety
// `w` must be a live handle; `out` must be writable.
enum SchubcalcStatus schubcalc_back_stabilize(const struct SchubcalcPermutation *w,
                                              struct SchubcalcPoly **out);

// Dual Littlewood–Richardson table of a partition given as `"3,1"`, as JSON.
//
// # Safety
// `lambda` must be a NUL-terminated string; `out` must be writable.
enum SchubcalcStatus schubcalc_dual_lr_json(const char *lambda, char **out);

// Co-module coefficient table of a permutation, as JSON.
//
// # Safety
// `w` must be a live handle; `out` must be writable.
enum SchubcalcStatus schubcalc_comodule_json(const struct SchubcalcPermutation *w, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBCALC_H */
