#ifndef QRWE_H
#define QRWE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Which curves a moment ranges over.
 */
typedef enum QrweFlavor {
  QRWE_FLAVOR_ALL = 0,
  QRWE_FLAVOR_TWO_TORSION = 1,
  QRWE_FLAVOR_FULL_TWO_TORSION = 2,
} QrweFlavor;

/*
 Result codes. Zero is success.
 */
typedef enum QrweStatus {
  QRWE_STATUS_OK = 0,
  /*
   A required pointer argument was null.
   */
  QRWE_STATUS_NULL_POINTER = 1,
  /*
   An argument is outside the supported domain (not an odd prime power,
   invalid discriminant, bad level, ...).
   */
  QRWE_STATUS_DOMAIN = 2,
  /*
   The input is valid but the requested operation does not apply to it.
   */
  QRWE_STATUS_UNSUPPORTED = 3,
  /*
   An internal cross-check failed.
   */
  QRWE_STATUS_CONSISTENCY = 4,
  /*
   Exhaustive enumeration would exceed the codeword budget.
   */
  QRWE_STATUS_BUDGET = 5,
  /*
   A panic was caught; this is a bug.
   */
  QRWE_STATUS_INTERNAL = 6,
} QrweStatus;

/*
 Opaque QR weight enumerator.
 */
typedef struct QrweEnumerator QrweEnumerator;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null if none.
 The pointer stays valid until the next failing call on the same thread.
 */
const char *qrwe_last_error_message(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a string from this library not yet freed.
 */
void qrwe_string_free(char *s);

/*
 Closed-form enumerator of `C_{1,4}` (length `q + 1`), or of the
 classical code of length `q` when `classical` is true.

 # Safety
 `out` must be valid for writes.
 */
enum QrweStatus qrwe_enumerator_c14(uint64_t q, bool classical, struct QrweEnumerator **out);

/*
 Exhaustive enumerator of `C_{1,h}`. `budget == 0` selects the default
 (or `QRWE_BUDGET`).

 # Safety
 `out` must be valid for writes.
 */
enum QrweStatus qrwe_enumerator_brute(uint64_t q,
                                      uintptr_t h,
                                      bool classical,
                                      uint64_t budget,
                                      struct QrweEnumerator **out);

/*
 Coefficients of the dual of `C_{1,4}` (or its classical version) with
 `j + k <= max_codim`; all other coefficients read as zero.

 # Safety
 `out` must be valid for writes.
 */
enum QrweStatus qrwe_enumerator_dual(uint64_t q,
                                     uintptr_t max_codim,
                                     bool classical,
                                     struct QrweEnumerator **out);

/*
 Releases a handle. Null is ignored.

 # Safety
 `h` must be null or a handle from this library not yet freed.
 */
void qrwe_enumerator_free(struct QrweEnumerator *h);

/*
 Code length `n`.

 # Safety
 `h` must be a live handle; `out` must be valid for writes.
 */
enum QrweStatus qrwe_enumerator_length(const struct QrweEnumerator *h, uintptr_t *out);

/*
 Coefficient of `X^{n-j-k} Y^j Z^k` as a decimal string.

 # Safety
 `h` must be a live handle; `out` must be valid for writes.
 */
enum QrweStatus qrwe_enumerator_coefficient(const struct QrweEnumerator *h,
                                            uintptr_t j,
                                            uintptr_t k,
                                            char **out);

/*
 JSON rendering `{"n", "q", "terms": [{"j", "k", "A"}, ...]}`.

 # Safety
 `h` must be a live handle; `out` must be valid for writes.
 */
enum QrweStatus qrwe_enumerator_to_json(const struct QrweEnumerator *h, char **out);

/*
 CSV rendering with header `i,j,k,A`.

 # Safety
 `h` must be a live handle; `out` must be valid for writes.
 */
enum QrweStatus qrwe_enumerator_to_csv(const struct QrweEnumerator *h, char **out);

/*
 Trace of `T_q` on `S_k(Γ0(level))` for level 1, 2 or 4.

 # Safety
 `out` must be valid for writes.
 */
enum QrweStatus qrwe_hecke_trace(uint32_t level, uint32_t weight, uint64_t q, char **out);

/*
 Closed-form weighted `2r`-th moment of the Frobenius trace over `F_q`.

 # Safety
 `out` must be valid for writes.
 */
enum QrweStatus qrwe_moment(uint64_t q, uint32_t r, enum QrweFlavor flavor, char **out);

/*
 Class number `h(d)` of a negative discriminant.

 # Safety
 `out` must be valid for writes.
 */
enum QrweStatus qrwe_class_number(int64_t disc, uint64_t *out);

/*
 Hurwitz-Kronecker class number `H_w(delta)` as `"n"` or `"n/d"`.

 # Safety
 `out` must be valid for writes.
 */
enum QrweStatus qrwe_hurwitz_class_number(int64_t delta, char **out);

/*
 Library version as a static string.
 */
const char *qrwe_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QRWE_H */
