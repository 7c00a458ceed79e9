/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef SCHUBERT_H
#define SCHUBERT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SCHUBERT_METHOD_DETERMINANT 0

#define SCHUBERT_METHOD_PATHS 1

#define SCHUBERT_METHOD_REFLECTIONS 2

/**
 * Status codes; the nonzero values match the `schubert` CLI exit codes.
 */
typedef enum SchubertStatus {
  SCHUBERT_STATUS_OK = 0,
  SCHUBERT_STATUS_MISMATCH = 1,
  SCHUBERT_STATUS_INVALID_INPUT = 2,
  SCHUBERT_STATUS_NOT_ON_VARIETY = 3,
  SCHUBERT_STATUS_BUDGET_EXCEEDED = 4,
  SCHUBERT_STATUS_NULL_POINTER = 5,
  SCHUBERT_STATUS_BUFFER_TOO_SMALL = 6,
} SchubertStatus;

/**
 * Opaque handle to a validated pair `tau <= w`.
 */
typedef struct SchubertInstance SchubertInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *schubert_last_error_message(void);

/**
 * Builds an instance from the increasing entry vectors `w[0..d]` and
 * `tau[0..d]`. On success `*out` receives a handle owned by the caller.
 *
 * # Safety
 * `w` and `tau` must point to `d` readable values (or may be NULL when
 * `d == 0`); `out` must be writable.
 */
enum SchubertStatus schubert_instance_new(size_t n,
                                          size_t d,
                                          const size_t *w,
                                          const size_t *tau,
                                          struct SchubertInstance **out);

/**
 * # Safety
 * `inst` must be NULL or a handle from [`schubert_instance_new`] not yet freed.
 */
void schubert_instance_free(struct SchubertInstance *inst);

/**
 * `d` of the instance, or 0 for NULL.
 *
 * # Safety
 * `inst` must be NULL or a live handle.
 */
size_t schubert_instance_d(const struct SchubertInstance *inst);

/**
 * Writes `kappa_1 .. kappa_d` into `out[0..d]`.
 *
 * # Safety
 * `inst` must be a live handle and `out` must have room for `len` values.
 */
enum SchubertStatus schubert_instance_kappa(const struct SchubertInstance *inst,
                                            size_t *out,
                                            size_t len);

/**
 * Writes the connection permutation, 1-based, into `out[0..d]`.
 *
 * # Safety
 * As [`schubert_instance_kappa`].
 */
enum SchubertStatus schubert_instance_sigma(const struct SchubertInstance *inst,
                                            size_t *out,
                                            size_t len);

/**
 * Multiplicity as a decimal string. `method` is one of the
 * `SCHUBERT_METHOD_*` constants; `budget` caps the reflection-set search.
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum SchubertStatus schubert_multiplicity(const struct SchubertInstance *inst,
                                          uint32_t method,
                                          size_t budget,
                                          char **out);

/**
 * Pole order `T` of the Hilbert series (the dimension of `X(w)`).
 *
 * # Safety
 * `inst` must be NULL or a live handle.
 */
size_t schubert_pole_order(const struct SchubertInstance *inst);

/**
 * Numerator coefficients `h_0,h_1,...` of the (conjectural) Hilbert series
 * as comma-separated decimals.
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum SchubertStatus schubert_hilbert_numerator(const struct SchubertInstance *inst, char **out);

/**
 * Coefficient of `z^m` in the Hilbert series, as a decimal string.
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum SchubertStatus schubert_hilbert_function(const struct SchubertInstance *inst,
                                              size_t m,
                                              char **out);

/**
 * Runs the exhaustive cross-checks for every pair with `n <= max_n`.
 */
enum SchubertStatus schubert_verify(size_t max_n);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed only once.
 */
void schubert_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBERT_H */
