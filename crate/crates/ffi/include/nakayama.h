#ifndef NAKAYAMA_H
#define NAKAYAMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes returned by every fallible function.
 */
typedef enum NkStatus {
  NK_STATUS_OK = 0,
  NK_STATUS_NULL_POINTER = 1,
  NK_STATUS_INVALID_KUPISCH = 2,
  NK_STATUS_INVALID_RELATIONS = 3,
  NK_STATUS_INVALID_UTF8 = 4,
  NK_STATUS_BUFFER_TOO_SMALL = 5,
  NK_STATUS_UNDEFINED = 6,
  NK_STATUS_PANIC = 7,
} NkStatus;

/**
 * Opaque handle to a validated cyclic Nakayama algebra.
 */
typedef struct NkAlgebra NkAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds an algebra from `len` Kupisch lengths.
 *
 * # Safety
 * `lengths` must point to `len` readable values and `out` must be writable.
 */
enum NkStatus nk_algebra_from_kupisch(const size_t *lengths, size_t len, struct NkAlgebra **out);

/**
 * Builds an algebra from a relation string such as `"n=5;1:3,3:3,5:2"`.
 *
 * # Safety
 * `spec` must be a NUL terminated string and `out` must be writable.
 */
enum NkStatus nk_algebra_from_relations(const char *spec, struct NkAlgebra **out);

/**
 * Releases a handle. Passing null is a no-op.
 *
 * # Safety
 * `h` must come from this library and must not be used afterwards.
 */
void nk_algebra_free(struct NkAlgebra *h);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t nk_algebra_rank(const struct NkAlgebra *h);

/**
 * Copies the Kupisch series into `buf`. `written` always receives the rank,
 * so a call with `cap == 0` can be used to size the buffer.
 *
 * # Safety
 * `buf` must have room for `cap` values; `h` and `written` must be valid.
 */
enum NkStatus nk_algebra_kupisch(const struct NkAlgebra *h,
                                 size_t *buf,
                                 size_t cap,
                                 size_t *written);

/**
 * Global dimension; `-1` when infinite.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NkStatus nk_algebra_gldim(const struct NkAlgebra *h, int64_t *out);

/**
 * Finitistic dimension.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NkStatus nk_algebra_findim(const struct NkAlgebra *h, int64_t *out);

/**
 * φ-dimension.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NkStatus nk_algebra_phi_dim(const struct NkAlgebra *h, int64_t *out);

/**
 * Delooping level; `-1` when infinite.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NkStatus nk_algebra_del(const struct NkAlgebra *h, int64_t *out);

/**
 * Writes a new handle for the opposite algebra.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NkStatus nk_algebra_opposite(const struct NkAlgebra *h, struct NkAlgebra **out);

/**
 * Writes a new handle for the syzygy filtered algebra. Returns
 * `NK_STATUS_UNDEFINED` for selfinjective algebras and for those whose
 * filtered algebra is not cyclic.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NkStatus nk_algebra_epsilon(const struct NkAlgebra *h, struct NkAlgebra **out);

/**
 * Full invariants report as JSON. Free the result with [`nk_string_free`].
 * Returns null on a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
char *nk_algebra_invariants_json(const struct NkAlgebra *h);

/**
 * Releases a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void nk_string_free(char *s);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *nk_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NAKAYAMA_H */
