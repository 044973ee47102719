/* C interface to the wallcross library. */

#ifndef WALLCROSS_H
#define WALLCROSS_H

#include <stdbool.h>
#include <stdint.h>

/**
 * Status codes shared with the CLI exit-code contract.
 */
typedef enum WcStatus {
  /**
   * Success.
   */
  WC_STATUS_OK = 0,
  /**
   * Malformed input (parse failure, index mismatch, refused budget).
   */
  WC_STATUS_INPUT_ERROR = 2,
  /**
   * A theorem precondition is violated.
   */
  WC_STATUS_PRECONDITION_ERROR = 3,
  /**
   * A pointer argument was null or not valid UTF-8.
   */
  WC_STATUS_POINTER_ERROR = 10,
} WcStatus;

/**
 * Opaque quiver handle.
 */
typedef struct WcQuiver WcQuiver;

/**
 * Message for the most recent failure on this thread. Valid until the
 * next failing call on the same thread; never free this pointer.
 */
const char *wc_last_error(void);

/**
 * Frees a string allocated by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned through a `char**` output of
 * this library, not yet freed.
 */
void wc_string_free(char *s);

/**
 * Parses a quiver from its JSON record `{"vertices": [...], "edges": [[src, tgt], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WcStatus wc_quiver_parse(const char *json, struct WcQuiver **out);

/**
 * Releases a quiver handle.
 *
 * # Safety
 * `q` must come from [`wc_quiver_parse`] and not be used afterwards.
 */
void wc_quiver_free(struct WcQuiver *q);

/**
 * Number of vertices, or -1 on a null handle.
 *
 * # Safety
 * `q` must be a live handle or null.
 */
int64_t wc_quiver_vertex_count(const struct WcQuiver *q);

/**
 * Vertex ids in canonical order, as a JSON array of strings.
 *
 * # Safety
 * `q` must be a live handle; `out` receives a string to release with
 * [`wc_string_free`].
 */
enum WcStatus wc_quiver_vertices(const struct WcQuiver *q, char **out);

/**
 * Whether the edge-count matrix is symmetric.
 *
 * # Safety
 * `q` must be a live handle; `out` a valid pointer.
 */
enum WcStatus wc_quiver_is_symmetric(const struct WcQuiver *q, bool *out);

/**
 * Euler pairing of two dimension vectors.
 *
 * # Safety
 * `m` and `m2` must point to `len` entries each; `out` must be valid.
 */
enum WcStatus wc_euler_pairing(const struct WcQuiver *q,
                               const uint32_t *m,
                               const uint32_t *m2,
                               uintptr_t len,
                               int64_t *out);

/**
 * Number of walls of a primitive dimension vector.
 *
 * # Safety
 * `m` must point to `len` entries; `out` must be valid.
 */
enum WcStatus wc_wall_count(const uint32_t *m, uintptr_t len, uint64_t *out);

/**
 * Simple-representation existence with its certificate, as JSON.
 *
 * # Safety
 * `q` live handle, `m` an array of `len` entries, `out_exists` and
 * `out_json` valid; release the string with [`wc_string_free`].
 */
enum WcStatus wc_has_simple(const struct WcQuiver *q,
                            const uint32_t *m,
                            uintptr_t len,
                            bool *out_exists,
                            char **out_json);

/**
 * Flop classification of a symmetric quiver at a primitive vector,
 * as JSON.
 *
 * # Safety
 * Same contracts as [`wc_has_simple`].
 */
enum WcStatus wc_classify_symmetric_flop(const struct WcQuiver *q,
                                         const uint32_t *m,
                                         uintptr_t len,
                                         char **out_json);

/**
 * Flip/MFS classification of an extended quiver described by the JSON
 * record `{"base": {...}, "a": {...}, "b": {...}, "c": n}` at the base
 * dimension vector `m`.
 *
 * # Safety
 * `spec_json` NUL-terminated; `m` points to `len` entries; `out_json`
 * valid.
 */
enum WcStatus wc_classify_extended_flip(const char *spec_json,
                                        const uint32_t *m,
                                        uintptr_t len,
                                        char **out_json);

/**
 * Two-vertex local model classification with side dimensions, as JSON.
 *
 * # Safety
 * `out_json` must be valid.
 */
enum WcStatus wc_classify_two_vertex(uint32_t a, uint32_t b, uint32_t c, char **out_json);

/**
 * Irreducible-class wall classification by (n, h1), as JSON.
 *
 * # Safety
 * `out_json` must be valid.
 */
enum WcStatus wc_classify_irreducible(int64_t n, uint32_t h1, char **out_json);

/**
 * Dimensions of the Grassmannian local model; empty sides are JSON null.
 *
 * # Safety
 * `out_json` must be valid.
 */
enum WcStatus wc_grassmannian_dims(uint32_t a1,
                                   uint32_t b1,
                                   uint32_t c,
                                   uint32_t m,
                                   char **out_json);

/**
 * MacMahon coefficients for exponent `e` up to `q^qmax`, as a JSON array
 * of decimal strings.
 *
 * # Safety
 * `out_json` must be valid.
 */
enum WcStatus wc_macmahon(int64_t e, uint32_t qmax, char **out_json);

#endif  /* WALLCROSS_H */
