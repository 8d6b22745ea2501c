#ifndef DAISYCUBE_H
#define DAISYCUBE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum DcStatus {
  DC_STATUS_OK = 0,
  DC_STATUS_NULL_POINTER = 1,
  DC_STATUS_INVALID_ARGUMENT = 2,
  DC_STATUS_SIZE_LIMIT = 3,
  DC_STATUS_PARSE = 4,
  DC_STATUS_DISCONNECTED = 5,
  DC_STATUS_NOT_ISOMETRIC = 6,
  DC_STATUS_NOT_DAISY = 7,
  DC_STATUS_DISAGREEMENT = 8,
  DC_STATUS_OVERFLOW = 9,
  /**
   * The output buffer is too small; the required length was written.
   */
  DC_STATUS_BUFFER_TOO_SMALL = 10,
  DC_STATUS_PANIC = 11,
} DcStatus;

typedef enum DcFamily {
  DC_FAMILY_HYPERCUBE = 0,
  DC_FAMILY_FIBONACCI = 1,
  DC_FAMILY_LUCAS = 2,
  DC_FAMILY_QNF = 3,
  DC_FAMILY_VERTEX_DELETED = 4,
} DcFamily;

typedef enum DcMethod {
  DC_METHOD_SEMICUBE = 0,
  DC_METHOD_ORACLE = 1,
  DC_METHOD_COROLLARY = 2,
} DcMethod;

/**
 * Opaque graph handle.
 */
typedef struct DcGraph DcGraph;

/**
 * Indices of one graph by one method.
 */
typedef struct DcIndexReport {
  uint64_t vertex_count;
  uint64_t edge_count;
  uint64_t wiener;
  uint64_t mostar;
  /**
   * `2W - Mo - |V||E|`
   */
  int64_t residual;
  enum DcMethod method;
  bool relation_holds;
} DcIndexReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a member of a named family. `pattern_bits`/`pattern_len` give the
 * forbidden substring for [`DcFamily::Qnf`] and are ignored otherwise.
 * `max_vertices == 0` selects the default cap.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum DcStatus dc_family_build(enum DcFamily family,
                              uint32_t n,
                              uint64_t pattern_bits,
                              uint32_t pattern_len,
                              uint64_t max_vertices,
                              struct DcGraph **out);

/**
 * Downward closure of `len` generators of dimension `n`.
 *
 * # Safety
 * `generators` must point to `len` readable words; `out` must be writable.
 */
enum DcStatus dc_daisy_closure(uint32_t n,
                               const uint64_t *generators,
                               size_t len,
                               uint64_t max_vertices,
                               struct DcGraph **out);

/**
 * Graph induced by `len` labels of dimension `n`. Duplicates are rejected.
 *
 * # Safety
 * `labels` must point to `len` readable words; `out` must be writable.
 */
enum DcStatus dc_graph_from_labels(uint32_t n,
                                   const uint64_t *labels,
                                   size_t len,
                                   struct DcGraph **out);

/**
 * Parses a graph JSON document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DcStatus dc_graph_from_json(const char *json, struct DcGraph **out);

/**
 * Serializes a graph to JSON. Release the string with [`dc_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_graph_to_json(const struct DcGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void dc_string_free(char *s);

/**
 * # Safety
 * `g` must be null or a handle returned by this library, not yet freed.
 */
void dc_graph_free(struct DcGraph *g);

/**
 * Dimension `n`, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint32_t dc_graph_dimension(const struct DcGraph *g);

/**
 * `|V|`, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t dc_graph_vertex_count(const struct DcGraph *g);

/**
 * `|E|`, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t dc_graph_edge_count(const struct DcGraph *g);

/**
 * Copies the sorted labels into `buf`. `written` receives `|V|` even when
 * the buffer is too small.
 *
 * # Safety
 * `buf` must be writable for `cap` words; `written` must be writable.
 */
enum DcStatus dc_graph_labels(const struct DcGraph *g, uint64_t *buf, size_t cap, size_t *written);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_graph_is_downward_closed(const struct DcGraph *g, bool *out);

/**
 * BFS distances against Hamming distances over all pairs. Fails with
 * [`DcStatus::Disconnected`] on a disconnected graph.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_graph_is_isometric(const struct DcGraph *g, bool *out);

/**
 * Per-direction `|E_i|`, `|W(i,0)|`, `|W(i,1)|`. Each buffer must hold
 * `cap >= n` words; `written` receives `n`.
 *
 * # Safety
 * `e`, `w0`, `w1` must be writable for `cap` words; `written` must be writable.
 */
enum DcStatus dc_graph_profile(const struct DcGraph *g,
                               uint64_t *e,
                               uint64_t *w0,
                               uint64_t *w1,
                               size_t cap,
                               size_t *written);

/**
 * Wiener and Mostar indices by one method.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DcStatus dc_graph_indices(const struct DcGraph *g,
                               enum DcMethod method,
                               struct DcIndexReport *out);

/**
 * Runs the full property check. `passed` is false when any check fails; the
 * reason is then available from [`dc_last_error_message`].
 *
 * # Safety
 * `g` must be a live handle; `passed` must be writable.
 */
enum DcStatus dc_graph_verify(const struct DcGraph *g, bool *passed);

/**
 * Maximal elements of `len` labels of dimension `n`, sorted.
 *
 * # Safety
 * `labels` must be readable for `len` words, `buf` writable for `cap`
 * words, `written` writable.
 */
enum DcStatus dc_maximal_antichain(uint32_t n,
                                   const uint64_t *labels,
                                   size_t len,
                                   uint64_t *buf,
                                   size_t cap,
                                   size_t *written);

/**
 * `F_k` with `F_0 = 0`; [`DcStatus::Overflow`] past `F_93`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DcStatus dc_fibonacci_number(uint32_t k, uint64_t *out);

/**
 * Length in bytes of the last error message on this thread, excluding the
 * terminating NUL; 0 when there is none.
 */
size_t dc_last_error_length(void);

/**
 * Copies the last error message, NUL-terminated and truncated to `cap`
 * bytes. Returns the number of bytes written excluding the NUL.
 *
 * # Safety
 * `buf` must be writable for `cap` bytes.
 */
size_t dc_last_error_message(char *buf, size_t cap);

/**
 * Static description of a status code.
 */
const char *dc_status_string(enum DcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DAISYCUBE_H */
