#ifndef PENTACOVER_H
#define PENTACOVER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The family's parameters violate a side condition.
   */
  PC_STATUS_SIDE_CONDITION = 3,
  PC_STATUS_PARSE = 4,
  /**
   * A computation failed or a verification did not hold.
   */
  PC_STATUS_FAILED = 5,
  /**
   * The output buffer is too small; the required length was still written.
   */
  PC_STATUS_BUFFER_TOO_SMALL = 6,
  PC_STATUS_PANIC = 7,
} PcStatus;

/**
 * A graph owned by the library.
 */
typedef struct PcGraph PcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library on this thread.
 */
const char *pc_last_error_message(void);

/**
 * Builds a named graph (`k6`, `cd`, `cgd1`, ...). Unused parameters are ignored.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PcStatus pc_family_build(const char *name,
                              uint64_t m,
                              uint64_t p,
                              uint32_t e,
                              struct PcGraph **out);

/**
 * Reads one graph in graph6 or sparse6 (leading `:`) encoding.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PcStatus pc_graph_from_graph6(const char *text, struct PcGraph **out);

/**
 * graph6 encoding without a trailing newline; free with `pc_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_graph_to_graph6(const struct PcGraph *g, char **out);

/**
 * sparse6 encoding without a trailing newline; free with `pc_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_graph_to_sparse6(const struct PcGraph *g, char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void pc_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle or null; it is invalid afterwards.
 */
void pc_graph_free(struct PcGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_graph_vertex_count(const struct PcGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_graph_edge_count(const struct PcGraph *g, size_t *out);

/**
 * Order of the automorphism group. `PC_STATUS_FAILED` if it exceeds `u64`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_graph_aut_order(const struct PcGraph *g, uint64_t *out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum PcStatus pc_graphs_isomorphic(const struct PcGraph *a, const struct PcGraph *b, bool *out);

/**
 * Roots of `x^4+x^3+x^2+x+1` mod `m` in ascending order. `count` receives the
 * number of roots; if it exceeds `capacity` nothing is written to `roots` and
 * `PC_STATUS_BUFFER_TOO_SMALL` is returned. `roots` may be null when
 * `capacity` is 0.
 *
 * # Safety
 * `roots` must point to `capacity` writable values and `count` be valid.
 */
enum PcStatus pc_solve_eq1(uint64_t m, uint64_t *roots, size_t capacity, size_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PENTACOVER_H */
