#ifndef G2_GAUDIN_H
#define G2_GAUDIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum G2Status {
  G2_STATUS_OK = 0,
  G2_STATUS_NULL_POINTER = 1,
  G2_STATUS_INVALID_INPUT = 2,
  G2_STATUS_MATH_FAILURE = 3,
  G2_STATUS_PANIC = 4,
} G2Status;

// Closed-form Bethe solution `(y1, y2)`.
typedef struct G2PolyPair G2PolyPair;

// A 7-dimensional space of polynomials.
typedef struct G2Space G2Space;

// Hasse diagram of the strata for one degree.
typedef struct G2Strata G2Strata;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the next call.
const char *g2_last_error(void);

// Release a string returned by this library.
//
// # Safety
// `s` must be NULL or a string returned by this library that has not been freed.
void g2_string_free(char *s);

// Dimension of the irreducible module with highest weight `(a, b)`.
//
// # Safety
// `out` must point to writable storage.
enum G2Status g2_weyl_dim(int64_t a, int64_t b, uint64_t *out);

// Dimension of invariants in the tensor product of `n` modules; `weights` holds `2n` integers.
//
// # Safety
// `weights` must point to `2 * n` readable integers and `out` to writable storage.
enum G2Status g2_invariant_dim(const int64_t *weights, uintptr_t n, uint64_t *out);

// Closed-form Bethe solution for `lambda = (a, b)` and the given case.
//
// # Safety
// `out` must point to writable storage for a handle.
enum G2Status g2_bethe_solution(int64_t a,
                                int64_t b,
                                uintptr_t case_index,
                                struct G2PolyPair **out);

// Render `y1` (`which == 1`) or `y2` (`which == 2`) as a string such as `x - 1/2`.
//
// # Safety
// `pair` must be a live handle and `out` writable.
enum G2Status g2_poly_pair_render(const struct G2PolyPair *pair, uint32_t which, char **out);

// # Safety
// `pair` must be NULL or a handle from `g2_bethe_solution` that has not been freed.
void g2_poly_pair_free(struct G2PolyPair *pair);

// Compare the residue of the fifth-order coefficient with the Gaudin eigenvalue.
// Writes 1 to `ok` if they agree.
//
// # Safety
// `ok` must point to writable storage.
enum G2Status g2_h2_check(int64_t a, int64_t b, uintptr_t case_index, int32_t *ok);

// Parse a space from a JSON array of seven ascending coefficient arrays.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum G2Status g2_space_from_json(const char *json, struct G2Space **out);

// Whether the space is self-self-dual for the ramification data given as JSON
// (`{"points": [...], "partitions": [...]}`). Writes 1 or 0 to `out`.
//
// # Safety
// `space` must be a live handle, `ramification` a NUL-terminated string, `out` writable.
enum G2Status g2_space_is_self_self_dual(const struct G2Space *space,
                                         const char *ramification,
                                         int32_t *out);

// # Safety
// `space` must be NULL or a handle from `g2_space_from_json` that has not been freed.
void g2_space_free(struct G2Space *space);

// Build the Hasse diagram of strata for degree `d`.
//
// # Safety
// `out` must point to writable storage for a handle.
enum G2Status g2_strata_new(int64_t d, struct G2Strata **out);

// # Safety
// `h` must be a live handle.
uintptr_t g2_strata_node_count(const struct G2Strata *h);

// # Safety
// `h` must be a live handle.
uintptr_t g2_strata_edge_count(const struct G2Strata *h);

// Label of node `i`, e.g. `((0,1)_1,(0,1))`.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum G2Status g2_strata_node_label(const struct G2Strata *h, uintptr_t i, char **out);

// Edge `i` as node indices, from a stratum to a simple degeneration of it.
//
// # Safety
// `h` must be a live handle; `from` and `to` writable.
enum G2Status g2_strata_edge(const struct G2Strata *h, uintptr_t i, uintptr_t *from, uintptr_t *to);

// Graphviz rendering of the diagram.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum G2Status g2_strata_dot(const struct G2Strata *h, char **out);

// # Safety
// `h` must be NULL or a handle from `g2_strata_new` that has not been freed.
void g2_strata_free(struct G2Strata *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* G2_GAUDIN_H */
