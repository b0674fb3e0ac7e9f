#ifndef LRMSO_H
#define LRMSO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LrmsoStatus {
  LRMSO_STATUS_OK = 0,
  LRMSO_STATUS_NULL_POINTER = 1,
  LRMSO_STATUS_INVALID_UTF8 = 2,
  LRMSO_STATUS_MALFORMED_INPUT = 3,
  LRMSO_STATUS_VERTEX_OUT_OF_RANGE = 4,
  LRMSO_STATUS_BAD_PARAMETER = 5,
  LRMSO_STATUS_BAD_FORMULA = 6,
  LRMSO_STATUS_TOO_LARGE = 7,
  LRMSO_STATUS_CAP_EXCEEDED = 8,
  LRMSO_STATUS_INTERNAL = 9,
} LrmsoStatus;

typedef enum LrmsoStrategy {
  LRMSO_STRATEGY_BRUTE = 0,
  LRMSO_STRATEGY_SUFFIX = 1,
} LrmsoStrategy;

/**
 * Opaque graph handle.
 */
typedef struct LrmsoGraph LrmsoGraph;

typedef struct LrmsoRankMeasures {
  size_t rk_f2;
  size_t rk_q;
  size_t dv;
} LrmsoRankMeasures;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph from its JSON form and stores a new handle in `*out`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LrmsoStatus lrmso_graph_from_json(const char *json, struct LrmsoGraph **out);

/**
 * Builds a graph from a named family; `seed` is used only when `has_seed` is true.
 *
 * # Safety
 * `family` must be NUL-terminated, `params` must point to `nparams` doubles
 * (or be null when `nparams` is 0) and `out` must be valid.
 */
enum LrmsoStatus lrmso_graph_generate(const char *family,
                                      const double *params,
                                      size_t nparams,
                                      uint64_t seed,
                                      bool has_seed,
                                      struct LrmsoGraph **out);

/**
 * # Safety
 * `g` must be null or a handle returned by this library and not yet freed.
 */
void lrmso_graph_free(struct LrmsoGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t lrmso_graph_order(const struct LrmsoGraph *g);

/**
 * Cutrank over F2 of the vertex set given as `len` indices.
 *
 * # Safety
 * `g` must be live, `set` must point to `len` indices and `out` must be valid.
 */
enum LrmsoStatus lrmso_cutrank(const struct LrmsoGraph *g,
                               const size_t *set,
                               size_t len,
                               size_t *out);

/**
 * F2 rank, rational rank and diversity of the cut of the given set.
 *
 * # Safety
 * As for [`lrmso_cutrank`].
 */
enum LrmsoStatus lrmso_rank_measures(const struct LrmsoGraph *g,
                                     const size_t *set,
                                     size_t len,
                                     struct LrmsoRankMeasures *out);

/**
 * Evaluates a sentence (with optional flip declarations) on `g`.
 *
 * # Safety
 * `g` must be live, `formula` NUL-terminated and `out` valid.
 */
enum LrmsoStatus lrmso_check(const struct LrmsoGraph *g,
                             const char *formula,
                             enum LrmsoStrategy how,
                             bool *out);

/**
 * All vertex sets of cutrank at most `r` as a JSON array of index arrays.
 * A `cap` of 0 selects the default. Free the result with [`lrmso_string_free`].
 *
 * # Safety
 * `g` must be live and `out` valid.
 */
enum LrmsoStatus lrmso_enum_lowrank_json(const struct LrmsoGraph *g,
                                         size_t r,
                                         enum LrmsoStrategy how,
                                         size_t cap,
                                         char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void lrmso_string_free(char *s);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *lrmso_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LRMSO_H */
