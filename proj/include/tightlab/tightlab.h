#ifndef TIGHTLAB_H
#define TIGHTLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(TIGHTLAB_BUILDING_LIBRARY)
#define TL_API __attribute__((visibility("default")))
#else
#define TL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
  TL_OK = 0,
  TL_INVALID_ARGUMENT = 1,
  TL_OUT_OF_RANGE = 2,
  TL_PARSE = 3,
  TL_GUARD_EXCEEDED = 4,
  TL_CERTIFICATE_VIOLATION = 5,
  TL_IO = 6,
  TL_INTERNAL = 7
} tl_status;

typedef enum tl_outcome {
  TL_FOUND = 0,
  TL_EXHAUSTED_NONE = 1,
  TL_TIMEOUT = 2
} tl_outcome;

/* Immutable k-uniform hypergraph on vertices 0..n-1, n <= 64. */
typedef struct tl_hypergraph tl_hypergraph;

/* Message of the last failing call on this thread; never NULL. */
TL_API const char* tl_last_error(void);
TL_API const char* tl_version(void);

/* Strings returned through char** outputs are owned by the caller. */
TL_API void tl_string_free(char* s);

/* Rationals cross the boundary as "p/q" strings. Reports are JSON objects. */

TL_API tl_status tl_hypergraph_create(int n, int k, const int* vertices, size_t edge_count,
                                      tl_hypergraph** out);
TL_API tl_status tl_hypergraph_parse(const char* text, tl_hypergraph** out);
TL_API tl_status tl_hypergraph_load(const char* path, tl_hypergraph** out);
TL_API tl_status tl_hypergraph_save(const tl_hypergraph* h, const char* path);
TL_API tl_status tl_hypergraph_to_json(const tl_hypergraph* h, char** out);
TL_API void tl_hypergraph_free(tl_hypergraph* h);
TL_API int tl_hypergraph_n(const tl_hypergraph* h);
TL_API int tl_hypergraph_k(const tl_hypergraph* h);
TL_API size_t tl_hypergraph_edge_count(const tl_hypergraph* h);
/* Writes the k vertices of edge i (canonical order) into vertices. */
TL_API tl_status tl_hypergraph_edge(const tl_hypergraph* h, size_t i, int* vertices);

TL_API tl_status tl_gen_complete(int n, int k, tl_hypergraph** out);
TL_API tl_status tl_gen_tight_cycle(int n, int k, tl_hypergraph** out);
TL_API tl_status tl_gen_random(int n, int k, const char* p, uint64_t seed, tl_hypergraph** out);
TL_API tl_status tl_gen_space_barrier(int n, int k, int d, int allow_codegree, tl_hypergraph** out);
TL_API tl_status tl_gen_random_min_degree(int n, int k, int d, const char* delta, uint64_t seed,
                                          tl_hypergraph** out);

/* Size, density and minimum relative d-degree for every 1 <= d <= k-1. */
TL_API tl_status tl_info(const tl_hypergraph* h, char** report);
TL_API tl_status tl_components(const tl_hypergraph* h, char** report);
/* Closed tight walk of length congruent to residue mod k, shortened. */
TL_API tl_status tl_walk_mod(const tl_hypergraph* h, int residue, char** report);
/* Switcher of the graph and the closed walk it induces. */
TL_API tl_status tl_switcher(const tl_hypergraph* h, char** report);

/* b: n weights, or NULL for all ones. */
TL_API tl_status tl_matching(const tl_hypergraph* h, const char* const* b, char** report);
TL_API tl_status tl_robust(const tl_hypergraph* h, const char* gamma, int corner_guard, int allow_sampling,
                           uint64_t seed, char** report);
TL_API tl_status tl_lifting(const tl_hypergraph* h, int d, const char* m, const char* const* b,
                            char** report);

/* strategy: "max-ratio" or "max-edges". */
TL_API tl_status tl_vicinity(const tl_hypergraph* r, int d, const char* strategy, const char* gamma,
                             const char* delta, char** report);
TL_API tl_status tl_framework(const tl_hypergraph* r, const tl_hypergraph* h, const char* alpha,
                              const char* gamma, const char* delta, int allow_sampling, char** report);
TL_API tl_status tl_perturbed(const tl_hypergraph* r, int d, const char* alpha, const char* delta,
                              char** report);
TL_API tl_status tl_clean(const tl_hypergraph* r, const tl_hypergraph* i, int d, const char* beta,
                          tl_hypergraph** r_clean, char** report);

TL_API tl_status tl_hamilton(const tl_hypergraph* h, uint64_t max_nodes, double max_seconds,
                             tl_outcome* outcome, char** report);
TL_API tl_status tl_cycle(const tl_hypergraph* h, int length, uint64_t max_nodes, double max_seconds,
                          tl_outcome* outcome, char** report);
/* target: k distinct vertices. */
TL_API tl_status tl_gadget(const tl_hypergraph* g, const int* target, uint64_t seed, tl_outcome* outcome,
                           char** report);

TL_API tl_status tl_thresholds(int k, int d, char** report);
/* config: JSON object with k, d, n (array), grid (array of "p/q"), trials,
   seed, budget_nodes, budget_seconds, max_n, anchors. */
TL_API tl_status tl_scan_threshold(const char* config, char** rows_csv, char** cells_csv);
/* config: JSON object with ell, n, grid, trials, seed. */
TL_API tl_status tl_eg_scan(const char* config, char** rows_csv, char** report);

#ifdef __cplusplus
}
#endif

#endif
