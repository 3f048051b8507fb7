#ifndef ECCMAT_H
#define ECCMAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum EccStatus {
  ECC_STATUS_OK = 0,
  ECC_STATUS_NULL_POINTER = 1,
  ECC_STATUS_INVALID_ARGUMENT = 2,
  ECC_STATUS_PARSE_ERROR = 3,
  ECC_STATUS_DISCONNECTED = 4,
  ECC_STATUS_NUMERIC_ERROR = 5,
  ECC_STATUS_OUT_OF_RANGE = 6,
} EccStatus;

// Opaque analysis handle: metric, eccentricity matrix, profile, spectrum
// and exact characteristic polynomial of one connected graph.
typedef struct EccAnalysis EccAnalysis;

// Opaque graph handle.
typedef struct EccGraph EccGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a graph6 string into a new graph handle.
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum EccStatus eccmat_graph_parse_g6(const char *text, struct EccGraph **out);

// Builds a named family from a spec string such as "star:5" or
// "complete_bipartite:2,3".
//
// # Safety
// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
enum EccStatus eccmat_graph_from_family(const char *spec, struct EccGraph **out);

// Parses an edge-list document (optional "n" header, "u v" lines).
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum EccStatus eccmat_graph_parse_edge_list(const char *text, struct EccGraph **out);

// # Safety
// `graph` must come from this library and not have been freed.
void eccmat_graph_free(struct EccGraph *graph);

// # Safety
// `graph` must be a live handle.
uintptr_t eccmat_graph_order(const struct EccGraph *graph);

// # Safety
// `graph` must be a live handle.
uintptr_t eccmat_graph_edge_count(const struct EccGraph *graph);

// # Safety
// `graph` must be a live handle.
int32_t eccmat_graph_is_connected(const struct EccGraph *graph);

// Writes the graph6 encoding; free the result with [`eccmat_string_free`].
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum EccStatus eccmat_graph_to_g6(const struct EccGraph *graph, char **out);

// Runs the full analysis (metric, eccentricity matrix, spectrum, exact
// characteristic polynomial) of a connected graph.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum EccStatus eccmat_analyze(const struct EccGraph *graph, struct EccAnalysis **out);

// # Safety
// `analysis` must come from [`eccmat_analyze`] and not have been freed.
void eccmat_analysis_free(struct EccAnalysis *analysis);

// # Safety
// `analysis` must be a live handle.
uintptr_t eccmat_diameter(const struct EccAnalysis *analysis);

// # Safety
// `analysis` must be a live handle.
uintptr_t eccmat_radius(const struct EccAnalysis *analysis);

// # Safety
// `analysis` must be a live handle.
double eccmat_spectral_radius(const struct EccAnalysis *analysis);

// # Safety
// `analysis` must be a live handle.
double eccmat_energy(const struct EccAnalysis *analysis);

// # Safety
// `analysis` must be a live handle.
uint64_t eccmat_epsilon_wiener(const struct EccAnalysis *analysis);

// # Safety
// `analysis` must be a live handle.
int32_t eccmat_is_diametrical(const struct EccAnalysis *analysis);

// # Safety
// `analysis` must be a live handle.
int32_t eccmat_is_epsilon_regular(const struct EccAnalysis *analysis);

// Entry (i, j) of the eccentricity matrix, or u64::MAX when out of range.
//
// # Safety
// `analysis` must be a live handle.
uint64_t eccmat_eps_entry(const struct EccAnalysis *analysis, uintptr_t i, uintptr_t j);

// Entry (i, j) of the distance matrix, or u64::MAX when out of range.
//
// # Safety
// `analysis` must be a live handle.
uint64_t eccmat_dist_entry(const struct EccAnalysis *analysis, uintptr_t i, uintptr_t j);

// Eigenvalues sorted descending; index out of range yields NaN.
//
// # Safety
// `analysis` must be a live handle.
double eccmat_eigenvalue(const struct EccAnalysis *analysis, uintptr_t i);

// Exact determinant as a decimal string; free with [`eccmat_string_free`].
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum EccStatus eccmat_determinant_string(const struct EccAnalysis *analysis, char **out);

// Exact characteristic polynomial coefficient of λ^k as a decimal string.
//
// # Safety
// `analysis` must be a live handle and `out` a valid pointer.
enum EccStatus eccmat_char_poly_coeff_string(const struct EccAnalysis *analysis,
                                             uintptr_t k,
                                             char **out);

// # Safety
// `s` must have been returned by this library and not freed before.
void eccmat_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ECCMAT_H */
