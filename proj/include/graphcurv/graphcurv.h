#ifndef GRAPHCURV_H
#define GRAPHCURV_H

/* C interface to the graph curvature library.
 *
 * All functions return a gcv_status; results come back through out
 * parameters.  Strings returned through char** are heap-allocated and
 * must be released with gcv_string_free.  A graph handle is immutable
 * once created and may be shared across threads; the per-thread error
 * message is set whenever a call fails.
 *
 * Rational parameters and results are decimal strings of the form
 * "p/q" or "p".  JSON-producing calls emit the same reports as the
 * command line tool in json format.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcv_status {
    GCV_OK = 0,
    GCV_PARSE_ERROR = 1,
    GCV_SELF_LOOP = 2,
    GCV_DUPLICATE_EDGE = 3,
    GCV_DISCONNECTED = 4,
    GCV_INVALID_PARAMETER = 5,
    GCV_ALPHA_OUT_OF_RANGE = 6,
    GCV_SAME_VERTEX = 7,
    GCV_TOO_LARGE = 8,
    GCV_NO_STABILIZATION = 9,
    GCV_NONPOSITIVE_THRESHOLD = 10,
    GCV_CONVERGENCE_FAILURE = 11,
    GCV_BAD_ARGUMENT = 12,
    GCV_INTERNAL_ERROR = 13
} gcv_status;

typedef struct gcv_graph gcv_graph;

/* Name of a status code ("Ok", "ParseError", ...). Static storage. */
const char* gcv_status_name(gcv_status status);

/* Message from the most recent failing call on this thread, or "". */
const char* gcv_last_error(void);

void gcv_string_free(char* s);

/* Constructors. Vertex labels in edge-list text are arbitrary
 * nonnegative integers; they are remapped to dense ids 0..n-1 in
 * order of first appearance. JSON input {"n":..,"edges":[[u,v],..]}
 * uses the ids directly. */
gcv_status gcv_graph_from_edge_list(const char* text, gcv_graph** out);
gcv_status gcv_graph_from_json(const char* text, gcv_graph** out);
/* family: path | cycle | complete | dumbbell | binary_tree | star |
 * pendant_hexagon. Each takes one size parameter (vertex count for
 * path/cycle/complete, clique size for dumbbell, depth for
 * binary_tree, leaf count for star); pendant_hexagon ignores it. */
gcv_status gcv_graph_generate(const char* family, int64_t param,
                              gcv_graph** out);
void gcv_graph_free(gcv_graph* g);

gcv_status gcv_graph_vertex_count(const gcv_graph* g, int64_t* out);
gcv_status gcv_graph_edge_count(const gcv_graph* g, int64_t* out);
gcv_status gcv_graph_edge(const gcv_graph* g, int64_t index, int64_t* u,
                          int64_t* v);
gcv_status gcv_graph_degree(const gcv_graph* g, int64_t vertex, int64_t* out);
gcv_status gcv_graph_distance(const gcv_graph* g, int64_t u, int64_t v,
                              int64_t* out);
gcv_status gcv_graph_diameter(const gcv_graph* g, int64_t* out);
gcv_status gcv_graph_to_edge_list(const gcv_graph* g, char** out);
gcv_status gcv_graph_to_json(const gcv_graph* g, char** out);

/* Curvature of the pair (u, v) as a rational string. */
gcv_status gcv_kappa_alpha(const gcv_graph* g, int64_t u, int64_t v,
                           const char* alpha, char** out);
gcv_status gcv_kappa_lly(const gcv_graph* g, int64_t u, int64_t v, char** out);

/* Edge-by-edge curvature report. alpha == NULL selects the limit
 * curvature, otherwise alpha is a rational in [0, 1). */
gcv_status gcv_curvature_json(const gcv_graph* g, const char* alpha,
                              char** out);

/* Integral curvature at threshold kappa0 (alpha == NULL for the limit
 * version) as a rational string. */
gcv_status gcv_integral_curvature(const gcv_graph* g, const char* kappa0,
                                  const char* alpha, char** out);

/* Theorem-bound report. kappa0 == NULL sweeps the graph's distinct
 * edge curvature values; alpha != NULL adds the finite-alpha variants
 * of the diameter and eigenvalue bounds. tol is the spectral-gap
 * cutoff (pass 0 for the default 1e-9). */
gcv_status gcv_bounds_json(const gcv_graph* g, const char* kappa0,
                           const char* alpha, double tol, char** out);

gcv_status gcv_spectrum_json(const gcv_graph* g, double tol, char** out);

/* Combined graph / curvature / spectrum / bounds report. */
gcv_status gcv_audit_json(const gcv_graph* g, const char* kappa0,
                          const char* alpha, double tol, char** out);

/* Runs the built-in verification suite; the report lists each check
 * with pass/fail and detail. *all_passed is 1 iff every check passed. */
gcv_status gcv_verify_paper_json(char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHCURV_H */
