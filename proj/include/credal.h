/* credal - exact decision making under credal uncertainty.
 *
 * C interface to the credal core: opaque handles, integer status codes,
 * results as heap-allocated JSON or fraction strings. Every char* returned
 * through an out-parameter must be released with crd_string_free. Exact
 * numbers cross the boundary as strings ("3/10", "0.3", "2") and are parsed
 * to arbitrary-precision rationals internally.
 *
 * On failure a function returns a nonzero crd_status and leaves a
 * human-readable message retrievable with crd_last_error (thread-local,
 * valid until the next failing call on the same thread).
 */
#ifndef CREDAL_H
#define CREDAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CRD_API __declspec(dllexport)
#else
#define CRD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crd_status {
    CRD_OK = 0,
    CRD_ERR_INVALID_ARGUMENT = 1, /* bad flag value, tolerance out of range, ... */
    CRD_ERR_PARSE = 2,            /* malformed problem document or number string */
    CRD_ERR_VIOLATION = 3,        /* verification found a counterexample */
    CRD_ERR_INTERNAL = 4
} crd_status;

typedef enum crd_choice_kind {
    CRD_CHOICE_OPTIMALITY = 0, /* exists a credal member making d best (up to slack) */
    CRD_CHOICE_MAXIMALITY = 1  /* no rival beats d under every credal member */
} crd_choice_kind;

/* A parsed decision problem: states, decisions, loss matrix, credal set. */
typedef struct crd_problem crd_problem;

CRD_API const char* crd_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
CRD_API const char* crd_last_error(void);

CRD_API void crd_string_free(char* text);

/* ---- problems ---------------------------------------------------------- */

/* Parses the JSON problem document (fields: states, decisions, loss,
 * credal; numeric entries as exact strings or integers). */
CRD_API crd_status crd_problem_from_json(const char* json_text, crd_problem** out);

CRD_API void crd_problem_free(crd_problem* problem);

/* Canonical serialization; reading it back gives an identical problem. */
CRD_API crd_status crd_problem_to_json(const crd_problem* problem, char** out_json);

CRD_API crd_status crd_problem_counts(const crd_problem* problem, size_t* out_states,
                                      size_t* out_decisions, size_t* out_credal_members);

/* Largest payoff range over the decisions, as a fraction string. */
CRD_API crd_status crd_problem_range_scale(const crd_problem* problem, char** out_rational);

/* ---- choice ------------------------------------------------------------ */

/* Chosen decisions at slack gamma * range_scale (gamma >= 0, exact string).
 * Result JSON: {"kind": "...", "gamma": "...", "range_scale": "...",
 * "chosen": ["d1", ...]} with decisions in input order. */
CRD_API crd_status crd_choose(const crd_problem* problem, crd_choice_kind kind,
                              const char* gamma, char** out_json);

/* ---- discretization ---------------------------------------------------- */

/* Coarsens the problem to cell states at loss precision eps (0 < eps < 1/2)
 * and rounds the credal set onto a simplex grid at L1 precision delta > 0.
 * out_problem_json holds the coarse problem (states "A1", "A2", ...);
 * out_report_json holds sizes, bounds, the grid denominator, and the
 * re-checked closeness certificates. */
CRD_API crd_status crd_discretize(const crd_problem* problem, const char* eps,
                                  const char* delta, char** out_problem_json,
                                  char** out_report_json);

/* ---- size bounds and the budget curve ---------------------------------- */

/* log10 of the partition size bound (1 + 1/eps)^d_count. */
CRD_API crd_status crd_partition_size_bound(double eps, unsigned d_count, double* out);

/* log10 of the credal size bound C(n(1 + 1/delta), n - 1). */
CRD_API crd_status crd_credal_size_bound(uint64_t n_cells, double delta, double* out);

/* Point of the fixed-budget curve eps + delta = gamma_star:
 * log10 C(1/(eps^d * delta), 1/eps^d). Requires 0 < eps < gamma_star. */
CRD_API crd_status crd_curve_point(double gamma_star, unsigned d_count, double eps,
                                   double* out);

/* ---- randomized verification ------------------------------------------- */

typedef struct crd_verify_options {
    uint64_t trials;       /* >= 1 */
    uint64_t seed;
    unsigned max_states;    /* largest generated state count */
    unsigned max_decisions; /* largest generated decision count */
} crd_verify_options;

/* Runs the exact randomized property suite (discretization certificates,
 * expectation error bounds, choice-set containments, choice algebra).
 * Returns CRD_OK when every property holds; CRD_ERR_VIOLATION when a
 * counterexample was found (the report carries it for replay). The report
 * is byte-identical across runs for fixed options. */
CRD_API crd_status crd_verify(const crd_verify_options* options, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* CREDAL_H */
