/* C interface to the orbit/verification core. All functions return a status
 * code; on failure gcm_last_error() holds a thread-local message describing
 * what went wrong. Strings returned through char** are heap-allocated and must
 * be released with gcm_string_free(). Handles are opaque and must be released
 * with their matching *_free(). */
#ifndef GCMLAB_CAPI_H
#define GCMLAB_CAPI_H

#include <stdint.h>

#if defined(_WIN32)
#define GCM_API __declspec(dllexport)
#else
#define GCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcm_status {
  GCM_OK = 0,
  GCM_ERR_INVALID_ARGUMENT = 1, /* bad sizes, ranges, names, null pointers */
  GCM_ERR_PARSE = 2,            /* malformed JSON input */
  GCM_ERR_DEGENERATE = 3,       /* input outside the supported numerical regime */
  GCM_ERR_UNKNOWN_LABEL = 4,    /* no such family member / suite / topic */
  GCM_ERR_INTERNAL = 5          /* unexpected failure */
} gcm_status;

GCM_API const char* gcm_version(void);
GCM_API const char* gcm_status_name(gcm_status s);

/* Message for the most recent failure on this thread; empty string if none.
 * The pointer stays valid until the next failing call on the same thread. */
GCM_API const char* gcm_last_error(void);

GCM_API void gcm_string_free(char* s);

/* ---- interleaving patterns ------------------------------------------- */

/* kind is "gl" or "sp"; top is the top row (length len >= 1). */
GCM_API gcm_status gcm_pattern_count(const char* kind, const long long* top, int len,
                                     unsigned long long* out_count);
GCM_API gcm_status gcm_weyl_dim(const char* kind, const long long* top, int len,
                                unsigned long long* out_dim);
/* JSON array of patterns, each a list of rows (top to bottom). */
GCM_API gcm_status gcm_pattern_list_json(const char* kind, const long long* top, int len,
                                         char** out_json);

/* ---- orbit points ----------------------------------------------------- */

typedef struct gcm_orbit gcm_orbit;

/* Samples a random point with the given spectrum (chamber order, strictly
 * decreasing, nonpositive) and generic nested-block spectra. */
GCM_API gcm_status gcm_orbit_sample(const double* lambda, int n, uint64_t seed, gcm_orbit** out);

/* Builds a point from a serialized quaternionic matrix
 * {"n": n, "entries": [[re, im_i, im_j, im_k], ...]} (row-major); the matrix
 * must be skew-hermitian and is diagonalized on construction. */
GCM_API gcm_status gcm_orbit_from_matrix_json(const char* json_text, gcm_orbit** out);

GCM_API void gcm_orbit_free(gcm_orbit* o);

GCM_API gcm_status gcm_orbit_dim(const gcm_orbit* o, int* out_n);
/* Spectrum in chamber order; len must equal the dimension. */
GCM_API gcm_status gcm_orbit_lambda(const gcm_orbit* o, double* out, int len);
GCM_API gcm_status gcm_orbit_matrix_json(const gcm_orbit* o, char** out_json);
/* Report with every family value at this point. */
GCM_API gcm_status gcm_orbit_family_json(const gcm_orbit* o, char** out_json);
/* One family member by label, e.g. "thimm(1,1)", "g(0,1)", "g_last(0)". */
GCM_API gcm_status gcm_orbit_eval(const gcm_orbit* o, const char* label, double* out_value);

/* ---- verification suites ---------------------------------------------- */

/* name: "commute" | "independence" | "reduced" | "patterns" | "yangian" |
 * "all". config_json: {"n", "lambda", "trials", "tol", "fd_step", "order",
 * "seed"}, all optional (NULL or "{}" for defaults). The report is serialized
 * deterministically: identical config and seed give identical bytes. */
GCM_API gcm_status gcm_run_suite(const char* name, const char* config_json, char** out_json);

/* ---- documentation ----------------------------------------------------- */

GCM_API gcm_status gcm_explain(const char* label, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* GCMLAB_CAPI_H */
