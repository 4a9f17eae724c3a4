#ifndef WALKLAB_H
#define WALKLAB_H

/* C interface to the walklab check registry and exporters.
 *
 * Every function returns a walklab_status; on failure a message for the
 * calling thread is available from walklab_last_error(). Handles are opaque
 * and released with the matching *_free function. Strings handed out by a
 * handle stay valid until that handle is freed. */

#include <stddef.h>
#include <stdint.h>

#if defined(WALKLAB_BUILDING_LIBRARY)
#define WALKLAB_API __attribute__((visibility("default")))
#else
#define WALKLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum walklab_status {
  WALKLAB_OK = 0,
  WALKLAB_E_INVALID_ARGUMENT = 1,
  WALKLAB_E_DOMAIN = 2,
  WALKLAB_E_POLE = 3,
  WALKLAB_E_DIVERGENCE = 4,
  WALKLAB_E_NO_CONVERGENCE = 5,
  WALKLAB_E_BUDGET = 6,
  WALKLAB_E_IO = 7,
  WALKLAB_E_NOT_FOUND = 8,
  WALKLAB_E_INTERNAL = 99
} walklab_status;

typedef struct walklab_check_list walklab_check_list;
typedef struct walklab_results walklab_results;

typedef struct walklab_check_info {
  const char* id;
  const char* description;
  const char* reference;
  const char* status; /* "proven" or "conjectural" */
  const char* cost;   /* "fast", "medium" or "slow" */
} walklab_check_info;

typedef struct walklab_check_result {
  const char* id;
  const char* status;
  const char* lhs;
  const char* rhs;
  const char* error; /* empty unless the check threw */
  int digits_agreed;
  int min_digits;
  double elapsed_s;
  int pass;
} walklab_check_result;

WALKLAB_API const char* walklab_version(void);
WALKLAB_API const char* walklab_last_error(void);

/* Checks whose id matches the glob, sorted by id. */
WALKLAB_API walklab_status walklab_list_checks(const char* filter, walklab_check_list** out);
WALKLAB_API size_t walklab_check_list_size(const walklab_check_list* list);
WALKLAB_API walklab_status walklab_check_list_get(const walklab_check_list* list, size_t index,
                                                  walklab_check_info* out);
WALKLAB_API void walklab_check_list_free(walklab_check_list* list);

/* Runs matching checks at `digits` decimal digits on up to `jobs` threads.
 * A failing check does not make the call fail; inspect the results. */
WALKLAB_API walklab_status walklab_run_checks(const char* filter, int digits, uint64_t seed, int jobs,
                                              walklab_results** out);
WALKLAB_API size_t walklab_results_size(const walklab_results* results);
WALKLAB_API walklab_status walklab_results_get(const walklab_results* results, size_t index,
                                               walklab_check_result* out);
/* 1 when every result passed (and there is at least zero of them). */
WALKLAB_API int walklab_results_all_pass(const walklab_results* results);
/* format is "json" or "csv". */
WALKLAB_API walklab_status walklab_results_write(const walklab_results* results, const char* path,
                                                 const char* format);
WALKLAB_API void walklab_results_free(walklab_results* results);

/* CSV "n,a_n" for n = 1..n_max of a cusp form (f2, f2_tilde, f2_hat, f3, f4),
 * or "n,c_n" for n = 0..n_max of a named eta quotient. */
WALKLAB_API walklab_status walklab_export_coeffs(const char* form, size_t n_max, const char* path);
/* CSV "n,value" with the moment of order 2n, n = 0..n_max; walk is one of
 * w2, w3, w4, wtilde, what. */
WALKLAB_API walklab_status walklab_export_moments(const char* walk, unsigned n_max, const char* path);

#ifdef __cplusplus
}
#endif

#endif
