/*
 * Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to lockedmat. Matroids and reports are opaque handles owned by
 * the caller and released with the matching *_free function. Every fallible
 * call returns an lkm_status; on failure the out-parameter is left untouched
 * and lkm_last_error_message() describes the problem for the calling thread.
 */

#ifndef LOCKEDMAT_H_
#define LOCKEDMAT_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LOCKEDMAT_BUILDING_SHARED)
#    define LKM_API __declspec(dllexport)
#  else
#    define LKM_API __declspec(dllimport)
#  endif
#else
#  define LKM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lkm_matroid lkm_matroid;
typedef struct lkm_report lkm_report;

typedef enum lkm_status {
  LKM_OK = 0,
  LKM_ERR_EMPTY_BASIS_FAMILY,
  LKM_ERR_UNEQUAL_BASIS_SIZES,
  LKM_ERR_EXCHANGE_AXIOM,
  LKM_ERR_FOREIGN_ELEMENT,
  LKM_ERR_EMPTY_GROUND_SET,
  LKM_ERR_DUPLICATE_LABEL,
  LKM_ERR_GROUND_SET_TOO_LARGE,
  LKM_ERR_LOOP_PRESENT,
  LKM_ERR_COLOOP_PRESENT,
  LKM_ERR_NOT_PROPER_SUBSET,
  LKM_ERR_NOT_CONNECTED,
  LKM_ERR_NOT_3_CONNECTED,
  LKM_ERR_DEGENERATE_POLYTOPE,
  LKM_ERR_DIMENSION_MISMATCH,
  LKM_ERR_BAD_PARAMETERS,
  LKM_ERR_NOT_CIRCUIT_HYPERPLANE,
  LKM_ERR_BASEPOINT_DEGENERATE,
  LKM_ERR_DISCONNECTED_GRAPH,
  LKM_ERR_UNKNOWN_NAME,
  LKM_ERR_PARSE,
  LKM_ERR_IO,
  LKM_ERR_CERTIFICATION_FAILED,
  LKM_ERR_NULL_ARGUMENT,
  LKM_ERR_INTERNAL
} lkm_status;

typedef enum lkm_polytope {
  LKM_POLYTOPE_BASES = 0,
  LKM_POLYTOPE_INDEPENDENCE = 1
} lkm_polytope;

/* Process exit codes used by the command-line tool. */
enum { LKM_EXIT_OK = 0, LKM_EXIT_MISMATCH = 1, LKM_EXIT_INPUT_ERROR = 2 };

LKM_API const char* lkm_version(void);
LKM_API const char* lkm_status_string(lkm_status status);
LKM_API const char* lkm_last_error_message(void);

/* Construction. validate != 0 checks the basis exchange axiom. */
LKM_API lkm_status lkm_matroid_load(const char* path, int validate,
                                    lkm_matroid** out);
LKM_API lkm_status lkm_matroid_parse(const char* text, int validate,
                                     lkm_matroid** out);
/* "MK4", "W3", "Q6", "P6", "V8" or "U_<r>_<n>". */
LKM_API lkm_status lkm_matroid_catalog(const char* name, lkm_matroid** out);
/* 2-sum along the elements labelled base_a and base_b. */
LKM_API lkm_status lkm_matroid_two_sum(const lkm_matroid* a,
                                       const char* base_a,
                                       const lkm_matroid* b,
                                       const char* base_b, lkm_matroid** out);
LKM_API void lkm_matroid_free(lkm_matroid* m);

/* Serialization. nonbases != 0 lists non-bases instead of bases. */
LKM_API lkm_status lkm_matroid_write(const lkm_matroid* m, const char* path,
                                     int nonbases);
LKM_API lkm_status lkm_matroid_serialize(const lkm_matroid* m, int nonbases,
                                         char** out);
LKM_API void lkm_string_free(char* s);

/* Queries. */
LKM_API const char* lkm_matroid_name(const lkm_matroid* m);
LKM_API size_t lkm_matroid_size(const lkm_matroid* m);
LKM_API size_t lkm_matroid_rank(const lkm_matroid* m);
LKM_API size_t lkm_matroid_basis_count(const lkm_matroid* m);
LKM_API lkm_status lkm_matroid_rank_of(const lkm_matroid* m,
                                       const char* const* labels, size_t count,
                                       int* out);
LKM_API lkm_status lkm_matroid_locked_numbers(const lkm_matroid* m, int* ell,
                                              int* rank, int* parallel_count,
                                              int* coparallel_count);

/* Commands. Each produces a report with text and JSON renderings. */
LKM_API lkm_status lkm_run_info(const lkm_matroid* m, lkm_report** out);
/* k < 0 asks for the full locked structure. */
LKM_API lkm_status lkm_run_locked(const lkm_matroid* m, int k,
                                  lkm_report** out);
LKM_API lkm_status lkm_run_facets(const lkm_matroid* m, lkm_polytope kind,
                                  lkm_report** out);
LKM_API lkm_status lkm_run_certify(const lkm_matroid* m, lkm_polytope kind,
                                   lkm_report** out);
LKM_API lkm_status lkm_run_mwbp(const lkm_matroid* m,
                                const char* const* weights, size_t count,
                                lkm_report** out);
LKM_API lkm_status lkm_run_uniform(const lkm_matroid* m, lkm_report** out);

LKM_API const char* lkm_report_text(const lkm_report* r);
LKM_API const char* lkm_report_json(const lkm_report* r);
/* LKM_EXIT_OK, or LKM_EXIT_MISMATCH for a failed certification/verdict. */
LKM_API int lkm_report_exit_code(const lkm_report* r);
LKM_API void lkm_report_free(lkm_report* r);

#ifdef __cplusplus
}
#endif

#endif /* LOCKEDMAT_H_ */
