#ifndef PROMREP_PROMREP_H
#define PROMREP_PROMREP_H

/* C interface to the promrep library. Every call returns a promrep_status;
 * on failure promrep_last_error() describes the problem (per thread).
 * Strings returned through char** are owned by the caller and released with
 * promrep_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(PROMREP_BUILDING_LIBRARY)
#define PROMREP_API __attribute__((visibility("default")))
#else
#define PROMREP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum promrep_status {
  PROMREP_OK = 0,
  PROMREP_E_PARSE = 1,
  PROMREP_E_REFERENCE = 2,
  PROMREP_E_KIND = 3,
  PROMREP_E_CAP = 4,
  PROMREP_E_BOUNDS = 5,
  PROMREP_E_ARGUMENT = 6,
  PROMREP_E_INVALID_INPUT = 7,
  PROMREP_E_CARRIER = 8,
  PROMREP_E_INTERNAL = 9
} promrep_status;

typedef struct promrep_workspace promrep_workspace;

PROMREP_API const char* promrep_version(void);
PROMREP_API const char* promrep_last_error(void);
PROMREP_API const char* promrep_status_name(promrep_status status);
PROMREP_API void promrep_string_free(char* s);

PROMREP_API promrep_status promrep_workspace_from_file(const char* path,
                                                       promrep_workspace** out);
PROMREP_API promrep_status promrep_workspace_from_string(const char* text,
                                                         promrep_workspace** out);
PROMREP_API void promrep_workspace_free(promrep_workspace* ws);
PROMREP_API promrep_status promrep_workspace_to_string(const promrep_workspace* ws,
                                                       char** out);

/* *holds is 1 when the named structure satisfies its axioms. */
PROMREP_API promrep_status promrep_check(const promrep_workspace* ws, const char* name,
                                         int* holds, char** report);

/* functor: R, M, MR, RM, unit, counit, psi, tee. aux may be NULL. cap 0 means
 * the default powerset cap. */
PROMREP_API promrep_status promrep_apply(const promrep_workspace* ws, const char* functor,
                                         const char* name, const char* aux, size_t cap,
                                         promrep_workspace** out);

typedef struct promrep_verify_options {
  const char* law;
  int exhaustive;           /* 0: seeded */
  const size_t* max_size;   /* NULL: law default */
  size_t max_size_count;
  uint64_t trials;
  uint64_t seed;
  unsigned jobs;
  int pretty;
  size_t powerset_cap;
} promrep_verify_options;

PROMREP_API void promrep_verify_options_init(promrep_verify_options* opts);

/* summary receives the report; witness receives the witness JSON or NULL when
 * the law holds. elapsed_ms may be NULL. */
PROMREP_API promrep_status promrep_verify(const promrep_verify_options* opts, int* holds,
                                          char** summary, char** witness,
                                          uint64_t* elapsed_ms);

PROMREP_API promrep_status promrep_laws(char** listing);
PROMREP_API size_t promrep_law_count(void);

/* *reproduced is 1 when re-checking the witness yields the same violation. */
PROMREP_API promrep_status promrep_replay_witness(const char* witness_json, size_t cap,
                                                  int* reproduced);

#ifdef __cplusplus
}
#endif

#endif
