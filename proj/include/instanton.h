#ifndef INSTANTON_H
#define INSTANTON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INST_API __declspec(dllexport)
#else
#define INST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum inst_status {
  INST_OK = 0,
  INST_ERR_INVALID_ARGUMENT = 1,
  INST_ERR_PARSE = 2,
  INST_ERR_RANK_DEFICIENT = 3,
  INST_ERR_ZERO_FUNCTIONAL = 4,
  INST_ERR_NEGATIVE_RESULT = 5,
  INST_ERR_RANK_DROP_ON_SUBSPACE = 6,
  INST_ERR_DEGENERATE_LINE = 7,
  INST_ERR_FIELD_TOO_SMALL = 8,
  INST_ERR_RETRY_LIMIT = 9,
  INST_ERR_DEPENDENT_F = 10,
  INST_ERR_NOT_A_LINE = 11,
  INST_ERR_TIME_BUDGET = 12,
  INST_ERR_NULL_POINTER = 13,
  INST_ERR_INTERNAL = 14
} inst_status;

typedef enum inst_suite {
  INST_SUITE_THOOFT_VERIFY = 0,
  INST_SUITE_THOOFT_OTTAVIANI = 1,
  INST_SUITE_RS_VERIFY = 2,
  INST_SUITE_RS_EPSILON = 3,
  INST_SUITE_REPORT = 4,
  INST_SUITE_SPLITTING = 5
} inst_suite;

typedef enum inst_datum_kind {
  INST_DATUM_MONAD = 0,   /* {n, k, tensor} */
  INST_DATUM_THOOFT = 1,  /* {n, k, a, l, lprime} */
  INST_DATUM_RS = 2       /* {n, k, f, h} */
} inst_datum_kind;

typedef struct inst_config inst_config;
typedef struct inst_report inst_report;
typedef struct inst_monad inst_monad;

INST_API const char* inst_version(void);
INST_API const char* inst_status_name(inst_status s);
/* Message of the last failing call on this thread; empty if none. */
INST_API const char* inst_last_error(void);
INST_API void inst_string_free(char* s);

INST_API inst_status inst_config_new(inst_config** out);
INST_API void inst_config_free(inst_config* c);
INST_API inst_status inst_config_set_instance(inst_config* c, unsigned n, unsigned k);
INST_API inst_status inst_config_set_prime(inst_config* c, uint32_t prime);
INST_API inst_status inst_config_set_seed(inst_config* c, uint64_t seed);
INST_API inst_status inst_config_set_trials(inst_config* c, int trials);
INST_API inst_status inst_config_set_budget(inst_config* c, double seconds);
/* NULL clears the input datum. */
INST_API inst_status inst_config_set_input_json(inst_config* c, const char* json);

INST_API inst_status inst_run_suite(const inst_config* c, inst_suite suite, inst_report** out);
INST_API int inst_report_passed(const inst_report* r);
INST_API size_t inst_report_check_count(const inst_report* r);
/* Caller frees *out with inst_string_free. */
INST_API inst_status inst_report_render_json(const inst_report* r, int timings, char** out);
INST_API inst_status inst_report_render_markdown(const inst_report* r, int timings, char** out);
INST_API void inst_report_free(inst_report* r);

INST_API inst_status inst_monad_from_json(uint32_t prime, inst_datum_kind kind, const char* json, inst_monad** out);
INST_API void inst_monad_free(inst_monad* m);
INST_API inst_status inst_monad_shape(const inst_monad* m, size_t* n, size_t* k);
INST_API inst_status inst_monad_is_symplectic(const inst_monad* m, int* out);
INST_API inst_status inst_monad_syzygy_dim(const inst_monad* m, unsigned degree, size_t* out);
INST_API inst_status inst_monad_h0_twist(const inst_monad* m, unsigned degree, int trials, uint64_t seed, size_t* out);
INST_API inst_status inst_monad_to_json(const inst_monad* m, char** out);

#ifdef __cplusplus
}
#endif

#endif
