/* C interface to the finite-set theory kernel.
 *
 * All state lives behind opaque handles; every entry point reports
 * problems through error codes (or a null return) plus a thread-local
 * message readable via etcs_last_error(). Strings returned by the
 * library are owned by the caller and released with etcs_string_free().
 */

#ifndef ETCS_H
#define ETCS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ETCS_API_VERSION 1

typedef enum etcs_status {
  ETCS_OK = 0,
  ETCS_E_INVALID_ARGUMENT = 1,
  ETCS_E_PARSE = 2,     /* script had parse or binding errors */
  ETCS_E_INTERNAL = 3,
} etcs_status;

typedef enum etcs_format {
  ETCS_FORMAT_TEXT = 0,
  ETCS_FORMAT_JSON = 1,
} etcs_format;

/* A session holds execution configuration (natural-number bound,
 * verifier sizes, sampling seed, timing). */
typedef struct etcs_session etcs_session;

/* The outcome of running a script or the axiom suite: reports plus
 * diagnostics, queryable and renderable. */
typedef struct etcs_result etcs_result;

const char* etcs_version(void);

/* Thread-local message describing the most recent failure ("" if none). */
const char* etcs_last_error(void);

etcs_session* etcs_session_new(void);
void etcs_session_free(etcs_session* session);

int etcs_session_set_nat_bound(etcs_session* session, uint64_t bound);
int etcs_session_set_size_limit(etcs_session* session, int size_limit);
int etcs_session_set_seed(etcs_session* session, uint64_t seed);
int etcs_session_set_timing(etcs_session* session, int enabled);

/* Parses and executes a script. Returns NULL only on invalid arguments
 * or internal failure; scripts that fail to parse still yield a result
 * (with diagnostics and exit status 2). source_name labels diagnostics. */
etcs_result* etcs_run_script(etcs_session* session, const char* source,
                             const char* source_name);

/* Runs the full verification suite (every axiom plus the derived
 * theorems). size_limit <= 0 uses the session's configured limit. */
etcs_result* etcs_check_axioms(etcs_session* session, int size_limit);

/* Concatenates two results (reports and diagnostics, in order). */
etcs_result* etcs_result_merge(const etcs_result* a, const etcs_result* b);

void etcs_result_free(etcs_result* result);

/* 0 success, 1 failed assert/check, 2 parse or execution error. */
int etcs_result_status(const etcs_result* result);

int64_t etcs_result_report_count(const etcs_result* result);
int64_t etcs_result_diagnostic_count(const etcs_result* result);

/* Rendered reports in the requested format; NULL on invalid input. */
char* etcs_result_render(const etcs_result* result, etcs_format format);

/* Rendered diagnostics ("" when there are none). */
char* etcs_result_diagnostics(const etcs_result* result);

void etcs_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ETCS_H */
