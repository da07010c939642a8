/* C interface to the whitehead verification engine.
**
** All functions that produce output allocate a NUL-terminated string into
** *out; release it with wh_string_free.  Failures return a nonzero status
** and leave a message readable through wh_last_error on the session.
** Sessions are not thread-safe; use one per thread. */

#ifndef WHITEHEAD_H
#define WHITEHEAD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wh_session wh_session;

typedef enum wh_status {
    WH_OK = 0,
    WH_ERR_INVALID = 1, /* bad argument or unusable input element */
    WH_ERR_PARSE = 2,   /* element text failed to parse */
    WH_ERR_FUEL = 3,    /* rewrite fuel or stabilization budget exhausted */
    WH_ERR_IO = 4,      /* cache or file system trouble */
    WH_ERR_INTERNAL = 5 /* invariant violation; please report */
} wh_status;

const char* wh_version(void);

wh_session* wh_session_new(void);
void wh_session_free(wh_session* s);

/* Message describing the most recent failure on this session. */
const char* wh_last_error(const wh_session* s);

wh_status wh_set_fuel(wh_session* s, unsigned long long fuel);
wh_status wh_set_cache_dir(wh_session* s, const char* dir); /* NULL disables */
wh_status wh_set_jobs(wh_session* s, int jobs);

/* Admissible-basis table per degree (JSON). */
wh_status wh_basis_json(wh_session* s, int k, int max_degree, char** out);

/* Dimension table per degree (JSON). */
wh_status wh_poincare_json(wh_session* s, int k, int max_degree, char** out);

/* The idempotent matrix on one graded piece (JSON). */
wh_status wh_idempotent_json(wh_session* s, int k, int degree, char** out);

/* Matrix of "d" or "delta" on indecomposables in one bidegree (JSON). */
wh_status wh_e0_matrix_json(wh_session* s, const char* which, int k, int degree,
                            long long weight, char** out);

/* Apply "d" or "delta" to an element written in the shared grammar; the
** result is an element in the same grammar.  e0 != 0 enables the graded
** multiplicative extension of delta. */
wh_status wh_apply(wh_session* s, const char* which, int k, const char* element,
                   int e0, char** out);

/* Run a verification ("chain", "homotopy", "exactness", "idempotent",
** "alpha" or "all").  *out_pass reports the verdict; *out receives the
** certificate JSON.  A failed verification still returns WH_OK.
**
** Certificate schema (stable key order):
**   { "version", "generated_at", "parameters": {...},
**     "checks": [ {"check","k","degree","weight","dim","rank","pass",...} ],
**     "verdict": "pass" | "fail" }
** generated_at is the only timestamp; everything else is deterministic. */
wh_status wh_verify_json(wh_session* s, const char* check, int max_k,
                         int max_degree, long long max_weight, int* out_pass,
                         char** out);

void wh_string_free(char* p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WHITEHEAD_H */
