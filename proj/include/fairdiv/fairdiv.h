/* C interface to the fairdiv engine. All strings returned through char**
 * out-parameters are owned by the caller and released with fd_string_free.
 * Handles are released with their matching *_free function. */
#ifndef FAIRDIV_H
#define FAIRDIV_H

#include <stdint.h>

#if defined(_WIN32)
#define FD_API __declspec(dllexport)
#else
#define FD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fd_instance fd_instance;
typedef struct fd_allocation fd_allocation;

typedef enum fd_status {
  FD_OK = 0,
  FD_ERR_INPUT = 1,      /* malformed or inconsistent input, bad argument */
  FD_ERR_HYPOTHESIS = 2, /* instance outside the algorithm's assumptions */
  FD_ERR_TOO_LARGE = 3,  /* exhaustive search or check over its size limit */
  FD_ERR_INTERNAL = 4    /* invariant breach; a bug or a counterexample */
} fd_status;

FD_API const char* fd_version(void);

/* Message and error-code name of the last failure on this thread. */
FD_API const char* fd_last_error(void);
FD_API const char* fd_last_error_code(void);

FD_API void fd_string_free(char* s);

FD_API fd_status fd_instance_parse(const char* json, fd_instance** out);
/* family as in "tiered(3,multiplicative)"; values drawn from [lo, hi]. */
FD_API fd_status fd_instance_generate(const char* family, int n, int m, int lo, int hi, uint64_t seed,
                                      fd_instance** out);
FD_API fd_status fd_instance_to_json(const fd_instance* inst, char** out);
FD_API int fd_instance_agents(const fd_instance* inst);
FD_API int fd_instance_items(const fd_instance* inst);
FD_API void fd_instance_free(fd_instance* inst);

FD_API fd_status fd_allocation_parse(const fd_instance* inst, const char* json, fd_allocation** out);
FD_API fd_status fd_allocation_to_json(const fd_allocation* alloc, char** out);
FD_API void fd_allocation_free(fd_allocation* alloc);

/* Runs a solver and writes the solver JSON document. When trace_jsonl is
 * non-null it receives one JSON line per round or tier. */
FD_API fd_status fd_solve(const fd_instance* inst, const char* algorithm, char** result_json, char** trace_jsonl);

/* property: ef, ef1, efx, alpha-ef:<p/q>, alpha-efx:<p/q> or max-alpha.
 * verdict receives 1 or 0; max-alpha always reports 1. */
FD_API fd_status fd_verify(const fd_instance* inst, const fd_allocation* alloc, const char* property,
                           char** report_json, int* verdict);

/* mode: exists-efx or best-alpha. */
FD_API fd_status fd_oracle(const fd_instance* inst, const char* mode, char** result_json);

#ifdef __cplusplus
}
#endif

#endif /* FAIRDIV_H */
