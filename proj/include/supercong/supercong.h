/*
 * C interface to the supercong library.
 *
 * Every call returns an sc_status; on failure sc_last_error() holds a
 * message for the calling thread until its next failing call. Handles are
 * opaque and owned by the caller: each *_create is paired with *_destroy.
 * Residues are returned as canonical representatives in [0, p^k).
 */
#ifndef SUPERCONG_H
#define SUPERCONG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SUPERCONG_BUILDING)
#    define SC_API __declspec(dllexport)
#  else
#    define SC_API __declspec(dllimport)
#  endif
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_INVALID_ARGUMENT = 1,
    SC_ERR_NOT_INVERTIBLE = 2,
    SC_ERR_NOT_PADIC_INTEGER = 3,
    SC_ERR_INDEX_OUT_OF_RANGE = 4,
    SC_ERR_CAP_EXCEEDED = 5,
    SC_ERR_LOWER_PARAMETER_POLE = 6,
    SC_ERR_NON_UNIT_DENOMINATOR = 7,
    SC_ERR_HYPOTHESIS_FAILED = 8,
    SC_ERR_ODD_INPUT = 9,
    SC_ERR_PARSE = 10,
    SC_ERR_IO = 11,
    SC_ERR_INTERNAL = 12
} sc_status;

typedef enum sc_verdict { SC_PASS = 0, SC_FAIL = 1, SC_SKIPPED = 2 } sc_verdict;

/* Per-prime verifier with its Gamma_p caches. Thread-safe for concurrent reads. */
typedef struct sc_verifier sc_verifier;

/* Scan configuration plus the summary of its last run. Not thread-safe. */
typedef struct sc_scan sc_scan;

typedef struct sc_record {
    char statement[16];
    uint32_t p;
    int k;
    int has_a;
    int64_t a_num;
    int64_t a_den;
    uint64_t lhs;
    uint64_t rhs;
    sc_verdict verdict;
    char skip_reason[96];
} sc_record;

SC_API const char* sc_version(void);
SC_API const char* sc_status_name(sc_status status);
SC_API const char* sc_last_error(void);

/* Residue arithmetic */
SC_API sc_status sc_sieve_primes(int64_t lo, int64_t hi, uint32_t* out, size_t capacity, size_t* count);
SC_API sc_status sc_mod_inverse(uint32_t p, int k, uint64_t x, uint64_t* out);
SC_API sc_status sc_reduce_rational(uint32_t p, int k, int64_t num, int64_t den, uint64_t* out);
SC_API sc_status sc_least_residue(uint32_t p, int64_t num, int64_t den, uint32_t* out);
SC_API sc_status sc_harmonic_mod(uint32_t p, int64_t n, uint32_t* out);

/* Verifier */
SC_API sc_status sc_verifier_create(uint32_t p, sc_verifier** out);
SC_API void sc_verifier_destroy(sc_verifier* verifier);
SC_API sc_status sc_gamma_p(const sc_verifier* verifier, int k, int64_t num, int64_t den, uint64_t* out);
SC_API sc_status sc_g1(const sc_verifier* verifier, int64_t num, int64_t den, uint64_t* out);
SC_API sc_status sc_series_2f1_half(const sc_verifier* verifier, int k, int64_t num, int64_t den,
                                    uint64_t* out);
SC_API sc_status sc_series_3f2_one(const sc_verifier* verifier, int k, int64_t num, int64_t den,
                                   uint64_t* out);
/* power = 0 keeps the statement's native exponent. Unmet hypotheses yield
 * SC_OK with verdict SC_SKIPPED. */
SC_API sc_status sc_check_statement(const sc_verifier* verifier, const char* statement, int has_a,
                                    int64_t a_num, int64_t a_den, int power, sc_record* out);

/* Exact identities: identity is an IDENT_* name, *passed receives 0 or 1. */
SC_API sc_status sc_check_identity(const char* identity, int64_t n, int* passed);

/* Scan */
SC_API sc_status sc_scan_create(sc_scan** out);
SC_API void sc_scan_destroy(sc_scan* scan);
SC_API sc_status sc_scan_set_primes(sc_scan* scan, int64_t lo, int64_t hi);
SC_API sc_status sc_scan_set_statements(sc_scan* scan, const char* list);
SC_API sc_status sc_scan_set_power(sc_scan* scan, int power);
SC_API sc_status sc_scan_set_params_file(sc_scan* scan, const char* path);
SC_API sc_status sc_scan_set_seed(sc_scan* scan, uint64_t seed);
SC_API sc_status sc_scan_set_sample_count(sc_scan* scan, int count);
SC_API sc_status sc_scan_set_jobs(sc_scan* scan, unsigned jobs);
SC_API sc_status sc_scan_set_output(sc_scan* scan, const char* path, const char* format);
SC_API sc_status sc_scan_set_flags(sc_scan* scan, int strict, int force);
SC_API sc_status sc_scan_set_n_max(sc_scan* scan, int64_t n_max);
/* Runs the scan and writes the report. *exit_code is 0 when clean and 1 on
 * a theorem FAIL (or a conjecture FAIL under the strict flag). */
SC_API sc_status sc_scan_run(sc_scan* scan, int* exit_code);
/* Summary table of the last successful run, owned by the handle. */
SC_API const char* sc_scan_summary(const sc_scan* scan);

#ifdef __cplusplus
}
#endif

#endif /* SUPERCONG_H */
