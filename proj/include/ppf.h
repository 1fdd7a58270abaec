/* C API for the permutation-polynomial measures library.
 *
 * All functions return PPF_OK (0) or an error code; ppf_last_error() holds a
 * message for the most recent failure on the calling thread. Strings returned
 * through char** out parameters are malloc'd; release them with
 * ppf_string_free. Handles are opaque and must be destroyed by the caller.
 */
#ifndef PPF_H
#define PPF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ppf_field ppf_field;
typedef struct ppf_poly ppf_poly;

enum {
  PPF_OK = 0,
  PPF_ERR_INVALID = 1,
  PPF_ERR_NON_PRIME = 2,
  PPF_ERR_REDUCIBLE_MODULUS = 3,
  PPF_ERR_FIELD_TOO_LARGE = 4,
  PPF_ERR_MODULUS_REQUIRED = 5,
  PPF_ERR_ZERO_INVERSE = 6,
  PPF_ERR_ZERO_LOG = 7,
  PPF_ERR_BAD_TABLE_LENGTH = 8,
  PPF_ERR_NO_CYCLOTOMIC_FORM = 9,
  PPF_ERR_NONZERO_ORIGIN = 10,
  PPF_ERR_INVALID_CHAIN = 11,
  PPF_ERR_DEGENERATE_CHAIN = 12,
  PPF_ERR_NOT_PERMUTATION = 13,
  PPF_ERR_ORACLE_TOO_LARGE = 14,
  PPF_ERR_SCAN_TOO_LARGE = 15,
  PPF_ERR_COSET_MISMATCH = 16,
  PPF_ERR_ORDER_NOT_DIVIDING = 17,
  PPF_ERR_SINGULAR_MOEBIUS = 18,
  PPF_ERR_PARSE = 19,
  PPF_ERR_COEFFICIENT_RANGE = 20,
  PPF_ERR_NOT_PRIME_FIELD = 21,
  PPF_ERR_DEGREE_TOO_SMALL = 22,
  PPF_ERR_INTERNAL = 99
};

const char* ppf_last_error(void);
void ppf_string_free(char* s);

/* spec: "q=5" (prime power order) or "p=3,k=2,mod=1,0,1". */
int ppf_field_create(const char* spec, ppf_field** out);
void ppf_field_destroy(ppf_field* f);
uint32_t ppf_field_order(const ppf_field* f);
uint32_t ppf_field_primitive(const ppf_field* f);
int ppf_field_spec(const ppf_field* f, char** out);

/* text: coefficient list "0,3,2,1" or expression "x^3+2x^2+3x". */
int ppf_poly_parse(const ppf_field* f, const char* text, ppf_poly** out);
int ppf_poly_from_table(const ppf_field* f, const uint32_t* table, uint32_t len, ppf_poly** out);
void ppf_poly_destroy(ppf_poly* poly);
int ppf_poly_eval(const ppf_field* f, const ppf_poly* poly, uint32_t c, uint32_t* out);
int ppf_poly_coeffs_string(const ppf_poly* poly, char** out);

/* Full measure report (deg, w, ind, lin, inv, nmax, crk bounds). */
int ppf_analyze_json(const ppf_field* f, const ppf_poly* poly, uint32_t oracle_limit,
                     char** out_json);
/* {"ell": ..., "witness": {"ell", "r", "a"}}. */
int ppf_index_json(const ppf_field* f, const ppf_poly* poly, char** out_json);
/* exact != 0: BFS oracle (q <= oracle_limit); else agreement lower bound. */
int ppf_crk_json(const ppf_field* f, const ppf_poly* poly, int exact, uint32_t oracle_limit,
                 char** out_json);
/* Discrete-log permutation report for prime p; xi_or_zero = 0 picks the
 * field's canonical primitive element. */
int ppf_dlog_report_json(uint32_t p, uint32_t xi_or_zero, uint32_t oracle_limit, char** out_json);
/* Wang criterion vs direct permutation test for the cyclotomic map. */
int ppf_wang_json(const ppf_field* f, uint32_t ell, uint32_t r, const uint32_t* a, uint32_t alen,
                  char** out_json);
/* CSV population scan to a file; samples = 0 enumerates all q! (q <= 8). */
int ppf_scan_csv(const ppf_field* f, const char* path, uint64_t samples, uint64_t seed);
/* Character sum with Weil-bound check. */
int ppf_charsum_json(const ppf_field* f, uint32_t ell, uint32_t power, uint32_t alpha,
                     uint32_t beta, uint32_t gamma, uint32_t delta, uint32_t r, char** out_json);

/* theorem: "1", "ineq2", "ineq3" (take poly) or "2", "rate" (take ell/r/a).
 * The returned JSON carries a "pass" flag. */
int ppf_verify_json(const ppf_field* f, const char* theorem, const ppf_poly* poly, uint32_t ell,
                    uint32_t r, const uint32_t* a, uint32_t alen, uint64_t samples, uint64_t seed,
                    uint32_t oracle_limit, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PPF_H */
