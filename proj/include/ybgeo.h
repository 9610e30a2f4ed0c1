/* ybgeo - exact quantization of geometric classical r-matrices.
 *
 * C interface to the ybgeo core: opaque handles, status codes, JSON string
 * payloads. All returned strings are heap-allocated and must be released
 * with ybgeo_string_free(); handles with their matching *_free() function.
 * Functions returning YBGEO_ERROR (or YBGEO_INVALID_INPUT) set *error_out,
 * when that out-parameter is present, to a diagnostic message.
 */
#ifndef YBGEO_H
#define YBGEO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ybgeo_status {
	YBGEO_OK = 0,            /* operation succeeded, check passed */
	YBGEO_CHECK_FAILED = 1,  /* operation succeeded, a verified property is false */
	YBGEO_INVALID_INPUT = 2, /* unparsable or contract-violating input */
	YBGEO_ERROR = 3          /* internal failure */
} ybgeo_status;

typedef struct ybgeo_rmatrix ybgeo_rmatrix;
typedef struct ybgeo_cbcst ybgeo_cbcst;
typedef struct ybgeo_quantum ybgeo_quantum;

const char *ybgeo_version(void);
void ybgeo_string_free(char *s);

/* ---- geometric classical r-matrices ---- */

ybgeo_status ybgeo_rmatrix_parse(const char *json_text, ybgeo_rmatrix **out,
                                 char **error_out);
/* the built-in three-dimensional example, symbolic eps */
ybgeo_status ybgeo_rmatrix_example5(ybgeo_rmatrix **out, char **error_out);
/* its single-term rack-type variant */
ybgeo_status ybgeo_rmatrix_example5_rack(ybgeo_rmatrix **out, char **error_out);
ybgeo_status ybgeo_rmatrix_to_json(const ybgeo_rmatrix *r, char **json_out,
                                   char **error_out);
/* substitute an exact rational (e.g. "0", "1", "2/3") for eps */
ybgeo_status ybgeo_rmatrix_specialize(const ybgeo_rmatrix *r, const char *eps_value,
                                      ybgeo_rmatrix **out, char **error_out);
ybgeo_status ybgeo_rmatrix_minimize(const ybgeo_rmatrix *r, ybgeo_rmatrix **out,
                                    char **error_out);
/* YBGEO_OK when the CYBE holds, YBGEO_CHECK_FAILED with a witness otherwise */
ybgeo_status ybgeo_rmatrix_check_cybe(const ybgeo_rmatrix *r, char **report_json_out,
                                      char **error_out);
/* classical unitarity r^{21} = -r; *result_out set to 0/1 */
ybgeo_status ybgeo_rmatrix_check_unitarity(const ybgeo_rmatrix *r, int *result_out,
                                           char **error_out);
void ybgeo_rmatrix_free(ybgeo_rmatrix *r);

/* ---- classical bijective cocycle 7-tuples ---- */

ybgeo_status ybgeo_cbcst_build(const ybgeo_rmatrix *r, ybgeo_cbcst **out,
                               char **error_out);
ybgeo_status ybgeo_cbcst_parse(const char *json_text, ybgeo_cbcst **out,
                               char **error_out);
ybgeo_status ybgeo_cbcst_to_json(const ybgeo_cbcst *c, char **json_out,
                                 char **error_out);
/* itemized axiom/lemma report; YBGEO_CHECK_FAILED when any item fails */
ybgeo_status ybgeo_cbcst_validate(const ybgeo_cbcst *c, char **report_json_out,
                                  char **error_out);
ybgeo_status ybgeo_cbcst_to_rmatrix(const ybgeo_cbcst *c, ybgeo_rmatrix **out,
                                    char **error_out);
void ybgeo_cbcst_free(ybgeo_cbcst *c);

/* ---- quantization ---- */

ybgeo_status ybgeo_quantize(const ybgeo_cbcst *c, int order, ybgeo_quantum **out,
                            char **error_out);
ybgeo_status ybgeo_quantum_to_json(const ybgeo_quantum *q, char **json_out,
                                   char **error_out);
/* braid identity R12 R13 R23 = R23 R13 R12; flip_variant selects the
 * adjacent-placement braid relation for sigma composed with R */
ybgeo_status ybgeo_quantum_check_braid(const ybgeo_quantum *q, int flip_variant,
                                       char **report_json_out, char **error_out);
ybgeo_status ybgeo_quantum_check_unitarity(const ybgeo_quantum *q,
                                           char **report_json_out, char **error_out);
/* h^1 coefficient against a classical r-matrix */
ybgeo_status ybgeo_quantum_classical_limit(const ybgeo_quantum *q,
                                           const ybgeo_rmatrix *r,
                                           char **report_json_out, char **error_out);
/* compare against closed forms: {"star": [expr...], "circ": [expr...]} */
ybgeo_status ybgeo_quantum_match_closed_forms(const ybgeo_quantum *q,
                                              const char *forms_json,
                                              char **report_json_out, char **error_out);
void ybgeo_quantum_free(ybgeo_quantum *q);

/* ---- batch verification of the built-in example ----
 * eps_mode: "symbolic" or an exact rational; order >= 2.
 * corrupt != 0 deliberately perturbs the fixture (negative control). */
ybgeo_status ybgeo_verify_example5(int order, const char *eps_mode, int corrupt,
                                   char **report_json_out, char **error_out);

#ifdef __cplusplus
}
#endif

#endif /* YBGEO_H */
