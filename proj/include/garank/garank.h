/*
 * garank — rank, determinant, characteristic polynomial, inverse and SVD of
 * multivectors in complexified Clifford geometric algebras G^C_{p,q},
 * computed with algebra operations only and cross-checkable against a matrix
 * representation oracle.
 *
 * C interface to the shared library. All objects are opaque handles; every
 * fallible function returns a garank_status and writes its results through
 * out parameters. Strings returned through char** are heap-allocated and
 * must be released with garank_string_free. Handles are immutable after
 * creation and safe to share between threads.
 */
#ifndef GARANK_H
#define GARANK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GARANK_API __declspec(dllexport)
#else
#define GARANK_API __attribute__((visibility("default")))
#endif

typedef enum garank_status {
  GARANK_OK = 0,
  GARANK_ERR_INVALID_ARGUMENT = 1,
  GARANK_ERR_PARSE = 2,
  GARANK_ERR_SIGNATURE_MISMATCH = 3,
  GARANK_ERR_MODE_MISMATCH = 4,
  GARANK_ERR_OUT_OF_RANGE = 5,
  GARANK_ERR_SINGULAR = 6,
  GARANK_ERR_NOT_IN_IMAGE = 7,
  GARANK_ERR_UNSUPPORTED_MODE = 8,
  GARANK_ERR_NOT_NORMAL = 9,
  GARANK_ERR_NUMERIC = 10,
  GARANK_ERR_JSON = 11,
  GARANK_ERR_INTERNAL = 12
} garank_status;

/* coefficient arithmetic of a multivector */
typedef enum garank_mode { GARANK_MODE_FLOAT = 0, GARANK_MODE_EXACT = 1 } garank_mode;

/* the five conjugations */
typedef enum garank_conjugation {
  GARANK_CONJ_GRADE_INVOLUTION = 0,
  GARANK_CONJ_REVERSION = 1,
  GARANK_CONJ_COMPLEX = 2,
  GARANK_CONJ_HERMITIAN = 3,
  GARANK_CONJ_TRIANGLE = 4
} garank_conjugation;

typedef struct garank_mv garank_mv;

GARANK_API const char* garank_version(void);
GARANK_API const char* garank_status_name(garank_status status);
/* detail message for the most recent failure on this thread */
GARANK_API const char* garank_last_error(void);

GARANK_API void garank_string_free(char* s);
GARANK_API void garank_mv_free(garank_mv* m);

/* ---- construction -------------------------------------------------- */

/* expression text, e.g. "(1+2i)*e1 + e12/2"; see the README for the grammar */
GARANK_API garank_status garank_mv_parse(int p, int q, garank_mode mode, const char* text,
                                         garank_mv** out);
/* multivector JSON (schema in the README) */
GARANK_API garank_status garank_mv_from_json(const char* json, garank_mv** out);
GARANK_API garank_status garank_mv_zero(int p, int q, garank_mode mode, garank_mv** out);

/* ---- introspection -------------------------------------------------- */

GARANK_API garank_status garank_mv_signature(const garank_mv* m, int* p, int* q);
GARANK_API garank_status garank_mv_mode(const garank_mv* m, garank_mode* mode);
GARANK_API garank_status garank_mv_term_count(const garank_mv* m, size_t* count);
GARANK_API garank_status garank_mv_to_json(const garank_mv* m, char** json);
/* expression-grammar text; significant_digits applies to float mode */
GARANK_API garank_status garank_mv_to_text(const garank_mv* m, int significant_digits,
                                           char** text);
GARANK_API garank_status garank_mv_equal(const garank_mv* a, const garank_mv* b, int* equal);

/* ---- algebra operations --------------------------------------------- */

GARANK_API garank_status garank_mv_add(const garank_mv* a, const garank_mv* b, garank_mv** out);
GARANK_API garank_status garank_mv_sub(const garank_mv* a, const garank_mv* b, garank_mv** out);
/* geometric product */
GARANK_API garank_status garank_mv_product(const garank_mv* a, const garank_mv* b,
                                           garank_mv** out);
/* scale by the complex scalar re + im*i (float mode) */
GARANK_API garank_status garank_mv_scale(const garank_mv* m, double re, double im,
                                         garank_mv** out);
/* scale by exact rationals "num/den" (both modes; float converts) */
GARANK_API garank_status garank_mv_scale_rational(const garank_mv* m, const char* re,
                                                  const char* im, garank_mv** out);
GARANK_API garank_status garank_mv_conjugate(const garank_mv* m, garank_conjugation kind,
                                             garank_mv** out);
GARANK_API garank_status garank_mv_grade_projection(const garank_mv* m, int grade,
                                                    garank_mv** out);
/* (a, b) = <a† b>_0 as scalar JSON {"re":..,"im":..} */
GARANK_API garank_status garank_mv_scalar_product(const garank_mv* a, const garank_mv* b,
                                                  char** json);
/* float mode only; exact mode reports GARANK_ERR_UNSUPPORTED_MODE */
GARANK_API garank_status garank_mv_norm(const garank_mv* m, double* norm);
/* ||M||^2 as JSON: a number (float) or a "num/den" string (exact) */
GARANK_API garank_status garank_mv_norm_squared(const garank_mv* m, char** json);
/* tol < 0 selects the default 1e-9; ignored in exact mode */
GARANK_API garank_status garank_mv_is_unitary(const garank_mv* m, double tol, int* unitary);
GARANK_API garank_status garank_mv_is_normal(const garank_mv* m, double tol, int* normal);

/* ---- characteristic polynomial, determinant, inverse ----------------- */

/* {"coeffs":[{"re":..,"im":..},...],"det":{..}} with C_(1)..C_(N) */
GARANK_API garank_status garank_mv_charpoly(const garank_mv* m, char** json);
/* Det(M) = -C_(N) as scalar JSON */
GARANK_API garank_status garank_mv_det(const garank_mv* m, char** json);
/* Adj(M)/Det(M); GARANK_ERR_SINGULAR when Det vanishes */
GARANK_API garank_status garank_mv_inverse(const garank_mv* m, garank_mv** out);

/* ---- rank ------------------------------------------------------------ */

/* tol < 0 selects the default 1e-9. result_json (optional, may be NULL)
 * receives {"rank":r,"path":...,"witnesses":{"C":[...],"tol":...}} */
GARANK_API garank_status garank_mv_rank(const garank_mv* m, double tol, int* rank,
                                        char** result_json);
GARANK_API garank_status garank_mv_rank_general(const garank_mv* m, double tol, int* rank,
                                                char** result_json);
/* requires a normal multivector (GARANK_ERR_NOT_NORMAL otherwise) */
GARANK_API garank_status garank_mv_rank_normal(const garank_mv* m, double tol, int* rank,
                                               char** result_json);
/* closed-form conjugation-product tests; requires n <= 4 */
GARANK_API garank_status garank_mv_rank_small_dim(const garank_mv* m, double tol, int* rank,
                                                  char** result_json);

/* ---- matrix representation oracle ------------------------------------ */

/* beta'(M) as matrix JSON {"rows":..,"cols":..,"entries":[[{"re":..},..],..]} */
GARANK_API garank_status garank_mv_represent(const garank_mv* m, char** matrix_json);
/* inverse of the representation on its image; the matrix JSON entry type
 * (numbers vs "num/den" strings) must match the requested mode */
GARANK_API garank_status garank_unrepresent(int p, int q, garank_mode mode,
                                            const char* matrix_json, garank_mv** out);
/* SVD in the algebra: M = U Sigma V† with U, V unitary multivectors (float
 * mode only) */
GARANK_API garank_status garank_mv_svd(const garank_mv* m, garank_mv** u, garank_mv** sigma,
                                       garank_mv** v);
/* cross-check the basis-free results against the matrix oracle;
 * report_json (optional) receives {"ok":..,"checks":[...]} */
GARANK_API garank_status garank_mv_verify(const garank_mv* m, double tol, int* ok,
                                          char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* GARANK_H */
