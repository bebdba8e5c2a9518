/* SPDX-License-Identifier: Apache-2.0
 *
 * mdsmom - multiple Dirichlet series / moment workbench, C API.
 *
 * All functions are thread-safe on distinct contexts. Functions returning
 * char* allocate with malloc-compatible semantics; release the string with
 * mdsmom_string_free. A NULL return signals failure; query the context with
 * mdsmom_ctx_last_error.
 */
#ifndef MDSMOM_H
#define MDSMOM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MDSMOM_OK = 0,
  MDSMOM_ERR_INVALID = 1,  /* precondition violated */
  MDSMOM_ERR_DOMAIN = 2,   /* pole / nonconvergence signal */
  MDSMOM_ERR_INTERNAL = 3
} mdsmom_status;

typedef struct mdsmom_ctx mdsmom_ctx;

mdsmom_ctx* mdsmom_ctx_new(void);
void mdsmom_ctx_free(mdsmom_ctx* ctx);
const char* mdsmom_ctx_last_error(const mdsmom_ctx* ctx);

void mdsmom_string_free(char* s);

/* ----- point evaluation ------------------------------------------------- */

mdsmom_status mdsmom_eval_zeta(mdsmom_ctx* ctx, double re, double im,
                               double* out_re, double* out_im);
mdsmom_status mdsmom_eval_chi(mdsmom_ctx* ctx, double re, double im,
                              double* out_re, double* out_im);
/* L(s, chi_d); fast = 1 forces the approximate-functional-equation path */
mdsmom_status mdsmom_eval_L(mdsmom_ctx* ctx, long long d, double re, double im,
                            int fast, double* out_re, double* out_im);
mdsmom_status mdsmom_kronecker(mdsmom_ctx* ctx, long long d, long long n, int* out);

/* ----- structured queries (JSON out) ------------------------------------ */

/* family: "g" | "g_quad" | "g_zeta_orbit" | "a_zeta" | "a_quad" | "r_zeta"
 * | "r_quad" | "leading_zeta" | "leading_quad" | "leading_quad_weighted";
 * r is only used by "r_zeta". */
char* mdsmom_constants_json(mdsmom_ctx* ctx, const char* family, int m, int r,
                            long long prime_cutoff);

/* family: "quad" (group of order 2^m) or "zeta" (order 2^2m with the polar
 * stabilizer); lists the polar hyperplanes through the center. */
char* mdsmom_group_json(mdsmom_ctx* ctx, const char* family, int m);

/* exact orbit-residue constants kappa with their closed forms */
char* mdsmom_residue_json(mdsmom_ctx* ctx, const char* family, int m);

/* suite: "gfactors" | "kappa" | "setid" | "sieve" | "d12" | "hyperplanes"
 * | "regions" | "polepoly" | "lemma34" | "prop33" | "kernel" | "exponents"
 * | "special" | "quick" (= the exact-identity bundle) */
char* mdsmom_verify_json(mdsmom_ctx* ctx, const char* suite, uint64_t seed, int quick);

/* discriminant parameters with |d| <= x as CSV: d, D, sign, a */
char* mdsmom_enumerate_csv(mdsmom_ctx* ctx, double x);

char* mdsmom_optimize_exponents_json(mdsmom_ctx* ctx);

/* numerical t-integral moment of |zeta(1/2+it)|^(2k) up to x */
char* mdsmom_zeta_moment_json(mdsmom_ctx* ctx, int k, double x);

/* ----- moment sweeps (opaque handle caching central L-values) ----------- */

typedef struct mdsmom_sweep mdsmom_sweep;

/* cutoff_by_conductor != 0 sums over |fundamental discriminant| <= x (the
 * convention matched by the leading-term predictions); 0 uses |d| <= x. */
mdsmom_sweep* mdsmom_sweep_new(mdsmom_ctx* ctx, double x_max, int threads,
                               int cutoff_by_conductor);
void mdsmom_sweep_free(mdsmom_sweep* sweep);

char* mdsmom_sweep_quad_moment_json(mdsmom_sweep* sweep, int m, double x, int weighted);
/* one CSV with one row per (x, m) pair */
char* mdsmom_sweep_quad_moment_csv(mdsmom_sweep* sweep, const int* ms, int n_ms,
                                   const double* xs, int n_xs, int weighted);
/* least-squares leading log-power coefficient over the grid */
char* mdsmom_sweep_fit_json(mdsmom_sweep* sweep, int m, int weighted, int degree,
                            const double* xs, int n_xs);
char* mdsmom_sweep_short_interval_json(mdsmom_sweep* sweep, double x, double theta0);
char* mdsmom_sweep_tauberian_json(mdsmom_sweep* sweep, int m, double X, double w);

#ifdef __cplusplus
}
#endif

#endif /* MDSMOM_H */
