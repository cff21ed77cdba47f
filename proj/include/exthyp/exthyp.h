#ifndef EXTHYP_H
#define EXTHYP_H

/*
 * C interface to the extended incomplete gamma / Pochhammer / hypergeometric
 * library.  All entry points are thread-compatible: handles are not shared
 * between threads, everything behind them is pure computation.
 *
 * Every fallible call returns an exthyp_status; on failure the context holds
 * a human-readable message retrievable with exthyp_last_error().
 */

#ifdef __cplusplus
extern "C" {
#endif

#ifndef EXTHYP_API
#define EXTHYP_API __attribute__((visibility("default")))
#endif

typedef enum exthyp_status {
    EXTHYP_OK = 0,
    EXTHYP_ERR_INVALID_ARG = 1,
    EXTHYP_ERR_DOMAIN = 2,
    EXTHYP_ERR_POLE = 3,
    EXTHYP_ERR_NONCONVERGENCE = 4,
    EXTHYP_ERR_DIVERGENCE = 5,
    EXTHYP_ERR_MAX_TERMS = 6,
    EXTHYP_ERR_INTERNAL = 7
} exthyp_status;

typedef enum exthyp_kind {
    EXTHYP_KIND_LOWER = 0,
    EXTHYP_KIND_UPPER = 1,
    EXTHYP_KIND_COMPLETE = 2
} exthyp_kind;

typedef enum exthyp_genfun_family {
    EXTHYP_GENFUN_SHIFTED_BLOCK = 0,
    EXTHYP_GENFUN_TERMINATING_BLOCK = 1,
    EXTHYP_GENFUN_PAIRED_BLOCKS = 2,
    EXTHYP_GENFUN_BALANCED_BLOCKS = 3,
    EXTHYP_GENFUN_SHIFTED_SINGLE = 4,
    EXTHYP_GENFUN_PAIRED_SINGLE = 5
} exthyp_genfun_family;

typedef enum exthyp_genfun_side {
    EXTHYP_GENFUN_LHS = 0,
    EXTHYP_GENFUN_RHS = 1
} exthyp_genfun_side;

typedef enum exthyp_frac_op {
    EXTHYP_FRAC_INTEGRAL = 0,
    EXTHYP_FRAC_DERIVATIVE = 1
} exthyp_frac_op;

typedef struct exthyp_result {
    double value;
    double err_estimate; /* absolute error estimate; 0 when unavailable */
    long n_evals;        /* quadrature integrand evaluations */
    long n_terms;        /* series terms consumed */
} exthyp_result;

typedef struct exthyp_ctx exthyp_ctx;   /* numeric controls + last error */
typedef struct exthyp_spec exthyp_spec; /* hypergeometric series description */
typedef struct exthyp_run exthyp_run;   /* results of one verification suite  */

/* ---- context ---- */

EXTHYP_API exthyp_ctx* exthyp_ctx_create(void);
EXTHYP_API void exthyp_ctx_destroy(exthyp_ctx* ctx);
EXTHYP_API const char* exthyp_last_error(const exthyp_ctx* ctx);
EXTHYP_API exthyp_status exthyp_ctx_set_quad(exthyp_ctx* ctx, double rel_tol,
                                             double abs_tol, long max_subdivisions);
EXTHYP_API exthyp_status exthyp_ctx_set_series(exthyp_ctx* ctx, double rel_tol,
                                               long max_terms);

/* ---- extended incomplete gamma layer ---- */

EXTHYP_API exthyp_status exthyp_gamma_lower(exthyp_ctx* ctx, double s, double x,
                                            double p, exthyp_result* out);
EXTHYP_API exthyp_status exthyp_gamma_upper(exthyp_ctx* ctx, double s, double x,
                                            double p, exthyp_result* out);
EXTHYP_API exthyp_status exthyp_gamma_complete(exthyp_ctx* ctx, double s, double p,
                                               exthyp_result* out);
EXTHYP_API exthyp_status exthyp_bessel_k(exthyp_ctx* ctx, double nu, double z,
                                         exthyp_result* out);

/* ---- extended incomplete Pochhammer layer ---- */

EXTHYP_API exthyp_status exthyp_poch_lower(exthyp_ctx* ctx, double lambda, double nu,
                                           double x, double p, exthyp_result* out);
EXTHYP_API exthyp_status exthyp_poch_upper(exthyp_ctx* ctx, double lambda, double nu,
                                           double x, double p, exthyp_result* out);
EXTHYP_API exthyp_status exthyp_poch_complete(exthyp_ctx* ctx, double lambda,
                                              double nu, double p, exthyp_result* out);

/* ---- hypergeometric specs ---- */

EXTHYP_API exthyp_spec* exthyp_spec_create(exthyp_kind kind, double alpha1, double x,
                                           double p, double z);
EXTHYP_API void exthyp_spec_destroy(exthyp_spec* spec);
EXTHYP_API exthyp_status exthyp_spec_add_num(exthyp_spec* spec, double value);
EXTHYP_API exthyp_status exthyp_spec_add_den(exthyp_spec* spec, double value);
EXTHYP_API exthyp_status exthyp_spec_set_z(exthyp_spec* spec, double z);

EXTHYP_API exthyp_status exthyp_eval_hyp(exthyp_ctx* ctx, const exthyp_spec* spec,
                                         exthyp_result* out);
EXTHYP_API exthyp_status exthyp_eval_derivative(exthyp_ctx* ctx,
                                                const exthyp_spec* spec, int order,
                                                exthyp_result* out);

/* ---- generating functions (spec supplies the base series) ---- */

EXTHYP_API exthyp_status exthyp_eval_genfun(exthyp_ctx* ctx,
                                            exthyp_genfun_family family,
                                            double lambda, int block_size, double t,
                                            exthyp_genfun_side side,
                                            const exthyp_spec* base,
                                            exthyp_result* out);

/* ---- Riemann-Liouville closed forms (argument slot bound to omega*(y-a)) ---- */

EXTHYP_API exthyp_status exthyp_eval_frac(exthyp_ctx* ctx, exthyp_frac_op op,
                                          double a, double rho, double mu,
                                          double omega, double y,
                                          const exthyp_spec* base,
                                          exthyp_result* out);

/* ---- verification suites ---- */

/* suite: "all", "gamma", "pochhammer", "hyp", "reps", "genfun", "frac".
 * tol_override > 0 replaces each case's built-in comparison tolerance;
 * pass 0 to keep the defaults. */
EXTHYP_API exthyp_status exthyp_run_suite(exthyp_ctx* ctx, const char* suite,
                                          double tol_override, exthyp_run** out);
EXTHYP_API void exthyp_run_destroy(exthyp_run* run);
EXTHYP_API long exthyp_run_count(const exthyp_run* run);
EXTHYP_API long exthyp_run_failures(const exthyp_run* run);
EXTHYP_API long exthyp_run_skips(const exthyp_run* run);

/* Strings stay valid until the run is destroyed.  status is one of
 * "PASS", "FAIL", "SKIPPED". */
EXTHYP_API exthyp_status exthyp_run_report(const exthyp_run* run, long index,
                                           const char** identity_id, double* lhs,
                                           double* rhs, double* abs_err,
                                           double* rel_err, double* tol,
                                           const char** status, long* series_terms,
                                           long* quad_evals);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EXTHYP_H */
