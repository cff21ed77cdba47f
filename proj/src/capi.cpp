#include "exthyp/exthyp.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "controls.hpp"
#include "errors.hpp"
#include "frac_calc.hpp"
#include "gamma_core.hpp"
#include "genfun.hpp"
#include "hyp_series.hpp"
#include "pochhammer.hpp"
#include "suites.hpp"
#include "verify.hpp"

struct exthyp_ctx {
    exthyp::NumericControls ctl;
    std::string last_error;
};

struct exthyp_spec {
    exthyp::HypSpec spec;
};

struct exthyp_run {
    std::vector<exthyp::VerificationReport> reports;
};

namespace {

using namespace exthyp;

exthyp_status fail(exthyp_ctx* ctx, exthyp_status st, const char* msg) {
    if (ctx) ctx->last_error = msg;
    return st;
}

template <typename Fn>
exthyp_status guarded(exthyp_ctx* ctx, Fn&& fn) {
    if (!ctx) return EXTHYP_ERR_INVALID_ARG;
    try {
        ctx->last_error.clear();
        fn();
        return EXTHYP_OK;
    } catch (const PoleError& e) {
        return fail(ctx, EXTHYP_ERR_POLE, e.what());
    } catch (const DomainError& e) {
        return fail(ctx, EXTHYP_ERR_DOMAIN, e.what());
    } catch (const NonConvergenceError& e) {
        return fail(ctx, EXTHYP_ERR_NONCONVERGENCE, e.what());
    } catch (const DivergenceError& e) {
        return fail(ctx, EXTHYP_ERR_DIVERGENCE, e.what());
    } catch (const MaxTermsError& e) {
        return fail(ctx, EXTHYP_ERR_MAX_TERMS, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, EXTHYP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ctx, EXTHYP_ERR_INTERNAL, "unknown error");
    }
}

void fill(exthyp_result* out, const QuadResult& q) {
    out->value = q.value;
    out->err_estimate = q.err_estimate;
    out->n_evals = q.n_evals;
    out->n_terms = 0;
}

void fill(exthyp_result* out, const SeriesEval& e) {
    out->value = e.value;
    out->err_estimate = 0.0;
    out->n_evals = e.quad_evals;
    out->n_terms = e.terms;
}

void fill(exthyp_result* out, const GenFunSide& g) {
    out->value = g.value;
    out->err_estimate = g.tail_bound;
    out->n_evals = g.quad_evals;
    out->n_terms = g.terms;
}

bool to_kind(exthyp_kind kind, HypKind& out) {
    switch (kind) {
        case EXTHYP_KIND_LOWER: out = HypKind::Lower; return true;
        case EXTHYP_KIND_UPPER: out = HypKind::Upper; return true;
        case EXTHYP_KIND_COMPLETE: out = HypKind::Complete; return true;
    }
    return false;
}

bool to_family(exthyp_genfun_family family, GenFunFamily& out) {
    switch (family) {
        case EXTHYP_GENFUN_SHIFTED_BLOCK: out = GenFunFamily::ShiftedBlock; return true;
        case EXTHYP_GENFUN_TERMINATING_BLOCK:
            out = GenFunFamily::TerminatingBlock;
            return true;
        case EXTHYP_GENFUN_PAIRED_BLOCKS: out = GenFunFamily::PairedBlocks; return true;
        case EXTHYP_GENFUN_BALANCED_BLOCKS:
            out = GenFunFamily::BalancedBlocks;
            return true;
        case EXTHYP_GENFUN_SHIFTED_SINGLE: out = GenFunFamily::ShiftedSingle; return true;
        case EXTHYP_GENFUN_PAIRED_SINGLE: out = GenFunFamily::PairedSingle; return true;
    }
    return false;
}

} // namespace

extern "C" {

exthyp_ctx* exthyp_ctx_create(void) { return new (std::nothrow) exthyp_ctx; }

void exthyp_ctx_destroy(exthyp_ctx* ctx) { delete ctx; }

const char* exthyp_last_error(const exthyp_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

exthyp_status exthyp_ctx_set_quad(exthyp_ctx* ctx, double rel_tol, double abs_tol,
                                  long max_subdivisions) {
    if (!ctx) return EXTHYP_ERR_INVALID_ARG;
    QuadratureControls next = ctx->ctl.quad;
    next.rel_tol = rel_tol;
    next.abs_tol = abs_tol;
    next.max_subdivisions = max_subdivisions;
    return guarded(ctx, [&] {
        next.validate();
        ctx->ctl.quad = next;
    });
}

exthyp_status exthyp_ctx_set_series(exthyp_ctx* ctx, double rel_tol, long max_terms) {
    if (!ctx) return EXTHYP_ERR_INVALID_ARG;
    SeriesControls next = ctx->ctl.series;
    next.rel_tol = rel_tol;
    next.max_terms = max_terms;
    return guarded(ctx, [&] {
        next.validate();
        ctx->ctl.series = next;
    });
}

exthyp_status exthyp_gamma_lower(exthyp_ctx* ctx, double s, double x, double p,
                                 exthyp_result* out) {
    if (!out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] { fill(out, lower_incomplete(s, x, p, ctx->ctl.quad)); });
}

exthyp_status exthyp_gamma_upper(exthyp_ctx* ctx, double s, double x, double p,
                                 exthyp_result* out) {
    if (!out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] { fill(out, upper_incomplete(s, x, p, ctx->ctl.quad)); });
}

exthyp_status exthyp_gamma_complete(exthyp_ctx* ctx, double s, double p,
                                    exthyp_result* out) {
    if (!out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] { fill(out, gamma_p(s, p, ctx->ctl.quad)); });
}

exthyp_status exthyp_bessel_k(exthyp_ctx* ctx, double nu, double z,
                              exthyp_result* out) {
    if (!out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] { fill(out, bessel_k(nu, z, ctx->ctl.quad)); });
}

exthyp_status exthyp_poch_lower(exthyp_ctx* ctx, double lambda, double nu, double x,
                                double p, exthyp_result* out) {
    if (!out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] { fill(out, poch_lower(lambda, nu, x, p, ctx->ctl.quad)); });
}

exthyp_status exthyp_poch_upper(exthyp_ctx* ctx, double lambda, double nu, double x,
                                double p, exthyp_result* out) {
    if (!out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] { fill(out, poch_upper(lambda, nu, x, p, ctx->ctl.quad)); });
}

exthyp_status exthyp_poch_complete(exthyp_ctx* ctx, double lambda, double nu, double p,
                                   exthyp_result* out) {
    if (!out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx,
                   [&] { fill(out, poch_generalized(lambda, nu, p, ctx->ctl.quad)); });
}

exthyp_spec* exthyp_spec_create(exthyp_kind kind, double alpha1, double x, double p,
                                double z) {
    HypKind hk;
    if (!to_kind(kind, hk)) return nullptr;
    auto* spec = new (std::nothrow) exthyp_spec;
    if (!spec) return nullptr;
    spec->spec.kind = hk;
    spec->spec.alpha1 = alpha1;
    spec->spec.x = x;
    spec->spec.p = p;
    spec->spec.z = z;
    return spec;
}

void exthyp_spec_destroy(exthyp_spec* spec) { delete spec; }

exthyp_status exthyp_spec_add_num(exthyp_spec* spec, double value) {
    if (!spec) return EXTHYP_ERR_INVALID_ARG;
    spec->spec.num.push_back(value);
    return EXTHYP_OK;
}

exthyp_status exthyp_spec_add_den(exthyp_spec* spec, double value) {
    if (!spec) return EXTHYP_ERR_INVALID_ARG;
    spec->spec.den.push_back(value);
    return EXTHYP_OK;
}

exthyp_status exthyp_spec_set_z(exthyp_spec* spec, double z) {
    if (!spec) return EXTHYP_ERR_INVALID_ARG;
    spec->spec.z = z;
    return EXTHYP_OK;
}

exthyp_status exthyp_eval_hyp(exthyp_ctx* ctx, const exthyp_spec* spec,
                              exthyp_result* out) {
    if (!spec || !out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(
        ctx, [&] { fill(out, eval_hyp(spec->spec, ctx->ctl.series, ctx->ctl.quad)); });
}

exthyp_status exthyp_eval_derivative(exthyp_ctx* ctx, const exthyp_spec* spec,
                                     int order, exthyp_result* out) {
    if (!spec || !out) return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] {
        fill(out, derivative_upper_hyp(spec->spec, order, ctx->ctl.series,
                                       ctx->ctl.quad));
    });
}

exthyp_status exthyp_eval_genfun(exthyp_ctx* ctx, exthyp_genfun_family family,
                                 double lambda, int block_size, double t,
                                 exthyp_genfun_side side, const exthyp_spec* base,
                                 exthyp_result* out) {
    if (!base || !out) return EXTHYP_ERR_INVALID_ARG;
    GenFunFamily gf;
    if (!to_family(family, gf)) return EXTHYP_ERR_INVALID_ARG;
    if (side != EXTHYP_GENFUN_LHS && side != EXTHYP_GENFUN_RHS)
        return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] {
        GenFunCase c;
        c.family = gf;
        c.lambda = lambda;
        c.N = block_size;
        c.base = base->spec;
        c.t = t;
        fill(out, side == EXTHYP_GENFUN_LHS ? gf_lhs(c, ctx->ctl)
                                            : gf_rhs(c, ctx->ctl));
    });
}

exthyp_status exthyp_eval_frac(exthyp_ctx* ctx, exthyp_frac_op op, double a,
                               double rho, double mu, double omega, double y,
                               const exthyp_spec* base, exthyp_result* out) {
    if (!base || !out) return EXTHYP_ERR_INVALID_ARG;
    if (op != EXTHYP_FRAC_INTEGRAL && op != EXTHYP_FRAC_DERIVATIVE)
        return EXTHYP_ERR_INVALID_ARG;
    return guarded(ctx, [&] {
        FracCase c;
        c.op = op == EXTHYP_FRAC_INTEGRAL ? FracCase::Op::Integral
                                          : FracCase::Op::Derivative;
        c.a = a;
        c.rho = rho;
        c.mu = mu;
        c.omega = omega;
        c.y = y;
        c.base = base->spec;
        fill(out, op == EXTHYP_FRAC_INTEGRAL ? rl_integral_closed(c, ctx->ctl)
                                             : rl_derivative_closed(c, ctx->ctl));
    });
}

exthyp_status exthyp_run_suite(exthyp_ctx* ctx, const char* suite,
                               double tol_override, exthyp_run** out) {
    if (!suite || !out) return EXTHYP_ERR_INVALID_ARG;
    *out = nullptr;
    return guarded(ctx, [&] {
        auto reports = run_suite(suite, ctx->ctl, tol_override);
        *out = new exthyp_run{std::move(reports)};
    });
}

void exthyp_run_destroy(exthyp_run* run) { delete run; }

long exthyp_run_count(const exthyp_run* run) {
    return run ? static_cast<long>(run->reports.size()) : 0;
}

long exthyp_run_failures(const exthyp_run* run) {
    if (!run) return 0;
    long n = 0;
    for (const auto& r : run->reports)
        if (r.status == VerifyStatus::Fail) ++n;
    return n;
}

long exthyp_run_skips(const exthyp_run* run) {
    if (!run) return 0;
    long n = 0;
    for (const auto& r : run->reports)
        if (r.status == VerifyStatus::Skipped) ++n;
    return n;
}

exthyp_status exthyp_run_report(const exthyp_run* run, long index,
                                const char** identity_id, double* lhs, double* rhs,
                                double* abs_err, double* rel_err, double* tol,
                                const char** status, long* series_terms,
                                long* quad_evals) {
    if (!run || index < 0 || index >= static_cast<long>(run->reports.size()))
        return EXTHYP_ERR_INVALID_ARG;
    const auto& r = run->reports[static_cast<std::size_t>(index)];
    if (identity_id) *identity_id = r.identity_id.c_str();
    if (lhs) *lhs = r.lhs;
    if (rhs) *rhs = r.rhs;
    if (abs_err) *abs_err = r.abs_err;
    if (rel_err) *rel_err = r.rel_err;
    if (tol) *tol = r.tol;
    if (status) *status = status_name(r.status);
    if (series_terms) *series_terms = r.series_terms;
    if (quad_evals) *quad_evals = r.quad_evals;
    return EXTHYP_OK;
}

} // extern "C"
