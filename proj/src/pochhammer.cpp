#include "pochhammer.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace exthyp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

QuadResult normalize_by_gamma(double lambda, const LogQuad& lq) {
    const double lg = log_abs_gamma(lambda);
    const int sg = gamma_sign(lambda);
    const double value = sg * std::exp(lq.log_value - lg);
    return {value, std::fabs(value) * lq.rel_err, lq.n_evals};
}

} // namespace

double rising(double lambda, long n) {
    if (n < 0) throw DomainError("rising: n must be >= 0");
    double v = 1.0;
    for (long k = 0; k < n; ++k) v *= lambda + static_cast<double>(k);
    return v;
}

LogVal log_rising(double lambda, long n) {
    if (n < 0) throw DomainError("rising: n must be >= 0");
    LogVal v = LogVal::one();
    for (long k = 0; k < n; ++k) v.mul_by(lambda + static_cast<double>(k));
    return v;
}

QuadResult poch_lower(double lambda, double nu, double x, double p,
                      const QuadratureControls& ctl) {
    return normalize_by_gamma(lambda, log_lower_incomplete(lambda + nu, x, p, ctl));
}

QuadResult poch_upper(double lambda, double nu, double x, double p,
                      const QuadratureControls& ctl) {
    return normalize_by_gamma(lambda, log_upper_incomplete(lambda + nu, x, p, ctl));
}

QuadResult poch_generalized(double lambda, double nu, double p,
                            const QuadratureControls& ctl) {
    return normalize_by_gamma(lambda, log_upper_incomplete(lambda + nu, 0.0, p, ctl));
}

UpperLogSequence::UpperLogSequence(double lambda, double x, double p,
                                   QuadratureControls ctl)
    : lambda_(lambda), x_(x), p_(p), ctl_(ctl) {
    if (std::isnan(lambda) || std::isnan(x) || std::isnan(p))
        throw DomainError("upper sequence: nan argument");
    if (x < 0.0 || p < 0.0)
        throw DomainError("upper sequence: x and p must be >= 0");
    log_x_ = x > 0.0 ? std::log(x) : kNegInf;
    log_boundary_exp_ = x > 0.0 ? -x - p / x : kNegInf;
    // First index whose recurrence coefficient s = lambda + n - 1 is safely
    // positive; everything below is integrated directly.
    double from_lambda = std::ceil(1.5 - lambda);
    std::size_t rs = 2;
    if (from_lambda > 2.0) rs = static_cast<std::size_t>(from_lambda);
    rec_start_ = rs;
}

double UpperLogSequence::direct(std::size_t n) {
    LogQuad lq = log_upper_incomplete(lambda_ + static_cast<double>(n), x_, p_, ctl_);
    evals_ += lq.n_evals;
    return lq.log_value;
}

double UpperLogSequence::log_at(std::size_t n) {
    if (n < logs_.size()) return logs_[n];
    logs_.reserve(n + 1);
    while (logs_.size() <= n) {
        const std::size_t k = logs_.size();
        if (k < rec_start_) {
            logs_.push_back(direct(k));
            continue;
        }
        const double s = lambda_ + static_cast<double>(k) - 1.0;
        double acc = std::log(s) + logs_[k - 1];
        if (p_ > 0.0) acc = log_add(acc, std::log(p_) + logs_[k - 2]);
        if (x_ > 0.0) acc = log_add(acc, s * log_x_ + log_boundary_exp_);
        logs_.push_back(acc);
    }
    return logs_[n];
}

std::vector<double> upper_sequence(double lambda, double x, double p, long count,
                                   const QuadratureControls& ctl) {
    if (count < 0) throw DomainError("upper_sequence: count must be >= 0");
    const double lg = log_abs_gamma(lambda);
    const int sg = gamma_sign(lambda);
    UpperLogSequence seq(lambda, x, p, ctl);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (long k = 0; k <= count; ++k)
        out.push_back(sg * std::exp(seq.log_at(static_cast<std::size_t>(k)) - lg));
    return out;
}

} // namespace exthyp
