#include "gamma_core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace exthyp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_weight_args(double s, double p) {
    if (std::isnan(s) || std::isnan(p)) throw DomainError("gamma weight: nan argument");
    if (p < 0.0) throw DomainError("gamma weight: p must be >= 0");
}

struct ScaledIntegral {
    double log_scale;
    QuadResult q;
};

// Integrates the weight over (a, b) after dividing out its value at the
// peak, so the quadrature only ever sees numbers of modest size.
ScaledIntegral weight_integral(double s, double a, double b, double p,
                               const QuadratureControls& ctl) {
    const double tpk = ext_gamma_peak(s, p);
    double t_ref = tpk;
    if (t_ref < a) t_ref = a;
    if (b != kInf && t_ref > b) t_ref = b;
    const double log_scale = t_ref > 0.0 ? log_ext_gamma_integrand(t_ref, s, p) : 0.0;

    std::vector<double> breaks;
    if (p > 0.0) breaks.push_back(std::sqrt(p));
    if (tpk > 0.0) breaks.push_back(tpk);

    auto f = [=](double t) {
        const double lg = log_ext_gamma_integrand(t, s, p) - log_scale;
        return std::exp(lg);
    };
    ScaledIntegral out;
    out.log_scale = log_scale;
    out.q = integrate_adaptive(f, a, b, ctl, breaks);
    return out;
}

QuadResult unscale(const ScaledIntegral& si) {
    const double c = std::exp(si.log_scale);
    return {c * si.q.value, c * si.q.err_estimate, si.q.n_evals};
}

LogQuad to_log(const ScaledIntegral& si) {
    LogQuad out;
    out.n_evals = si.q.n_evals;
    if (si.q.value <= 0.0) {
        out.log_value = -kInf;
        out.rel_err = 0.0;
        return out;
    }
    out.log_value = si.log_scale + std::log(si.q.value);
    out.rel_err = si.q.err_estimate / si.q.value;
    return out;
}

} // namespace

double ext_gamma_integrand(double t, double s, double p) {
    return std::exp(log_ext_gamma_integrand(t, s, p));
}

double log_ext_gamma_integrand(double t, double s, double p) {
    check_weight_args(s, p);
    if (!(t > 0.0)) throw DomainError("gamma weight: t must be > 0");
    double lg = -t;
    if (s != 1.0) lg += (s - 1.0) * std::log(t);
    if (p != 0.0) lg -= p / t;
    return lg;
}

double ext_gamma_peak(double s, double p) {
    const double sm = s - 1.0;
    if (p == 0.0) return sm > 0.0 ? sm : 0.0;
    return 0.5 * (sm + std::sqrt(sm * sm + 4.0 * p));
}

QuadResult lower_incomplete(double s, double x, double p, const QuadratureControls& ctl) {
    check_weight_args(s, p);
    if (std::isnan(x) || x < 0.0) throw DomainError("lower_incomplete: x must be >= 0");
    if (p == 0.0 && s <= 0.0)
        throw DomainError("lower_incomplete: needs s > 0 when p = 0");
    if (x == 0.0) return {0.0, 0.0, 0};
    return unscale(weight_integral(s, 0.0, x, p, ctl));
}

QuadResult upper_incomplete(double s, double x, double p, const QuadratureControls& ctl) {
    check_weight_args(s, p);
    if (std::isnan(x) || x < 0.0) throw DomainError("upper_incomplete: x must be >= 0");
    if (p == 0.0 && x == 0.0 && s <= 0.0)
        throw DomainError("upper_incomplete: integral diverges at the origin");
    return unscale(weight_integral(s, x, kInf, p, ctl));
}

QuadResult gamma_p(double s, double p, const QuadratureControls& ctl) {
    return upper_incomplete(s, 0.0, p, ctl);
}

QuadResult bessel_k(double nu, double z, const QuadratureControls& ctl) {
    if (std::isnan(nu) || std::isnan(z) || !(z > 0.0))
        throw DomainError("bessel_k: z must be > 0");
    const double anu = std::fabs(nu);

    // Cut the range where the integrand has decayed below every double.
    double U = std::acosh(std::max(2.0, 760.0 / z));
    U = std::acosh(std::max(2.0, (760.0 + anu * U) / z)) + 0.5;

    auto log_cosh = [](double w) {
        const double aw = std::fabs(w);
        return aw + std::log1p(std::exp(-2.0 * aw)) - 0.6931471805599453;
    };
    auto f = [=](double u) { return std::exp(-z * std::cosh(u) + log_cosh(nu * u)); };

    std::vector<double> breaks;
    if (anu > 0.0) breaks.push_back(std::asinh(anu / z));
    breaks.push_back(1.0);
    return integrate_adaptive(f, 0.0, U, ctl, breaks);
}

LogQuad log_lower_incomplete(double s, double x, double p, const QuadratureControls& ctl) {
    check_weight_args(s, p);
    if (std::isnan(x) || x < 0.0) throw DomainError("lower_incomplete: x must be >= 0");
    if (p == 0.0 && s <= 0.0)
        throw DomainError("lower_incomplete: needs s > 0 when p = 0");
    if (x == 0.0) return {-kInf, 0.0, 0};
    return to_log(weight_integral(s, 0.0, x, p, ctl));
}

LogQuad log_upper_incomplete(double s, double x, double p, const QuadratureControls& ctl) {
    check_weight_args(s, p);
    if (std::isnan(x) || x < 0.0) throw DomainError("upper_incomplete: x must be >= 0");
    if (p == 0.0 && x == 0.0 && s <= 0.0)
        throw DomainError("upper_incomplete: integral diverges at the origin");
    return to_log(weight_integral(s, x, kInf, p, ctl));
}

double gamma_complete(double s) {
    if (std::isnan(s)) throw DomainError("gamma_complete: nan argument");
    if (s <= 0.0 && s == std::floor(s))
        throw PoleError("gamma_complete: pole at s = " + std::to_string(s));
    return std::tgamma(s);
}

double log_abs_gamma(double s) {
    if (std::isnan(s)) throw DomainError("log_abs_gamma: nan argument");
    if (s <= 0.0 && s == std::floor(s))
        throw PoleError("log_abs_gamma: pole at s = " + std::to_string(s));
    return std::lgamma(s);
}

int gamma_sign(double s) {
    if (s > 0.0) return 1;
    if (s <= 0.0 && s == std::floor(s))
        throw PoleError("gamma_sign: pole at s = " + std::to_string(s));
    const long k = static_cast<long>(std::floor(-s));
    return (k % 2 == 0) ? -1 : 1;
}

} // namespace exthyp
