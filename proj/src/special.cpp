#include "special.hpp"

#include <cmath>

#include "errors.hpp"
#include "gamma_core.hpp"

namespace exthyp {

double laguerre(int m, double gamma, double u) {
    if (m < 0) throw DomainError("laguerre: degree must be >= 0");
    if (m == 0) return 1.0;
    double lk1 = 1.0;                  // L_0
    double lk = 1.0 + gamma - u;       // L_1
    for (int k = 1; k < m; ++k) {
        const double next =
            ((2.0 * k + 1.0 + gamma - u) * lk - (k + gamma) * lk1) / (k + 1.0);
        lk1 = lk;
        lk = next;
    }
    return lk;
}

double bessel_j(double nu, double u) {
    if (std::isnan(nu) || std::isnan(u)) throw DomainError("bessel_j: nan argument");
    if (nu <= -1.0) throw DomainError("bessel_j: needs nu > -1");
    if (u < 0.0) throw DomainError("bessel_j: needs u >= 0");
    if (u == 0.0) return nu == 0.0 ? 1.0 : 0.0;

    const long double q = -static_cast<long double>(u) * u / 4.0L;
    long double term = std::exp(static_cast<long double>(nu) * std::log(static_cast<long double>(u) / 2.0L)
                                - lgammal(static_cast<long double>(nu) + 1.0L));
    long double sum = term;
    for (int k = 0; k < 1000; ++k) {
        term *= q / ((k + 1.0L) * (nu + k + 1.0L));
        sum += term;
        if (fabsl(term) <= 1e-21L * fabsl(sum) && k > u / 2.0) break;
    }
    return static_cast<double>(sum);
}

double erf_value(double u) {
    return std::erf(u);
}

QuadResult classical_lower_gamma(double s, double u, const QuadratureControls& ctl) {
    return lower_incomplete(s, u, 0.0, ctl);
}

double beta_function(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("beta_function: needs a > 0 and b > 0");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

} // namespace exthyp
