#ifndef EXTHYP_GAMMA_CORE_HPP
#define EXTHYP_GAMMA_CORE_HPP

#include "quadrature.hpp"

namespace exthyp {

// Weight t^{s-1} e^{-t - p/t}; defined for t > 0, p >= 0.
double ext_gamma_integrand(double t, double s, double p);
double log_ext_gamma_integrand(double t, double s, double p);

// Location of the integrand maximum on (0, infinity); 0 when the integrand
// is monotone decreasing from the origin (p = 0, s <= 1).
double ext_gamma_peak(double s, double p);

// gamma(s, x; p) = integral over (0, x) of the weight.
// For p = 0 this needs s > 0; for p > 0 every real s is allowed.
QuadResult lower_incomplete(double s, double x, double p, const QuadratureControls& ctl);

// Gamma(s, x; p) = integral over (x, infinity).
QuadResult upper_incomplete(double s, double x, double p, const QuadratureControls& ctl);

// Gamma_p(s) = integral over (0, infinity); the two halves sum to it.
QuadResult gamma_p(double s, double p, const QuadratureControls& ctl);

// K_nu(z) via the cosh representation; comparison target for
// Gamma_p(s) = 2 p^{s/2} K_s(2 sqrt(p)).
QuadResult bessel_k(double nu, double z, const QuadratureControls& ctl);

// Log-space variants for sequences whose plain values would overflow.
struct LogQuad {
    double log_value;
    double rel_err;
    long n_evals;
};
LogQuad log_lower_incomplete(double s, double x, double p, const QuadratureControls& ctl);
LogQuad log_upper_incomplete(double s, double x, double p, const QuadratureControls& ctl);

// Classical complete gamma and helpers shared across modules.
double gamma_complete(double s);
double log_abs_gamma(double s);
int gamma_sign(double s);

} // namespace exthyp

#endif
