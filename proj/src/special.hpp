#ifndef EXTHYP_SPECIAL_HPP
#define EXTHYP_SPECIAL_HPP

#include "quadrature.hpp"

namespace exthyp {

// Generalized Laguerre polynomial L_m^{(gamma)}(u) by the three-term
// recurrence.
double laguerre(int m, double gamma, double u);

// J_nu(u) for nu > -1, u >= 0, by the ascending series.  Terms are
// accumulated in extended precision because the series alternates; accuracy
// decays with u and is full double precision for u <= 15 or so.
double bessel_j(double nu, double u);

double erf_value(double u);

// Classical lower incomplete gamma, integrated directly so it stays an
// independent comparison target.
QuadResult classical_lower_gamma(double s, double u, const QuadratureControls& ctl);

double beta_function(double a, double b);

} // namespace exthyp

#endif
