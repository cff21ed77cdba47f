#ifndef EXTHYP_FRAC_CALC_HPP
#define EXTHYP_FRAC_CALC_HPP

#include <functional>

#include "verify.hpp"

namespace exthyp {

// Riemann-Liouville integral of order mu from base point a, evaluated at
// y > a: 1/Gamma(mu) times the integral over (a, y) of (y-tau)^{mu-1} f(tau).
// For mu < 1 the substitution u = (y-tau)^mu removes the weight singularity
// before the adaptive rule sees it; a negative left_exponent declares that f
// behaves like (tau-a)^left_exponent at a, straightened the same way.
QuadResult rl_integral_numeric(const std::function<double(double)>& f, double a,
                               double mu, double y, const QuadratureControls& ctl,
                               double left_exponent = 0.0);

// The operator applied to a pure power (tau-a)^{beta-1}:
// Gamma(beta)/Gamma(beta+mu) * (y-a)^{beta+mu-1}.
double rl_power_rule(double beta, double mu, double a, double y);

struct FracCase {
    enum class Op { Integral, Derivative };
    Op op = Op::Integral;
    double a = 0.0;
    double rho = 1.0;
    double mu = 0.5;
    double omega = 0.0;
    double y = 1.0;
    HypSpec base;   // base.z is ignored; the series argument is omega*(tau-a)
};

// Closed forms for the operators applied to (tau-a)^{rho-1} S(omega(tau-a)):
// prefactor (y-a)^{rho+-mu-1} Gamma(rho)/Gamma(rho+-mu), and the series
// gains numerator rho and denominator rho+mu (rho-mu for the derivative).
SeriesEval rl_integral_closed(const FracCase& c, const NumericControls& ctl);
SeriesEval rl_derivative_closed(const FracCase& c, const NumericControls& ctl);

// Closed form against the numeric operator; the derivative case drives
// d^n/dy^n of the numeric integral with Richardson finite differences.
VerificationReport verify_frac(const FracCase& c, double tol,
                               const NumericControls& ctl);

VerificationReport verify_frac_power(double beta, double mu, double a, double y,
                                     double tol, const QuadratureControls& ctl);

} // namespace exthyp

#endif
