#ifndef EXTHYP_POCHHAMMER_HPP
#define EXTHYP_POCHHAMMER_HPP

#include <cstddef>
#include <vector>

#include "gamma_core.hpp"
#include "logval.hpp"
#include "quadrature.hpp"

namespace exthyp {

// Classical rising factorial (lambda)_n.
double rising(double lambda, long n);
LogVal log_rising(double lambda, long n);

// (lambda; x, p)_nu = gamma(lambda + nu, x; p) / Gamma(lambda)
QuadResult poch_lower(double lambda, double nu, double x, double p,
                      const QuadratureControls& ctl);

// [lambda; x, p]_nu = Gamma(lambda + nu, x; p) / Gamma(lambda)
QuadResult poch_upper(double lambda, double nu, double x, double p,
                      const QuadratureControls& ctl);

// (lambda; p)_nu = Gamma_p(lambda + nu) / Gamma(lambda); the two halves
// above sum to this one.
QuadResult poch_generalized(double lambda, double nu, double p,
                            const QuadratureControls& ctl);

// log Gamma(lambda + n, x; p) for n = 0, 1, 2, ... through the upward
// recurrence Gamma(s+1,x;p) = s Gamma(s,x;p) + p Gamma(s-1,x;p)
//                             + x^s e^{-x-p/x},
// which follows from integrating the derivative of t^s e^{-t-p/t}.
// Every term is positive once s >= 0.5, so the log-space sum is stable;
// smaller indices are evaluated by direct quadrature instead.
class UpperLogSequence {
public:
    UpperLogSequence(double lambda, double x, double p, QuadratureControls ctl);
    double log_at(std::size_t n);
    long n_evals() const { return evals_; }

private:
    double direct(std::size_t n);

    double lambda_, x_, p_;
    QuadratureControls ctl_;
    double log_x_;
    double log_boundary_exp_;   // -x - p/x
    std::size_t rec_start_;
    std::vector<double> logs_;
    long evals_ = 0;
};

// [lambda; x, p]_k for k = 0..count, computed through UpperLogSequence.
std::vector<double> upper_sequence(double lambda, double x, double p, long count,
                                   const QuadratureControls& ctl);

} // namespace exthyp

#endif
