#ifndef EXTHYP_QUADRATURE_HPP
#define EXTHYP_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "controls.hpp"

namespace exthyp {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long n_evals = 0;
};

// Adaptive Gauss-Kronrod 7-15 integration of f over (a,b).  b may be
// +infinity, in which case the tail beyond the last finite breakpoint is
// folded onto (0,1) with t = A + u/(1-u).  The rule is open, so integrable
// endpoint singularities need no special casing.  interior_breaks lists
// known structure (peaks, kinks); entries outside (a,b) are ignored.
// Throws NonConvergenceError when max_subdivisions is exhausted first.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureControls& ctl,
                              const std::vector<double>& interior_breaks = {});

} // namespace exthyp

#endif
