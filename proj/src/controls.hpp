#ifndef EXTHYP_CONTROLS_HPP
#define EXTHYP_CONTROLS_HPP

#include "errors.hpp"

namespace exthyp {

struct QuadratureControls {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    // Subintervals whose contribution falls below this fraction of the
    // accumulated magnitude are frozen instead of refined further.
    double tail_cut_factor = 1e-18;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol >= 0.0))
            throw DomainError("quadrature tolerances must be positive");
        if (max_subdivisions < 1)
            throw DomainError("max_subdivisions must be at least 1");
        if (!(tail_cut_factor >= 0.0) || tail_cut_factor >= 1.0)
            throw DomainError("tail_cut_factor must lie in [0,1)");
    }
};

struct SeriesControls {
    double rel_tol = 1e-12;
    long max_terms = 10000;
    int consecutive_small = 3;

    void validate() const {
        if (!(rel_tol > 0.0))
            throw DomainError("series rel_tol must be positive");
        if (max_terms < 1)
            throw DomainError("max_terms must be at least 1");
        if (consecutive_small < 1)
            throw DomainError("consecutive_small must be at least 1");
    }
};

struct NumericControls {
    QuadratureControls quad;
    SeriesControls series;
};

} // namespace exthyp

#endif
