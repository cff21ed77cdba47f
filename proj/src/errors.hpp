#ifndef EXTHYP_ERRORS_HPP
#define EXTHYP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exthyp {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the domain where the operation is defined.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Gamma pole hit exactly (non-positive integer argument with p = 0).
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// Structurally invalid series specification (bad denominator parameter,
// inconsistent block, empty requirement, ...).
class InvalidSpecError : public DomainError {
public:
    explicit InvalidSpecError(const std::string& msg) : DomainError(msg) {}
};

// Quadrature ran out of subdivisions before reaching the tolerance.
// Carries the best estimate so callers can report it.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& msg, double best, double err_estimate)
        : Error(msg), best_value(best), err_estimate(err_estimate) {}
    double best_value;
    double err_estimate;
};

// Series terms grow without bound in a regime where the sum cannot converge.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

// Series hit the term cap before satisfying the smallness test.
class MaxTermsError : public Error {
public:
    MaxTermsError(const std::string& msg, double partial_sum)
        : Error(msg), partial_sum(partial_sum) {}
    double partial_sum;
};

} // namespace exthyp

#endif
