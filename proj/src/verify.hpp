#ifndef EXTHYP_VERIFY_HPP
#define EXTHYP_VERIFY_HPP

#include <string>

#include "hyp_series.hpp"

namespace exthyp {

enum class VerifyStatus { Pass, Fail, Skipped };

struct VerificationReport {
    std::string identity_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    VerifyStatus status = VerifyStatus::Skipped;
    long series_terms = 0;
    long quad_evals = 0;
};

// PASS when abs_err <= max(tol * max(|lhs|,|rhs|), tol/1000); the absolute
// floor keeps near-zero identities from failing on roundoff alone.
VerificationReport make_report(std::string id, double lhs, double rhs, double tol,
                               long series_terms, long quad_evals);

// Series value against the weighted integral of the classical inner series:
// the sum with head alpha1 equals 1/Gamma(alpha1) times the integral over
// (x, infinity) of t^{alpha1-1} e^{-t-p/t} pFq(num; den; z t).
// Returns a Skipped report when the integral side does not converge.
VerificationReport verify_weight_integral(const HypSpec& spec, double tol,
                                   const NumericControls& ctl);

// Series value against the Beta-weighted reduction: the last numerator b and
// last denominator c are removed inside the integral over (0,1) of
// t^{b-1}(1-t)^{c-b-1} times the reduced series at z t, divided by B(b, c-b).
VerificationReport verify_beta_reduction(const HypSpec& spec, double tol,
                                   const NumericControls& ctl);

// The named integral-representation identities with classical kernels.
enum class KernelCase {
    Gauss,      // 2G1 against a Kummer 1F1 kernel
    Kummer,     // 1G1 against a 0F1 kernel
    Euler,      // 2G1 against the Beta-weighted 1G0 reduction
    Laguerre,   // terminating 2G1 against a Laguerre polynomial kernel
    IncGamma,   // 2G1 at -z against a lower-incomplete-gamma kernel
    BesselJ,    // 1G1 at -z against a J-Bessel kernel
    Erf,        // 2G1 at -z against an erf kernel
};

struct KernelParams {
    double alpha = 1.0;
    double x = 0.0;
    double p = 0.0;
    double beta = 0.0;    // Gauss/Euler numerator, IncGamma exponent
    double gamma = 0.0;   // denominator parameter / kernel order
    int m = 0;            // Laguerre degree
    double z = 0.0;
};

VerificationReport verify_kernel_identity(KernelCase which, const KernelParams& par,
                                    double tol, const NumericControls& ctl);

const char* kernel_case_name(KernelCase which);
const char* status_name(VerifyStatus st);

// Compact %g rendering used when composing identity ids.
std::string format_short(double v);

} // namespace exthyp

#endif
