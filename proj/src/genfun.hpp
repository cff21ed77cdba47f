#ifndef EXTHYP_GENFUN_HPP
#define EXTHYP_GENFUN_HPP

#include "verify.hpp"

namespace exthyp {

// Families of generating relations over t.  The left side is always
// sum over n of (lambda)_n t^n / n! times the base series carrying
// family-dependent packed blocks in n; the right side is the closed form
// (1-t)^{-lambda} times a transformed base series:
//   ShiftedBlock:      num block (N; lambda+n)            -> num block (N; lambda),
//                      z -> z / (1-t)^N
//   TerminatingBlock:  num block (N; -n)                  -> num block (N; lambda),
//                      z -> z (-t/(1-t))^N
//   PairedBlocks:      num blocks (N; -n), (N; lambda+n)  -> num block (2N; lambda),
//                      z -> z (-4t/(1-t)^2)^N
//   BalancedBlocks:    num (N; -n) and den (N; 1-lambda-n) -> base unchanged,
//                      z -> z t^N
// ShiftedSingle and PairedSingle are the N = 1 members, kept as their own
// cases because they drop the packing entirely.
enum class GenFunFamily {
    ShiftedBlock,
    TerminatingBlock,
    PairedBlocks,
    BalancedBlocks,
    ShiftedSingle,
    PairedSingle,
};

struct GenFunCase {
    GenFunFamily family = GenFunFamily::ShiftedSingle;
    double lambda = 1.0;
    int N = 1;
    HypSpec base;      // series being generated; base.z is the fixed argument
    double t = 0.0;
    long m_outer = 0;  // 0 = stop adaptively, else sum n = 0..m_outer exactly
};

// (lambda)_{N n} / N^{N n}, the factor a packed block contributes to term n.
double delta_factor(const DeltaBlock& block, long n);

struct GenFunSide {
    double value = 0.0;
    LogVal log_value;
    long terms = 0;        // series terms across every inner evaluation
    long quad_evals = 0;
    double tail_bound = 0.0;  // outer truncation bound (left side only)
};

GenFunSide gf_lhs(const GenFunCase& c, const NumericControls& ctl);
GenFunSide gf_rhs(const GenFunCase& c, const NumericControls& ctl);

VerificationReport verify_genfun(const GenFunCase& c, double tol,
                                 const NumericControls& ctl);

const char* genfun_family_name(GenFunFamily family);

} // namespace exthyp

#endif
