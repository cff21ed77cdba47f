#ifndef EXTHYP_HYP_SERIES_HPP
#define EXTHYP_HYP_SERIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "controls.hpp"
#include "logval.hpp"
#include "pochhammer.hpp"

namespace exthyp {

// Which gamma-type value drives the leading parameter:
//   Lower    -> gamma(alpha1 + n, x; p)
//   Upper    -> Gamma(alpha1 + n, x; p)
//   Complete -> Gamma_p(alpha1 + n)
enum class HypKind { Lower, Upper, Complete };

// A packed run of parameters (lambda + j)/N for j = 0..N-1, contributing
// (lambda)_{N n} / N^{N n} to term n.
struct DeltaBlock {
    int N = 1;
    double lambda = 0.0;
};

struct HypSpec {
    HypKind kind = HypKind::Upper;
    double alpha1 = 1.0;
    double x = 0.0;
    double p = 0.0;
    std::vector<double> num;              // alpha_2 .. alpha_r
    std::vector<double> den;              // beta_1 .. beta_s
    std::vector<DeltaBlock> delta_num;
    std::vector<DeltaBlock> delta_den;
    double z = 0.0;

    int effective_r() const;
    int effective_s() const;
    // First term index made zero by a numerator factor or by z = 0;
    // -1 when the series never terminates.
    long termination_index() const;
    void validate() const;
};

struct SeriesEval {
    double value = 0.0;
    LogVal log_value;
    long terms = 0;
    long quad_evals = 0;
};

// Head coefficient c_n: the gamma-type value at alpha1 + n divided by
// Gamma(alpha1).  Values are cached, so one instance can be shared across
// quadrature nodes or the terms of an outer generating-function sum.
class HeadSequence {
public:
    HeadSequence(HypKind kind, double alpha1, double x, double p,
                 const QuadratureControls& qctl);

    LogVal coeff(std::size_t n);
    long quad_evals() const;
    bool matches(HypKind kind, double alpha1, double x, double p) const;

private:
    enum class Mode { Classical, Zero, LowerQuad, UpperRec };

    HypKind kind_;
    double alpha1_, x_, p_;
    QuadratureControls qctl_;
    Mode mode_ = Mode::Classical;
    double log_gamma_ = 0.0;
    int sign_gamma_ = 1;
    std::optional<UpperLogSequence> rec_;
    std::vector<double> lower_logs_;
    std::vector<LogVal> classical_;
    long evals_ = 0;
};

SeriesEval eval_hyp(const HypSpec& spec, const SeriesControls& sctl,
                    const QuadratureControls& qctl);
SeriesEval eval_hyp(const HypSpec& spec, HeadSequence& head,
                    const SeriesControls& sctl, const QuadratureControls& qctl);

// Classical pFq with no gamma-type head; same term engine, no quadrature.
SeriesEval classical_pfq(const std::vector<double>& num,
                         const std::vector<double>& den, double z,
                         const SeriesControls& sctl);

SeriesEval eval_gauss_2G1(HypKind kind, double alpha, double x, double p,
                          double beta, double gamma, double z,
                          const SeriesControls& sctl, const QuadratureControls& qctl);
SeriesEval eval_kummer_1G1(HypKind kind, double alpha, double x, double p,
                           double gamma, double z,
                           const SeriesControls& sctl, const QuadratureControls& qctl);

// n-th derivative in z: the classical rising-factorial prefactor times the
// same series with every parameter shifted by n (x, p unchanged).
SeriesEval derivative_upper_hyp(const HypSpec& spec, int order,
                                const SeriesControls& sctl,
                                const QuadratureControls& qctl);

} // namespace exthyp

#endif
