#include "hyp_series.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace exthyp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool nonpositive_integer(double a) {
    return a <= 0.0 && a == std::floor(a);
}

// First term index n at which (a)_n vanishes, -1 if never.
long entry_zero_index(double a) {
    if (!nonpositive_integer(a)) return -1;
    return static_cast<long>(-a) + 1;
}

// First term index n at which (lambda)_{N n} vanishes, -1 if never.
long block_zero_index(const DeltaBlock& b) {
    if (!nonpositive_integer(b.lambda)) return -1;
    const long k = static_cast<long>(-b.lambda) + 1;
    return (k + b.N - 1) / b.N;
}

long min_index(long a, long b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return a < b ? a : b;
}

long termination_of(const std::vector<double>& num,
                    const std::vector<DeltaBlock>& dnum, double z) {
    long best = -1;
    for (double a : num) best = min_index(best, entry_zero_index(a));
    for (const DeltaBlock& b : dnum) best = min_index(best, block_zero_index(b));
    if (z == 0.0) best = min_index(best, 1);
    return best;
}

long den_zero_of(const std::vector<double>& den,
                 const std::vector<DeltaBlock>& dden) {
    long worst = -1;
    for (double b : den) worst = min_index(worst, entry_zero_index(b));
    for (const DeltaBlock& b : dden) worst = min_index(worst, block_zero_index(b));
    return worst;
}

void check_blocks(const std::vector<DeltaBlock>& blocks) {
    for (const DeltaBlock& b : blocks) {
        if (b.N < 1) throw InvalidSpecError("series: block length N must be >= 1");
        if (!std::isfinite(b.lambda))
            throw InvalidSpecError("series: block parameter must be finite");
    }
}

// Shared structural checks for any term family of the engine.
void check_series_shape(const std::vector<double>& num,
                        const std::vector<double>& den,
                        const std::vector<DeltaBlock>& dnum,
                        const std::vector<DeltaBlock>& dden,
                        double z, long r_eff, long s_eff) {
    for (double a : num)
        if (!std::isfinite(a)) throw InvalidSpecError("series: parameters must be finite");
    for (double b : den)
        if (!std::isfinite(b)) throw InvalidSpecError("series: parameters must be finite");
    check_blocks(dnum);
    check_blocks(dden);
    if (!std::isfinite(z)) throw DomainError("series: z must be finite");

    const long t_idx = termination_of(num, dnum, z);
    const long d_idx = den_zero_of(den, dden);
    if (d_idx >= 0 && (t_idx < 0 || t_idx > d_idx))
        throw InvalidSpecError("series: denominator parameter reaches a zero factor");

    if (t_idx < 0 && z != 0.0) {
        if (r_eff > s_eff + 1)
            throw DivergenceError("series: too many numerator parameters, diverges");
        if (r_eff == s_eff + 1 && std::fabs(z) >= 1.0)
            throw DivergenceError("series: |z| must be < 1 for this parameter count");
    }
}

SeriesEval run_series(HeadSequence* head, const HypSpec& spec,
                      const SeriesControls& sctl) {
    sctl.validate();
    const long t_idx = termination_of(spec.num, spec.delta_num, spec.z);
    const long head_evals0 = head ? head->quad_evals() : 0;

    LogAccumulator sum;
    LogVal tail = LogVal::one();   // term n with the head coefficient left out
    int small_run = 0;
    long n = 0;
    while (true) {
        if (t_idx >= 0 && n >= t_idx) break;
        if (n >= sctl.max_terms)
            throw MaxTermsError("series: term cap reached before convergence",
                                sum.total().to_double());

        const LogVal term = head ? head->coeff(static_cast<std::size_t>(n)) * tail
                                 : tail;
        sum.add(term);
        ++n;

        const double mag = sum.scaled_mag(term);
        if (mag <= sctl.rel_tol * (std::fabs(sum.acc) + 1e-300)) {
            if (++small_run >= sctl.consecutive_small) break;
        } else {
            small_run = 0;
        }

        const double dn = static_cast<double>(n - 1);
        for (double a : spec.num) tail.mul_by(a + dn);
        for (const DeltaBlock& b : spec.delta_num) {
            for (int j = 0; j < b.N; ++j)
                tail.mul_by(b.lambda + b.N * dn + static_cast<double>(j));
            tail.log -= b.N * std::log(static_cast<double>(b.N));
        }
        for (double b : spec.den) tail.div_by(b + dn);
        for (const DeltaBlock& b : spec.delta_den) {
            for (int j = 0; j < b.N; ++j)
                tail.div_by(b.lambda + b.N * dn + static_cast<double>(j));
            tail.log += b.N * std::log(static_cast<double>(b.N));
        }
        tail.mul_by(spec.z);
        tail.div_by(dn + 1.0);
        if (tail.sign == 0) break;
    }

    SeriesEval out;
    out.log_value = sum.total();
    out.value = out.log_value.to_double();
    out.terms = n;
    out.quad_evals = head ? head->quad_evals() - head_evals0 : 0;
    return out;
}

} // namespace

int HypSpec::effective_r() const {
    long r = 1 + static_cast<long>(num.size());
    for (const DeltaBlock& b : delta_num) r += b.N;
    return static_cast<int>(r);
}

int HypSpec::effective_s() const {
    long s = static_cast<long>(den.size());
    for (const DeltaBlock& b : delta_den) s += b.N;
    return static_cast<int>(s);
}

long HypSpec::termination_index() const {
    return termination_of(num, delta_num, z);
}

void HypSpec::validate() const {
    if (!std::isfinite(alpha1) || !std::isfinite(x) || !std::isfinite(p))
        throw DomainError("series: head arguments must be finite");
    if (x < 0.0) throw DomainError("series: x must be >= 0");
    if (p < 0.0) throw DomainError("series: p must be >= 0");
    if (nonpositive_integer(alpha1))
        throw PoleError("series: Gamma(alpha1) pole");
    switch (kind) {
    case HypKind::Lower:
    case HypKind::Complete:
        if (p == 0.0 && alpha1 <= 0.0)
            throw DomainError("series: head integral needs alpha1 > 0 when p = 0");
        break;
    case HypKind::Upper:
        if (p == 0.0 && x == 0.0 && alpha1 <= 0.0)
            throw DomainError("series: head integral needs alpha1 > 0 when p = 0, x = 0");
        break;
    }
    check_series_shape(num, den, delta_num, delta_den, z, effective_r(), effective_s());
}

HeadSequence::HeadSequence(HypKind kind, double alpha1, double x, double p,
                           const QuadratureControls& qctl)
    : kind_(kind), alpha1_(alpha1), x_(x), p_(p), qctl_(qctl) {
    if (!std::isfinite(alpha1) || !std::isfinite(x) || !std::isfinite(p))
        throw DomainError("head sequence: arguments must be finite");
    if (x < 0.0 || p < 0.0)
        throw DomainError("head sequence: x and p must be >= 0");
    if (nonpositive_integer(alpha1))
        throw PoleError("head sequence: Gamma(alpha1) pole");

    const double x_eff = (kind == HypKind::Complete) ? 0.0 : x;
    if (kind == HypKind::Lower) {
        if (p == 0.0 && alpha1 <= 0.0)
            throw DomainError("head sequence: needs alpha1 > 0 when p = 0");
        mode_ = (x == 0.0) ? Mode::Zero : Mode::LowerQuad;
    } else if (x_eff == 0.0 && p == 0.0) {
        if (alpha1 <= 0.0)
            throw DomainError("head sequence: needs alpha1 > 0 when p = 0, x = 0");
        mode_ = Mode::Classical;
    } else {
        mode_ = Mode::UpperRec;
        rec_.emplace(alpha1, x_eff, p, qctl_);
    }
    if (mode_ == Mode::LowerQuad || mode_ == Mode::UpperRec) {
        log_gamma_ = log_abs_gamma(alpha1);
        sign_gamma_ = gamma_sign(alpha1);
    }
}

LogVal HeadSequence::coeff(std::size_t n) {
    switch (mode_) {
    case Mode::Zero:
        return LogVal::zero();
    case Mode::Classical: {
        if (classical_.empty()) classical_.push_back(LogVal::one());
        while (classical_.size() <= n) {
            LogVal next = classical_.back();
            next.mul_by(alpha1_ + static_cast<double>(classical_.size()) - 1.0);
            classical_.push_back(next);
        }
        return classical_[n];
    }
    case Mode::LowerQuad: {
        while (lower_logs_.size() <= n) {
            const double s = alpha1_ + static_cast<double>(lower_logs_.size());
            LogQuad lq = log_lower_incomplete(s, x_, p_, qctl_);
            evals_ += lq.n_evals;
            lower_logs_.push_back(lq.log_value);
        }
        if (lower_logs_[n] == kNegInf) return LogVal::zero();
        return {lower_logs_[n] - log_gamma_, sign_gamma_};
    }
    case Mode::UpperRec:
        return {rec_->log_at(n) - log_gamma_, sign_gamma_};
    }
    return LogVal::zero();
}

long HeadSequence::quad_evals() const {
    return evals_ + (rec_ ? rec_->n_evals() : 0);
}

bool HeadSequence::matches(HypKind kind, double alpha1, double x, double p) const {
    return kind == kind_ && alpha1 == alpha1_ && x == x_ && p == p_;
}

SeriesEval eval_hyp(const HypSpec& spec, const SeriesControls& sctl,
                    const QuadratureControls& qctl) {
    spec.validate();
    HeadSequence head(spec.kind, spec.alpha1, spec.x, spec.p, qctl);
    return run_series(&head, spec, sctl);
}

SeriesEval eval_hyp(const HypSpec& spec, HeadSequence& head,
                    const SeriesControls& sctl, const QuadratureControls& qctl) {
    (void)qctl;
    spec.validate();
    if (!head.matches(spec.kind, spec.alpha1, spec.x, spec.p))
        throw InvalidSpecError("eval_hyp: head cache built for different head arguments");
    return run_series(&head, spec, sctl);
}

SeriesEval classical_pfq(const std::vector<double>& num,
                         const std::vector<double>& den, double z,
                         const SeriesControls& sctl) {
    check_series_shape(num, den, {}, {}, z,
                       static_cast<long>(num.size()), static_cast<long>(den.size()));
    HypSpec spec;
    spec.num = num;
    spec.den = den;
    spec.z = z;
    return run_series(nullptr, spec, sctl);
}

SeriesEval eval_gauss_2G1(HypKind kind, double alpha, double x, double p,
                          double beta, double gamma, double z,
                          const SeriesControls& sctl, const QuadratureControls& qctl) {
    HypSpec spec;
    spec.kind = kind;
    spec.alpha1 = alpha;
    spec.x = x;
    spec.p = p;
    spec.num = {beta};
    spec.den = {gamma};
    spec.z = z;
    return eval_hyp(spec, sctl, qctl);
}

SeriesEval eval_kummer_1G1(HypKind kind, double alpha, double x, double p,
                           double gamma, double z,
                           const SeriesControls& sctl, const QuadratureControls& qctl) {
    HypSpec spec;
    spec.kind = kind;
    spec.alpha1 = alpha;
    spec.x = x;
    spec.p = p;
    spec.den = {gamma};
    spec.z = z;
    return eval_hyp(spec, sctl, qctl);
}

SeriesEval derivative_upper_hyp(const HypSpec& spec, int order,
                                const SeriesControls& sctl,
                                const QuadratureControls& qctl) {
    spec.validate();
    if (order < 0) throw DomainError("derivative: order must be >= 0");
    if (!spec.delta_num.empty() || !spec.delta_den.empty())
        throw InvalidSpecError("derivative: needs plain parameter lists");
    if (order == 0) return eval_hyp(spec, sctl, qctl);

    LogVal pref = log_rising(spec.alpha1, order);
    for (double a : spec.num) pref = pref * log_rising(a, order);
    for (double b : spec.den) pref = pref / log_rising(b, order);
    if (pref.sign == 0) return {0.0, LogVal::zero(), 0, 0};

    HypSpec shifted = spec;
    shifted.alpha1 += order;
    for (double& a : shifted.num) a += order;
    for (double& b : shifted.den) b += order;

    SeriesEval e = eval_hyp(shifted, sctl, qctl);
    SeriesEval out;
    out.log_value = pref * e.log_value;
    out.value = out.log_value.to_double();
    out.terms = e.terms;
    out.quad_evals = e.quad_evals;
    return out;
}

} // namespace exthyp
