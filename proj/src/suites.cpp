#include "suites.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

#include "frac_calc.hpp"
#include "gamma_core.hpp"
#include "genfun.hpp"
#include "hyp_series.hpp"
#include "pochhammer.hpp"

namespace exthyp {

namespace {

std::string fmt(double v) { return format_short(v); }

// Uniform doubles built from raw mt19937 words so every platform sees the
// same draw sequence (distribution classes are not portable).
class PortableRng {
  public:
    explicit PortableRng(std::uint32_t seed) : gen_(seed) {}

    double uniform() {
        const std::uint64_t hi = gen_();
        const std::uint64_t lo = gen_();
        return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }

    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int pick(int n) { return static_cast<int>(uniform() * n) % n; }

  private:
    std::mt19937 gen_;
};

void suite_gamma(std::vector<VerificationReport>& out, const NumericControls& ctl) {
    const double svals[] = {-1.5, 0.5, 2.0, 3.7};
    const double xvals[] = {0.1, 1.0, 5.0};
    const double pvals[] = {0.25, 1.0, 4.0};
    for (double s : svals)
        for (double x : xvals)
            for (double p : pvals) {
                QuadResult lo = lower_incomplete(s, x, p, ctl.quad);
                QuadResult up = upper_incomplete(s, x, p, ctl.quad);
                QuadResult full = gamma_p(s, p, ctl.quad);
                std::ostringstream id;
                id << "ext-gamma-decomposition[s=" << fmt(s) << ",x=" << fmt(x)
                   << ",p=" << fmt(p) << "]";
                out.push_back(make_report(id.str(), lo.value + up.value, full.value,
                                          1e-9, 0, lo.n_evals + up.n_evals + full.n_evals));
            }

    const double sk[] = {-1.0, 0.0, 0.5, 2.0};
    const double pk[] = {0.5, 1.0, 3.0};
    for (double s : sk)
        for (double p : pk) {
            QuadResult full = gamma_p(s, p, ctl.quad);
            QuadResult k = bessel_k(s, 2.0 * std::sqrt(p), ctl.quad);
            double rhs = 2.0 * std::pow(p, 0.5 * s) * k.value;
            std::ostringstream id;
            id << "gamma-bessel-k[s=" << fmt(s) << ",p=" << fmt(p) << "]";
            out.push_back(make_report(id.str(), full.value, rhs, 1e-8, 0,
                                      full.n_evals + k.n_evals));
        }

    const double rc[][3] = {{0.7, 0.5, 0.8}, {1.5, 2.0, 0.25}, {-0.5, 1.0, 1.5}};
    for (const auto& c : rc) {
        double s = c[0], x = c[1], p = c[2];
        QuadResult up1 = upper_incomplete(s + 1.0, x, p, ctl.quad);
        QuadResult up0 = upper_incomplete(s, x, p, ctl.quad);
        QuadResult upm = upper_incomplete(s - 1.0, x, p, ctl.quad);
        double boundary = std::pow(x, s) * std::exp(-x - p / x);
        double rhs = s * up0.value + p * upm.value + boundary;
        std::ostringstream id;
        id << "upper-gamma-recurrence[s=" << fmt(s) << ",x=" << fmt(x)
           << ",p=" << fmt(p) << "]";
        out.push_back(make_report(id.str(), up1.value, rhs, 1e-9, 0,
                                  up1.n_evals + up0.n_evals + upm.n_evals));
    }
}

void suite_pochhammer(std::vector<VerificationReport>& out, const NumericControls& ctl) {
    const double lams[] = {0.6, 1.5, 3.2};
    const double nus[] = {0.0, 1.25, 2.5};
    const double xs[] = {0.4, 1.0, 3.0};
    const double ps[] = {0.5, 1.0, 2.0};
    for (double lam : lams)
        for (double nu : nus)
            for (double x : xs)
                for (double p : ps) {
                    QuadResult lo = poch_lower(lam, nu, x, p, ctl.quad);
                    QuadResult up = poch_upper(lam, nu, x, p, ctl.quad);
                    QuadResult full = poch_generalized(lam, nu, p, ctl.quad);
                    std::ostringstream id;
                    id << "poch-decomposition[lam=" << fmt(lam) << ",nu=" << fmt(nu)
                       << ",x=" << fmt(x) << ",p=" << fmt(p) << "]";
                    out.push_back(make_report(id.str(), lo.value + up.value, full.value,
                                              1e-9, 0,
                                              lo.n_evals + up.n_evals + full.n_evals));
                }

    const double slams[] = {0.7, 1.8};
    const int split_nm[][2] = {{1, 1}, {2, 3}, {3, 0}};
    const double split_xp[][2] = {{0.8, 0.6}, {2.0, 1.5}};
    for (double lam : slams)
        for (const auto& nm : split_nm)
            for (const auto& xp : split_xp) {
                int n = nm[0], m = nm[1];
                double x = xp[0], p = xp[1];
                double head = rising(lam, n);
                QuadResult ltail = poch_lower(lam + n, m, x, p, ctl.quad);
                QuadResult lfull = poch_lower(lam, n + m, x, p, ctl.quad);
                std::ostringstream idl;
                idl << "poch-splitting-lower[lam=" << fmt(lam) << ",n=" << n
                    << ",m=" << m << ",x=" << fmt(x) << ",p=" << fmt(p) << "]";
                out.push_back(make_report(idl.str(), lfull.value, head * ltail.value,
                                          1e-12, 0, lfull.n_evals + ltail.n_evals));

                QuadResult utail = poch_upper(lam + n, m, x, p, ctl.quad);
                QuadResult ufull = poch_upper(lam, n + m, x, p, ctl.quad);
                std::ostringstream idu;
                idu << "poch-splitting-upper[lam=" << fmt(lam) << ",n=" << n
                    << ",m=" << m << ",x=" << fmt(x) << ",p=" << fmt(p) << "]";
                out.push_back(make_report(idu.str(), ufull.value, head * utail.value,
                                          1e-12, 0, ufull.n_evals + utail.n_evals));
            }

    // The recurrence-backed sequence must agree with one-at-a-time quadrature.
    {
        const double lam = 0.8, x = 1.2, p = 0.9;
        const int count = 12;
        std::vector<double> seq = upper_sequence(lam, x, p, count, ctl.quad);
        for (int k = 0; k <= count; k += 3) {
            QuadResult direct = poch_upper(lam, k, x, p, ctl.quad);
            std::ostringstream id;
            id << "poch-upper-sequence[k=" << k << "]";
            out.push_back(make_report(id.str(), seq[k], direct.value, 1e-9, 0,
                                      direct.n_evals));
        }
    }
}

HypSpec random_hyp_spec(std::uint32_t seed) {
    PortableRng rng(seed);
    HypSpec spec;
    spec.alpha1 = rng.range(0.3, 3.0);
    spec.x = rng.range(0.1, 4.0);
    spec.p = rng.range(0.05, 2.0);
    int extra_num = rng.pick(3);
    int extra_den = extra_num + rng.pick(2);
    for (int i = 0; i < extra_num; ++i) spec.num.push_back(rng.range(0.2, 2.5));
    for (int i = 0; i < extra_den; ++i) spec.den.push_back(rng.range(0.5, 3.5));
    double mag = rng.range(0.05, 0.5);
    spec.z = (rng.uniform() < 0.5) ? -mag : mag;
    return spec;
}

void suite_hyp(std::vector<VerificationReport>& out, const NumericControls& ctl) {
    for (std::uint32_t seed = 1; seed <= 10; ++seed) {
        HypSpec spec = random_hyp_spec(seed);
        HypSpec lo = spec;
        lo.kind = HypKind::Lower;
        HypSpec up = spec;
        up.kind = HypKind::Upper;
        HypSpec full = spec;
        full.kind = HypKind::Complete;
        SeriesEval le = eval_hyp(lo, ctl.series, ctl.quad);
        SeriesEval ue = eval_hyp(up, ctl.series, ctl.quad);
        SeriesEval fe = eval_hyp(full, ctl.series, ctl.quad);
        std::ostringstream id;
        id << "hyp-decomposition[seed=" << seed << "]";
        out.push_back(make_report(id.str(), le.value + ue.value, fe.value, 1e-9,
                                  le.terms + ue.terms + fe.terms,
                                  le.quad_evals + ue.quad_evals + fe.quad_evals));
    }

    // Complete-kind series collapse to elementary functions.
    const double zs[] = {-0.3, 0.3, 0.5};
    for (double z : zs) {
        {
            HypSpec s;
            s.alpha1 = 1.3;
            s.den = {1.3};
            s.z = z;
            SeriesEval e = eval_hyp(s, ctl.series, ctl.quad);
            std::ostringstream id;
            id << "hyp-exp-reduction[z=" << fmt(z) << "]";
            out.push_back(make_report(id.str(), e.value, std::exp(z), 1e-11,
                                      e.terms, e.quad_evals));
        }
        {
            HypSpec s;
            s.alpha1 = 1.0;
            s.den = {2.0};
            s.z = z;
            SeriesEval e = eval_hyp(s, ctl.series, ctl.quad);
            std::ostringstream id;
            id << "hyp-expm1-reduction[z=" << fmt(z) << "]";
            out.push_back(make_report(id.str(), e.value, std::expm1(z) / z, 1e-11,
                                      e.terms, e.quad_evals));
        }
        {
            HypSpec s;
            s.alpha1 = 1.0;
            s.num = {1.0};
            s.den = {2.0};
            s.z = z;
            SeriesEval e = eval_hyp(s, ctl.series, ctl.quad);
            std::ostringstream id;
            id << "hyp-log-reduction[z=" << fmt(z) << "]";
            out.push_back(make_report(id.str(), e.value, -std::log1p(-z) / z, 1e-11,
                                      e.terms, e.quad_evals));
        }
        {
            HypSpec s;
            s.alpha1 = 1.7;
            s.z = z;
            SeriesEval e = eval_hyp(s, ctl.series, ctl.quad);
            std::ostringstream id;
            id << "hyp-binomial-reduction[z=" << fmt(z) << "]";
            out.push_back(make_report(id.str(), e.value, std::pow(1.0 - z, -1.7),
                                      1e-11, e.terms, e.quad_evals));
        }
    }

    // Parameter-shift derivative rule against Richardson finite differences.
    struct DerivCase {
        double alpha1, x, p;
        std::vector<double> num, den;
        double z;
    };
    const DerivCase dcases[] = {
        {1.5, 1.0, 0.5, {2.0}, {3.0}, 0.3},
        {0.8, 0.5, 1.0, {}, {1.7}, -0.4},
        {2.2, 2.0, 0.8, {1.1}, {2.6}, -0.25},
        {1.0, 0.0, 1.5, {0.7}, {2.2}, 0.35},
        {1.3, 1.5, 0.0, {1.9}, {2.4}, 0.2},
    };
    for (std::size_t ci = 0; ci < std::size(dcases); ++ci) {
        const DerivCase& dc = dcases[ci];
        HypSpec spec;
        spec.kind = HypKind::Upper;
        spec.alpha1 = dc.alpha1;
        spec.x = dc.x;
        spec.p = dc.p;
        spec.num = dc.num;
        spec.den = dc.den;
        spec.z = dc.z;
        auto value_at = [&](double z) {
            HypSpec s = spec;
            s.z = z;
            return eval_hyp(s, ctl.series, ctl.quad).value;
        };
        for (int order = 1; order <= 2; ++order) {
            SeriesEval exact = derivative_upper_hyp(spec, order, ctl.series, ctl.quad);
            double fd;
            const double h = 1e-2;
            if (order == 1) {
                fd = (-value_at(dc.z + 2 * h) + 8 * value_at(dc.z + h) -
                      8 * value_at(dc.z - h) + value_at(dc.z - 2 * h)) /
                     (12 * h);
            } else {
                auto second = [&](double hh) {
                    return (value_at(dc.z + hh) - 2 * value_at(dc.z) +
                            value_at(dc.z - hh)) /
                           (hh * hh);
                };
                fd = (4.0 * second(h / 2) - second(h)) / 3.0;
            }
            std::ostringstream id;
            id << "hyp-derivative[case=" << ci + 1 << ",order=" << order << "]";
            out.push_back(
                make_report(id.str(), exact.value, fd, 1e-5, exact.terms, exact.quad_evals));
        }
    }
}

void suite_reps(std::vector<VerificationReport>& out, const NumericControls& ctl) {
    struct T1Case {
        double alpha1, x, p;
        std::vector<double> num, den;
        double z;
    };
    const T1Case t1[] = {
        {1.5, 1.0, 0.5, {2.0}, {3.0}, 0.3},
        {0.8, 0.5, 1.2, {}, {1.6}, -0.7},
        {2.5, 2.0, 0.25, {-3.0}, {1.8}, 1.7},
    };
    for (const auto& c : t1) {
        HypSpec spec;
        spec.kind = HypKind::Upper;
        spec.alpha1 = c.alpha1;
        spec.x = c.x;
        spec.p = c.p;
        spec.num = c.num;
        spec.den = c.den;
        spec.z = c.z;
        out.push_back(verify_weight_integral(spec, 1e-6, ctl));
    }

    const T1Case t2[] = {
        {1.5, 1.0, 0.5, {0.9}, {2.1}, 0.4},
        {0.7, 0.3, 1.0, {1.2, 0.8}, {1.9, 2.4}, -0.6},
        {2.0, 1.5, 0.75, {1.4}, {3.0}, 0.55},
    };
    for (const auto& c : t2) {
        HypSpec spec;
        spec.kind = HypKind::Upper;
        spec.alpha1 = c.alpha1;
        spec.x = c.x;
        spec.p = c.p;
        spec.num = c.num;
        spec.den = c.den;
        spec.z = c.z;
        out.push_back(verify_beta_reduction(spec, 1e-6, ctl));
    }

    auto add = [&](KernelCase which, KernelParams cp) {
        out.push_back(verify_kernel_identity(which, cp, 1e-6, ctl));
    };

    {
        KernelParams cp;
        cp.alpha = 1.5; cp.x = 1.0; cp.p = 0.5; cp.beta = 0.9; cp.gamma = 2.2; cp.z = 0.4;
        add(KernelCase::Gauss, cp);
        cp.alpha = 0.7; cp.x = 0.4; cp.p = 1.2; cp.beta = 1.3; cp.gamma = 1.9; cp.z = -0.5;
        add(KernelCase::Gauss, cp);
        cp.alpha = 2.4; cp.x = 2.0; cp.p = 0.3; cp.beta = 0.6; cp.gamma = 2.8; cp.z = 0.25;
        add(KernelCase::Gauss, cp);
    }
    {
        KernelParams cp;
        cp.alpha = 1.2; cp.x = 0.8; cp.p = 0.6; cp.gamma = 1.8; cp.z = 0.7;
        add(KernelCase::Kummer, cp);
        cp.alpha = 0.9; cp.x = 1.5; cp.p = 1.1; cp.gamma = 2.5; cp.z = -1.3;
        add(KernelCase::Kummer, cp);
        cp.alpha = 2.0; cp.x = 0.5; cp.p = 0.4; cp.gamma = 1.4; cp.z = 0.5;
        add(KernelCase::Kummer, cp);
    }
    {
        KernelParams cp;
        cp.alpha = 1.6; cp.x = 1.0; cp.p = 0.5; cp.beta = 0.8; cp.gamma = 2.0; cp.z = 0.45;
        add(KernelCase::Euler, cp);
        cp.alpha = 0.8; cp.x = 0.6; cp.p = 1.3; cp.beta = 1.1; cp.gamma = 2.6; cp.z = -0.35;
        add(KernelCase::Euler, cp);
        cp.alpha = 2.2; cp.x = 1.8; cp.p = 0.7; cp.beta = 0.5; cp.gamma = 1.7; cp.z = 0.3;
        add(KernelCase::Euler, cp);
    }
    {
        KernelParams cp;
        cp.alpha = 1.4; cp.x = 0.9; cp.p = 0.8; cp.gamma = 0.5; cp.m = 3; cp.z = 0.8;
        add(KernelCase::Laguerre, cp);
        cp.alpha = 2.1; cp.x = 1.2; cp.p = 0.4; cp.gamma = 0.0; cp.m = 5; cp.z = -0.6;
        add(KernelCase::Laguerre, cp);
        cp.alpha = 0.9; cp.x = 0.5; cp.p = 1.5; cp.gamma = 1.2; cp.m = 2; cp.z = 1.4;
        add(KernelCase::Laguerre, cp);
    }
    {
        KernelParams cp;
        cp.alpha = 1.8; cp.x = 1.0; cp.p = 0.6; cp.beta = 0.7; cp.z = 0.5;
        add(KernelCase::IncGamma, cp);
        cp.alpha = 1.2; cp.x = 0.5; cp.p = 1.1; cp.beta = 1.4; cp.z = 0.8;
        add(KernelCase::IncGamma, cp);
        cp.alpha = 2.5; cp.x = 1.6; cp.p = 0.9; cp.beta = 0.5; cp.z = 0.3;
        add(KernelCase::IncGamma, cp);
    }
    {
        KernelParams cp;
        cp.alpha = 1.5; cp.x = 1.0; cp.p = 0.7; cp.gamma = 0.4; cp.z = 0.9;
        add(KernelCase::BesselJ, cp);
        cp.alpha = 2.2; cp.x = 0.6; cp.p = 1.2; cp.gamma = 1.1; cp.z = 2.5;
        add(KernelCase::BesselJ, cp);
        cp.alpha = 1.0; cp.x = 1.4; cp.p = 0.5; cp.gamma = 0.0; cp.z = 1.2;
        add(KernelCase::BesselJ, cp);
    }
    {
        KernelParams cp;
        cp.alpha = 1.6; cp.x = 1.0; cp.p = 0.5; cp.z = 0.45;
        add(KernelCase::Erf, cp);
        cp.alpha = 0.9; cp.x = 0.7; cp.p = 1.3; cp.z = 0.8;
        add(KernelCase::Erf, cp);
        cp.alpha = 2.3; cp.x = 1.5; cp.p = 0.6; cp.z = 0.25;
        add(KernelCase::Erf, cp);
    }
}

void suite_genfun(std::vector<VerificationReport>& out, const NumericControls& ctl) {
    HypSpec narrow;
    narrow.kind = HypKind::Upper;
    narrow.alpha1 = 1.2;
    narrow.x = 0.8;
    narrow.p = 0.5;
    narrow.den = {1.9, 2.3};
    narrow.z = 0.2;

    HypSpec wide = narrow;
    wide.den = {1.9, 2.3, 1.7, 2.8};
    wide.z = 0.04;

    struct Family {
        GenFunFamily family;
        double lambda;
        int N;
        const HypSpec* base;
    };
    const Family fams[] = {
        {GenFunFamily::ShiftedBlock, 0.8, 2, &narrow},
        {GenFunFamily::TerminatingBlock, 0.8, 2, &narrow},
        {GenFunFamily::PairedBlocks, 0.7, 2, &wide},
        {GenFunFamily::BalancedBlocks, 0.6, 2, &narrow},
        {GenFunFamily::ShiftedSingle, 0.9, 1, &narrow},
        {GenFunFamily::PairedSingle, 0.9, 1, &narrow},
    };
    const double ts[] = {0.0, -0.1, 0.1, -0.25, 0.25, -0.4, 0.4};
    for (const auto& f : fams)
        for (double t : ts) {
            GenFunCase gc;
            gc.family = f.family;
            gc.lambda = f.lambda;
            gc.N = f.N;
            gc.base = *f.base;
            gc.t = t;
            out.push_back(verify_genfun(gc, 1e-6, ctl));
        }
}

void suite_frac(std::vector<VerificationReport>& out, const NumericControls& ctl) {
    const double betas[] = {0.5, 1.3, 2.7};
    const double mus[] = {0.5, 1.0, 1.7};
    for (double beta : betas)
        for (double mu : mus)
            out.push_back(verify_frac_power(beta, mu, 0.5, 2.1, 1e-8, ctl.quad));

    auto base_spec = [](double alpha1, double x, double p, std::vector<double> num,
                        std::vector<double> den) {
        HypSpec s;
        s.kind = HypKind::Upper;
        s.alpha1 = alpha1;
        s.x = x;
        s.p = p;
        s.num = std::move(num);
        s.den = std::move(den);
        return s;
    };

    {
        FracCase fc;
        fc.op = FracCase::Op::Integral;
        fc.a = 0.0; fc.rho = 0.8; fc.mu = 0.6; fc.omega = 0.7; fc.y = 1.4;
        fc.base = base_spec(1.3, 0.9, 0.5, {}, {1.8});
        out.push_back(verify_frac(fc, 1e-6, ctl));
    }
    {
        FracCase fc;
        fc.op = FracCase::Op::Integral;
        fc.a = 0.5; fc.rho = 1.5; fc.mu = 1.0; fc.omega = -0.8; fc.y = 2.0;
        fc.base = base_spec(0.9, 0.4, 1.1, {}, {2.2});
        out.push_back(verify_frac(fc, 1e-6, ctl));
    }
    {
        FracCase fc;
        fc.op = FracCase::Op::Integral;
        fc.a = 0.0; fc.rho = 2.2; fc.mu = 1.7; fc.omega = 0.5; fc.y = 1.2;
        fc.base = base_spec(1.6, 1.2, 0.7, {}, {1.5, 2.4});
        out.push_back(verify_frac(fc, 1e-6, ctl));
    }
    {
        FracCase fc;
        fc.op = FracCase::Op::Integral;
        fc.a = 1.0; fc.rho = 0.6; fc.mu = 0.4; fc.omega = 1.3; fc.y = 2.5;
        fc.base = base_spec(1.1, 0.6, 0.9, {0.8}, {1.9, 1.4});
        out.push_back(verify_frac(fc, 1e-6, ctl));
    }

    {
        FracCase fc;
        fc.op = FracCase::Op::Derivative;
        fc.a = 0.0; fc.rho = 1.7; fc.mu = 0.6; fc.omega = 0.6; fc.y = 1.3;
        fc.base = base_spec(1.2, 0.8, 0.6, {}, {2.0});
        out.push_back(verify_frac(fc, 1e-5, ctl));
    }
    {
        FracCase fc;
        fc.op = FracCase::Op::Derivative;
        fc.a = 0.3; fc.rho = 2.4; fc.mu = 1.3; fc.omega = -0.5; fc.y = 1.8;
        fc.base = base_spec(1.5, 1.1, 0.4, {}, {2.3});
        out.push_back(verify_frac(fc, 1e-5, ctl));
    }
    {
        FracCase fc;
        fc.op = FracCase::Op::Derivative;
        fc.a = 0.0; fc.rho = 0.9; fc.mu = 0.35; fc.omega = 0.9; fc.y = 1.1;
        fc.base = base_spec(0.8, 0.5, 1.2, {}, {1.6, 2.1});
        out.push_back(verify_frac(fc, 1e-5, ctl));
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"gamma", "pochhammer", "hyp",
                                                   "reps",  "genfun",     "frac"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

std::vector<VerificationReport> run_suite(const std::string& name,
                                          const NumericControls& ctl,
                                          double tol_override) {
    if (!is_suite_name(name)) throw InvalidSpecError("unknown suite: " + name);
    std::vector<VerificationReport> out;
    if (name == "gamma" || name == "all") suite_gamma(out, ctl);
    if (name == "pochhammer" || name == "all") suite_pochhammer(out, ctl);
    if (name == "hyp" || name == "all") suite_hyp(out, ctl);
    if (name == "reps" || name == "all") suite_reps(out, ctl);
    if (name == "genfun" || name == "all") suite_genfun(out, ctl);
    if (name == "frac" || name == "all") suite_frac(out, ctl);
    if (tol_override > 0.0)
        for (auto& r : out) {
            if (r.status == VerifyStatus::Skipped) continue;
            r = make_report(r.identity_id, r.lhs, r.rhs, tol_override,
                            r.series_terms, r.quad_evals);
        }
    return out;
}

} // namespace exthyp
