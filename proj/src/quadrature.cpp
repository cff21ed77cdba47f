#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "errors.hpp"

namespace exthyp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights sitting on the even-indexed abscissae.
const double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
const double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
const double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct RuleOut {
    double val = 0.0;
    double err = 0.0;
    bool finite = true;
};

RuleOut gk15(const std::function<double(double)>& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);

    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    RuleOut out;
    out.val = resk * hlgth;
    if (!std::isfinite(out.val)) {
        out.finite = false;
        out.err = kInf;
        return out;
    }
    resabs *= std::fabs(hlgth);
    resasc *= std::fabs(hlgth);
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (resabs > kUflow / (50.0 * kEps))
        abserr = std::max(kEps * 50.0 * resabs, abserr);
    out.err = abserr;
    return out;
}

struct Interval {
    double a, b;
    bool mapped;
    double val, err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureControls& ctl,
                              const std::vector<double>& interior_breaks) {
    ctl.validate();
    if (std::isnan(a) || std::isnan(b) || a == kInf || b == -kInf || !(a < b))
        throw DomainError("integrate_adaptive: bad interval");

    const bool has_tail = (b == kInf);
    const double tail_from = has_tail
        ? (interior_breaks.empty() ? a
                                   : std::max(a, *std::max_element(interior_breaks.begin(),
                                                                   interior_breaks.end())))
        : 0.0;

    // Integrand over the mapped tail variable u in (0,1).
    auto g = [&f, tail_from](double u) {
        const double om = 1.0 - u;
        const double t = tail_from + u / om;
        if (!std::isfinite(t)) return 0.0;
        const double v = f(t);
        return v / (om * om);
    };

    std::vector<double> pts;
    pts.push_back(a);
    for (double c : interior_breaks)
        if (std::isfinite(c) && c > a && (has_tail || c < b)) pts.push_back(c);
    if (!has_tail) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    QuadResult res;
    std::priority_queue<Interval> heap;
    double total_val = 0.0, total_err = 0.0, total_mag = 0.0;
    long n_evals = 0;

    auto push_piece = [&](double lo, double hi, bool mapped) {
        RuleOut r = gk15(mapped ? std::function<double(double)>(g) : f, lo, hi);
        n_evals += 15;
        Interval iv{lo, hi, mapped, r.val, r.err};
        if (!r.finite) iv.val = 0.0;
        total_val += iv.val;
        total_err += iv.err;
        total_mag += std::fabs(iv.val);
        heap.push(iv);
    };

    // Seed: two pieces per finite segment, geometric seeding across wide
    // positive segments so the rule sees the scale structure early.
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        if (lo > 0.0 && hi / lo >= 64.0) {
            const double ratio = std::pow(hi / lo, 1.0 / 8.0);
            double left = lo;
            for (int k = 0; k < 8; ++k) {
                const double right = (k == 7) ? hi : left * ratio;
                push_piece(left, right, false);
                left = right;
            }
        } else {
            const double mid = 0.5 * (lo + hi);
            push_piece(lo, mid, false);
            push_piece(mid, hi, false);
        }
    }
    if (has_tail) {
        const double useed[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
        for (int k = 0; k < 4; ++k) push_piece(useed[k], useed[k + 1], true);
    }

    // Popping an interval without re-pushing freezes it: its contribution
    // stays in the running totals but it is no longer refined.
    int n_subdiv = 0;
    while (true) {
        const double target = std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(total_val));
        if (total_err <= target) break;
        if (heap.empty()) {
            res.value = total_val;
            res.err_estimate = total_err;
            res.n_evals = n_evals;
            if (total_err <= std::max(ctl.abs_tol, 1e-8 * std::fabs(total_val))) break;
            throw NonConvergenceError("integrate_adaptive: refinement stalled",
                                      total_val, total_err);
        }
        Interval worst = heap.top();
        heap.pop();

        if (worst.err <= ctl.tail_cut_factor * total_mag) continue;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a) || !(mid < worst.b)) {
            if (!std::isfinite(worst.err))
                throw NonConvergenceError("integrate_adaptive: integrand not finite",
                                          total_val, total_err);
            continue;
        }
        if (++n_subdiv > ctl.max_subdivisions)
            throw NonConvergenceError("integrate_adaptive: subdivision limit reached",
                                      total_val, total_err);
        total_val -= worst.val;
        total_err -= worst.err;
        total_mag -= std::fabs(worst.val);
        push_piece(worst.a, mid, worst.mapped);
        push_piece(mid, worst.b, worst.mapped);
    }

    res.value = total_val;
    res.err_estimate = total_err;
    res.n_evals = n_evals;
    return res;
}

} // namespace exthyp
