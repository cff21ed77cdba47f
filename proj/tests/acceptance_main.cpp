// Acceptance gate for the library: every check the project must satisfy,
// one line of output each, nonzero exit when anything fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "suites.hpp"

using namespace exthyp;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(int idx, bool pass, const std::string& text) {
    std::printf("criterion %02d %s %s\n", idx, pass ? "PASS" : "FAIL", text.c_str());
    if (!pass) ++g_failures;
}

struct SuiteRun {
    std::vector<VerificationReport> reports;
    double seconds = 0.0;
};

SuiteRun timed_run(const std::string& name) {
    NumericControls ctl;
    SuiteRun r;
    auto t0 = Clock::now();
    try {
        r.reports = run_suite(name, ctl);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "suite %s raised: %s\n", name.c_str(), e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

struct Group {
    int count = 0;
    int non_pass = 0;
    double max_rel = 0.0;
};

Group collect(const std::vector<VerificationReport>& reports,
              const std::string& prefix) {
    Group g;
    for (const auto& r : reports) {
        if (r.identity_id.rfind(prefix, 0) != 0) continue;
        ++g.count;
        if (r.status != VerifyStatus::Pass) ++g.non_pass;
        double rel = std::isfinite(r.rel_err) ? r.rel_err : 1.0;
        g.max_rel = std::max(g.max_rel, rel);
    }
    return g;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string grid_text(const Group& g, int want, double bound, double secs,
                      double budget) {
    std::ostringstream ss;
    ss << g.count << "/" << want << " cases, max rel err " << fmt(g.max_rel)
       << " (bound " << fmt(bound) << "), " << fmt(secs) << "s (budget "
       << fmt(budget) << "s)";
    return ss.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    SuiteRun gamma = timed_run("gamma");
    SuiteRun poch = timed_run("pochhammer");
    SuiteRun hyp = timed_run("hyp");
    SuiteRun reps = timed_run("reps");
    SuiteRun genfun = timed_run("genfun");
    SuiteRun frac = timed_run("frac");

    // 1. lower + upper = complete on the 4x3x3 gamma grid.
    {
        Group g = collect(gamma.reports, "ext-gamma-decomposition");
        bool ok = g.count == 36 && g.non_pass == 0 && g.max_rel <= 1e-9 &&
                  gamma.seconds < 10.0;
        line(1, ok, "gamma split vs complete: " +
                        grid_text(g, 36, 1e-9, gamma.seconds, 10.0));
    }

    // 2. complete extension against the modified Bessel closed form.
    {
        Group g = collect(gamma.reports, "gamma-bessel-k");
        bool ok = g.count == 12 && g.non_pass == 0 && g.max_rel <= 1e-8 &&
                  gamma.seconds < 10.0;
        line(2, ok, "gamma vs 2 p^{s/2} K_s(2 sqrt p): " +
                        grid_text(g, 12, 1e-8, gamma.seconds, 10.0));
    }

    // 3. Pochhammer decomposition grid plus index splitting.
    {
        Group d = collect(poch.reports, "poch-decomposition");
        Group s = collect(poch.reports, "poch-splitting");
        bool ok = d.count == 81 && d.non_pass == 0 && d.max_rel <= 1e-9 &&
                  s.count == 24 && s.non_pass == 0 && s.max_rel <= 1e-12 &&
                  poch.seconds < 5.0;
        line(3, ok,
             "pochhammer split " + grid_text(d, 81, 1e-9, poch.seconds, 5.0) +
                 "; index splitting " + std::to_string(s.count) +
                 "/24 cases, max rel err " + fmt(s.max_rel) + " (bound 1e-12)");
    }

    // 4. Seeded series decompositions.
    {
        Group g = collect(hyp.reports, "hyp-decomposition");
        bool ok = g.count == 10 && g.non_pass == 0 && g.max_rel <= 1e-9 &&
                  hyp.seconds < 10.0;
        line(4, ok, "series lower+upper=complete: " +
                        grid_text(g, 10, 1e-9, hyp.seconds, 10.0));
    }

    // 5. Classical reductions at x = 0, p = 0.
    {
        Group g;
        for (const char* p : {"hyp-exp-reduction", "hyp-expm1-reduction",
                              "hyp-log-reduction", "hyp-binomial-reduction"}) {
            Group h = collect(hyp.reports, p);
            g.count += h.count;
            g.non_pass += h.non_pass;
            g.max_rel = std::max(g.max_rel, h.max_rel);
        }
        bool ok = g.count == 12 && g.non_pass == 0 && g.max_rel <= 1e-11 &&
                  hyp.seconds < 1.0;
        line(5, ok, "exp/expm1/log/binomial reductions: " +
                        grid_text(g, 12, 1e-11, hyp.seconds, 1.0));
    }

    // 6. Integral representations: both general reductions and all seven named
    //    kernels, at least three parameter sets each.
    {
        const std::vector<std::string> groups = {
            "upper-hyp-weight-integral", "upper-hyp-beta-reduction",
            "gauss-series-kummer-kernel", "kummer-series-0f1-kernel",
            "gauss-series-beta-reduction", "laguerre-kernel",
            "incomplete-gamma-kernel",    "bessel-j-kernel",
            "erf-kernel"};
        bool ok = reps.seconds < 60.0;
        int total = 0;
        double worst = 0.0;
        for (const auto& name : groups) {
            Group g = collect(reps.reports, name);
            total += g.count;
            worst = std::max(worst, g.max_rel);
            if (g.count < 3 || g.non_pass != 0) ok = false;
        }
        if (total != int(reps.reports.size())) ok = false;
        std::ostringstream ss;
        ss << "integral representations: " << total << " cases over "
           << groups.size() << " identities, max rel err " << fmt(worst)
           << " (tol 1e-6), " << fmt(reps.seconds) << "s (budget 60s)";
        line(6, ok, ss.str());
    }

    // 7. Derivative closed form against finite differences.
    {
        Group g = collect(hyp.reports, "hyp-derivative");
        bool ok = g.count == 10 && g.non_pass == 0 && g.max_rel <= 1e-5 &&
                  hyp.seconds < 10.0;
        line(7, ok, "derivative vs finite differences: " +
                        grid_text(g, 10, 1e-5, hyp.seconds, 10.0));
    }

    // 8. Generating relations, every family at seven t points.
    {
        const std::vector<std::string> fams = {
            "genfun-shifted-block",  "genfun-terminating-block",
            "genfun-paired-blocks",  "genfun-balanced-blocks",
            "genfun-shifted-single", "genfun-paired-single"};
        bool ok = genfun.seconds < 60.0;
        int total = 0;
        int bad = 0;
        for (const auto& name : fams) {
            Group g = collect(genfun.reports, name);
            total += g.count;
            bad += g.non_pass;
            if (g.count != 7) ok = false;
        }
        if (total != 42 || bad != 0) ok = false;
        std::ostringstream ss;
        ss << "generating relations: " << total
           << "/42 cases pass at rel 1e-6 / abs 1e-9, failures " << bad << ", "
           << fmt(genfun.seconds) << "s (budget 60s)";
        line(8, ok, ss.str());
    }

    // 9. Fractional operators: power rule, integral and derivative closed forms.
    {
        Group pw = collect(frac.reports, "frac-power-rule");
        Group fi = collect(frac.reports, "frac-integral-closed-form");
        Group fd = collect(frac.reports, "frac-derivative-closed-form");
        bool ok = pw.count == 9 && pw.non_pass == 0 && pw.max_rel <= 1e-8 &&
                  fi.count == 4 && fi.non_pass == 0 && fi.max_rel <= 1e-6 &&
                  fd.count == 3 && fd.non_pass == 0 && fd.max_rel <= 1e-5 &&
                  frac.seconds < 60.0;
        std::ostringstream ss;
        ss << "fractional operators: power rule max rel " << fmt(pw.max_rel)
           << " (bound 1e-8, " << pw.count << "/9), integral " << fmt(fi.max_rel)
           << " (bound 1e-6, " << fi.count << "/4), derivative " << fmt(fd.max_rel)
           << " (bound 1e-5, " << fd.count << "/3), " << fmt(frac.seconds)
           << "s (budget 60s)";
        line(9, ok, ss.str());
    }

    // 10. The command line verifier is deterministic and exits zero.
    {
        const std::string cli = EXTHYP_CLI_PATH;
        const std::string f1 = "acceptance_verify_1.json";
        const std::string f2 = "acceptance_verify_2.json";
        int s1 = std::system(
            (cli + " verify all --format json >" + f1 + " 2>/dev/null").c_str());
        int s2 = std::system(
            (cli + " verify all --format json >" + f2 + " 2>/dev/null").c_str());
        int e1 = (s1 >= 0 && WIFEXITED(s1)) ? WEXITSTATUS(s1) : -1;
        int e2 = (s2 >= 0 && WIFEXITED(s2)) ? WEXITSTATUS(s2) : -1;
        std::string a = slurp(f1);
        std::string b = slurp(f2);
        std::remove(f1.c_str());
        std::remove(f2.c_str());
        bool ok = e1 == 0 && e2 == 0 && !a.empty() && a == b;
        std::ostringstream ss;
        ss << "verify all --format json: exits " << e1 << "/" << e2 << ", "
           << a.size() << " bytes, runs " << (a == b ? "identical" : "DIFFER");
        line(10, ok, ss.str());
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failing\n", g_failures);
    return 1;
}
