#include <cmath>
#include <limits>

#include "doctest.h"
#include "quadrature.hpp"

using namespace exthyp;

TEST_CASE("polynomial on a finite interval is exact") {
    QuadratureControls ctl;
    auto q = integrate_adaptive([](double t) { return t * t; }, 0.0, 1.0, ctl);
    CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(q.n_evals >= 15);
    CHECK(q.err_estimate >= 0.0);
    CHECK(q.err_estimate < 1e-12);
}

TEST_CASE("semi-infinite exponential tail") {
    QuadratureControls ctl;
    auto q = integrate_adaptive([](double t) { return std::exp(-t); }, 0.0,
                                std::numeric_limits<double>::infinity(), ctl);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("third moment of the exponential weight") {
    QuadratureControls ctl;
    auto q = integrate_adaptive([](double t) { return t * t * t * std::exp(-t); },
                                0.0, std::numeric_limits<double>::infinity(), ctl);
    CHECK(q.value == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("integrable endpoint singularity converges without special casing") {
    QuadratureControls ctl;
    auto q = integrate_adaptive([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, ctl);
    CHECK(q.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("interior breakpoints split a kink") {
    QuadratureControls ctl;
    const double c = 1.0 / 3.0;
    auto f = [c](double t) { return std::fabs(t - c); };
    auto q = integrate_adaptive(f, 0.0, 1.0, ctl, {c});
    CHECK(q.value == doctest::Approx(5.0 / 18.0).epsilon(1e-13));
}

TEST_CASE("exhausted subdivision budget raises with the best estimate attached") {
    QuadratureControls ctl;
    ctl.max_subdivisions = 3;
    auto f = [](double t) { return 1.0 / std::sqrt(std::fabs(t - 0.37)); };
    CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, ctl), NonConvergenceError);
    try {
        integrate_adaptive(f, 0.0, 1.0, ctl);
    } catch (const NonConvergenceError& e) {
        CHECK(std::isfinite(e.best_value));
        CHECK(e.err_estimate > 0.0);
    }
}

TEST_CASE("control validation rejects nonsense") {
    QuadratureControls bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = QuadratureControls{};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = QuadratureControls{};
    bad.tail_cut_factor = 1.5;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    SeriesControls sbad;
    sbad.max_terms = 0;
    CHECK_THROWS_AS(sbad.validate(), DomainError);
}
