#include <cmath>

#include "doctest.h"
#include "frac_calc.hpp"

using namespace exthyp;

namespace {
const NumericControls kCtl{};
}

TEST_CASE("power rule closed form") {
    // mu = 1 integrates once: Gamma(beta)/Gamma(beta+1) (y-a)^beta = (y-a)^beta/beta
    CHECK(rl_power_rule(2.0, 1.0, 0.0, 3.0) == doctest::Approx(4.5).epsilon(1e-14));
    // half-integral of 1: 2 sqrt(y/pi)
    CHECK(rl_power_rule(1.0, 0.5, 0.0, 1.0) ==
          doctest::Approx(2.0 / std::sqrt(M_PI)).epsilon(1e-14));
    CHECK_THROWS_AS(rl_power_rule(-0.5, 0.5, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(rl_power_rule(1.0, 0.5, 1.0, 0.5), DomainError);
}

TEST_CASE("numeric operator reproduces the power rule") {
    const double a = 0.5, y = 2.1;
    for (double beta : {0.7, 1.6}) {
        for (double mu : {0.5, 1.3}) {
            auto f = [&](double tau) { return std::pow(tau - a, beta - 1.0); };
            auto q = rl_integral_numeric(f, a, mu, y, kCtl.quad, beta - 1.0);
            CHECK(q.value ==
                  doctest::Approx(rl_power_rule(beta, mu, a, y)).epsilon(1e-9));
        }
    }
}

TEST_CASE("power rule verification reports pass") {
    auto r = verify_frac_power(0.5, 0.5, 0.5, 2.1, 1e-8, kCtl.quad);
    CHECK(r.status == VerifyStatus::Pass);
    r = verify_frac_power(2.7, 1.7, 0.5, 2.1, 1e-8, kCtl.quad);
    CHECK(r.status == VerifyStatus::Pass);
}

TEST_CASE("integral closed form carries the parameter pair") {
    FracCase c;
    c.op = FracCase::Op::Integral;
    c.a = 0.0;
    c.rho = 0.8;
    c.mu = 0.6;
    c.omega = 0.7;
    c.y = 1.4;
    c.base.kind = HypKind::Upper;
    c.base.alpha1 = 1.3;
    c.base.x = 0.9;
    c.base.p = 0.5;
    c.base.den = {1.8};
    auto r = verify_frac(c, 1e-6, kCtl);
    CHECK(r.status == VerifyStatus::Pass);
    CHECK(r.rel_err < 1e-7);
}

TEST_CASE("derivative closed form against Richardson differences") {
    FracCase c;
    c.op = FracCase::Op::Derivative;
    c.a = 0.0;
    c.rho = 1.7;
    c.mu = 0.6;
    c.omega = 0.6;
    c.y = 1.3;
    c.base.kind = HypKind::Upper;
    c.base.alpha1 = 1.2;
    c.base.x = 0.8;
    c.base.p = 0.6;
    c.base.den = {2.0};
    auto r = verify_frac(c, 1e-5, kCtl);
    CHECK(r.status == VerifyStatus::Pass);
}

TEST_CASE("derivative closed form rejects gamma poles downstairs") {
    FracCase c;
    c.op = FracCase::Op::Derivative;
    c.rho = 0.5;
    c.mu = 0.5;   // rho - mu = 0 -> Gamma pole
    c.y = 1.0;
    c.base.alpha1 = 1.1;
    c.base.den = {1.9};
    CHECK_THROWS_AS(rl_derivative_closed(c, kCtl), PoleError);
}

TEST_CASE("operator domain checks") {
    auto f = [](double) { return 1.0; };
    CHECK_THROWS_AS(rl_integral_numeric(f, 0.0, 0.5, -1.0, kCtl.quad), DomainError);
    CHECK_THROWS_AS(rl_integral_numeric(f, 0.0, -0.5, 1.0, kCtl.quad), DomainError);
    CHECK_THROWS_AS(rl_integral_numeric(f, 0.0, 0.5, 1.0, kCtl.quad, -1.0), DomainError);
}
