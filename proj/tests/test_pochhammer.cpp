#include <cmath>

#include "doctest.h"
#include "pochhammer.hpp"

using namespace exthyp;

namespace {
const QuadratureControls kCtl{};
}

TEST_CASE("rising factorial") {
    CHECK(rising(3.0, 4) == doctest::Approx(360.0).epsilon(1e-15));
    CHECK(rising(2.5, 0) == 1.0);
    CHECK(rising(0.0, 3) == 0.0);
    CHECK(rising(-2.0, 3) == doctest::Approx(0.0));
    CHECK(rising(-2.5, 2) == doctest::Approx(3.75).epsilon(1e-15));
    auto lr = log_rising(3.0, 4);
    CHECK(lr.sign * std::exp(lr.log) == doctest::Approx(360.0).epsilon(1e-13));
}

TEST_CASE("classical limits of the incomplete symbols") {
    // (1; x, 0)_0 = gamma(1, x)/Gamma(1) = 1 - e^{-x}
    CHECK(poch_lower(1.0, 0.0, std::log(2.0), 0.0, kCtl).value ==
          doctest::Approx(0.5).epsilon(1e-12));
    // [1; 1, 0]_0 = e^{-1}
    CHECK(poch_upper(1.0, 0.0, 1.0, 0.0, kCtl).value ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    // (1; p=0)_3 = Gamma(4)/Gamma(1) = 6
    CHECK(poch_generalized(1.0, 3.0, 0.0, kCtl).value ==
          doctest::Approx(6.0).epsilon(1e-12));
    // (2; p=0)_nu with nu = 2 -> Gamma(4)/Gamma(2) = 6
    CHECK(poch_generalized(2.0, 2.0, 0.0, kCtl).value ==
          doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("extended symbols match frozen oracle values") {
    CHECK(poch_lower(1.5, 2.0, 1.0, 0.5, kCtl).value ==
          doctest::Approx(0.074240773316495021).epsilon(1e-11));
    CHECK(poch_upper(1.5, 1.0, 0.5, 1.0, kCtl).value ==
          doctest::Approx(0.87608953410000279).epsilon(1e-11));
    CHECK(poch_generalized(1.5, 0.5, 2.0, kCtl).value ==
          doctest::Approx(0.34893384654369075).epsilon(1e-11));
    // (2; p=1)_0 = Gamma_1(2) = 2 K_2(2)
    CHECK(poch_generalized(2.0, 0.0, 1.0, kCtl).value ==
          doctest::Approx(0.50751950913208221).epsilon(1e-11));
}

TEST_CASE("lower and upper halves sum to the generalized symbol") {
    const double lam = 2.2, nu = 1.3, x = 0.9, p = 0.7;
    double lo = poch_lower(lam, nu, x, p, kCtl).value;
    double up = poch_upper(lam, nu, x, p, kCtl).value;
    double whole = poch_generalized(lam, nu, p, kCtl).value;
    CHECK(lo + up == doctest::Approx(whole).epsilon(1e-12));
}

TEST_CASE("index splitting factors through the classical symbol") {
    // (lam; x, p)_{n+m} = (lam)_n (lam + n; x, p)_m
    const double lam = 0.7, x = 0.8, p = 0.6;
    const long n = 2, m = 3;
    double lhs = poch_lower(lam, double(n + m), x, p, kCtl).value;
    double rhs = rising(lam, n) * poch_lower(lam + n, double(m), x, p, kCtl).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    double ulhs = poch_upper(lam, double(n + m), x, p, kCtl).value;
    double urhs = rising(lam, n) * poch_upper(lam + n, double(m), x, p, kCtl).value;
    CHECK(ulhs == doctest::Approx(urhs).epsilon(1e-13));
}

TEST_CASE("upper sequence classical spot checks") {
    // p = 0, x = 0: Gamma(lam + k)/Gamma(lam).
    auto seq = upper_sequence(1.0, 0.0, 0.0, 3, kCtl);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(seq[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(seq[2] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(seq[3] == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("upper sequence recurrence agrees with direct quadrature") {
    const double lam = 1.5, x = 1.0, p = 1.0;
    auto seq = upper_sequence(lam, x, p, 4, kCtl);
    REQUIRE(seq.size() == 5);
    for (long k = 0; k <= 4; ++k) {
        double direct = poch_upper(lam, double(k), x, p, kCtl).value;
        CHECK(seq[size_t(k)] == doctest::Approx(direct).epsilon(1e-11));
    }
}

TEST_CASE("gamma poles in the normalizer are rejected") {
    CHECK_THROWS_AS(poch_lower(0.0, 1.0, 1.0, 0.5, kCtl), PoleError);
    CHECK_THROWS_AS(poch_upper(-3.0, 1.0, 1.0, 0.5, kCtl), PoleError);
    CHECK_THROWS_AS(poch_generalized(0.0, 1.0, 0.5, kCtl), PoleError);
}
