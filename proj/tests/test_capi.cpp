#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "exthyp/exthyp.h"

namespace {
struct Ctx {
    exthyp_ctx* p = exthyp_ctx_create();
    ~Ctx() { exthyp_ctx_destroy(p); }
};
}

TEST_CASE("context lifecycle and error text") {
    Ctx c;
    REQUIRE(c.p != nullptr);
    CHECK(std::string(exthyp_last_error(c.p)) == "");
    exthyp_result res;
    CHECK(exthyp_gamma_lower(c.p, 1.0, -1.0, 0.0, &res) == EXTHYP_ERR_DOMAIN);
    CHECK(std::string(exthyp_last_error(c.p)).find("x must be >= 0") !=
          std::string::npos);
    // destroying a null context is a no-op
    exthyp_ctx_destroy(nullptr);
}

TEST_CASE("gamma family entry points") {
    Ctx c;
    exthyp_result res;
    REQUIRE(exthyp_gamma_lower(c.p, 1.0, std::log(2.0), 0.0, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(res.n_evals > 0);

    REQUIRE(exthyp_gamma_upper(c.p, 1.0, 1.0, 0.0, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    REQUIRE(exthyp_gamma_complete(c.p, 1.0, 1.0, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(0.27973176363302726).epsilon(1e-11));

    REQUIRE(exthyp_bessel_k(c.p, 0.0, 2.0, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(0.11389387274953343).epsilon(1e-12));

    CHECK(exthyp_gamma_complete(c.p, -2.0, 0.0, &res) == EXTHYP_ERR_DOMAIN);
    CHECK(exthyp_gamma_lower(c.p, 1.0, 1.0, -1.0, &res) == EXTHYP_ERR_DOMAIN);
}

TEST_CASE("pochhammer entry points") {
    Ctx c;
    exthyp_result res;
    REQUIRE(exthyp_poch_complete(c.p, 1.0, 3.0, 0.0, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(6.0).epsilon(1e-12));
    REQUIRE(exthyp_poch_lower(c.p, 1.5, 2.0, 1.0, 0.5, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(0.074240773316495021).epsilon(1e-11));
    REQUIRE(exthyp_poch_upper(c.p, 1.5, 1.0, 0.5, 1.0, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(0.87608953410000279).epsilon(1e-11));
    CHECK(exthyp_poch_lower(c.p, 0.0, 1.0, 1.0, 0.5, &res) == EXTHYP_ERR_POLE);
}

TEST_CASE("series spec builder round trip") {
    Ctx c;
    exthyp_spec* s = exthyp_spec_create(EXTHYP_KIND_UPPER, 1.5, 1.0, 0.5, 0.3);
    REQUIRE(s != nullptr);
    REQUIRE(exthyp_spec_add_num(s, 2.0) == EXTHYP_OK);
    REQUIRE(exthyp_spec_add_den(s, 3.0) == EXTHYP_OK);
    exthyp_result res;
    REQUIRE(exthyp_eval_hyp(c.p, s, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(0.73906808399942581).epsilon(1e-11));
    CHECK(res.n_terms > 0);
    CHECK(res.n_evals > 0);

    // at z = 0 only the n = 0 term survives: the head ratio [alpha1; x, p]_0
    exthyp_result head0;
    REQUIRE(exthyp_poch_upper(c.p, 1.5, 0.0, 1.0, 0.5, &head0) == EXTHYP_OK);
    REQUIRE(exthyp_spec_set_z(s, 0.0) == EXTHYP_OK);
    REQUIRE(exthyp_eval_hyp(c.p, s, &res) == EXTHYP_OK);
    CHECK(res.value == doctest::Approx(head0.value).epsilon(1e-12));

    exthyp_result dres;
    REQUIRE(exthyp_spec_set_z(s, 0.3) == EXTHYP_OK);
    REQUIRE(exthyp_eval_derivative(c.p, s, 0, &dres) == EXTHYP_OK);
    CHECK(dres.value == doctest::Approx(0.73906808399942581).epsilon(1e-11));
    exthyp_spec_destroy(s);

    // divergent shape maps to the divergence status
    exthyp_spec* bad = exthyp_spec_create(EXTHYP_KIND_UPPER, 1.0, 0.0, 0.0, 0.5);
    REQUIRE(bad != nullptr);
    exthyp_spec_add_num(bad, 1.0);
    exthyp_spec_add_num(bad, 1.0);
    CHECK(exthyp_eval_hyp(c.p, bad, &res) == EXTHYP_ERR_DIVERGENCE);
    exthyp_spec_destroy(bad);
}

TEST_CASE("genfun and frac entry points") {
    Ctx c;
    exthyp_spec* base = exthyp_spec_create(EXTHYP_KIND_UPPER, 1.2, 0.8, 0.5, 0.2);
    REQUIRE(base != nullptr);
    exthyp_spec_add_den(base, 1.9);
    exthyp_spec_add_den(base, 2.3);

    exthyp_result lhs, rhs;
    REQUIRE(exthyp_eval_genfun(c.p, EXTHYP_GENFUN_SHIFTED_SINGLE, 0.9, 1, 0.25,
                               EXTHYP_GENFUN_LHS, base, &lhs) == EXTHYP_OK);
    REQUIRE(exthyp_eval_genfun(c.p, EXTHYP_GENFUN_SHIFTED_SINGLE, 0.9, 1, 0.25,
                               EXTHYP_GENFUN_RHS, base, &rhs) == EXTHYP_OK);
    CHECK(lhs.value == doctest::Approx(rhs.value).epsilon(1e-9));

    exthyp_spec* fbase = exthyp_spec_create(EXTHYP_KIND_UPPER, 1.3, 0.9, 0.5, 0.0);
    REQUIRE(fbase != nullptr);
    exthyp_spec_add_den(fbase, 1.8);
    exthyp_result fres;
    REQUIRE(exthyp_eval_frac(c.p, EXTHYP_FRAC_INTEGRAL, 0.0, 0.8, 0.6, 0.7, 1.4,
                             fbase, &fres) == EXTHYP_OK);
    CHECK(std::isfinite(fres.value));
    CHECK(fres.value > 0.0);
    exthyp_spec_destroy(fbase);
    exthyp_spec_destroy(base);
}

TEST_CASE("verification runs through the handle API") {
    Ctx c;
    exthyp_run* run = nullptr;
    REQUIRE(exthyp_run_suite(c.p, "gamma", 0.0, &run) == EXTHYP_OK);
    REQUIRE(run != nullptr);
    CHECK(exthyp_run_count(run) == 51);
    CHECK(exthyp_run_failures(run) == 0);
    CHECK(exthyp_run_skips(run) == 0);

    const char* id = nullptr;
    const char* status = nullptr;
    double lhs, rhs, abs_err, rel_err, tol;
    long terms, evals;
    REQUIRE(exthyp_run_report(run, 0, &id, &lhs, &rhs, &abs_err, &rel_err, &tol,
                              &status, &terms, &evals) == EXTHYP_OK);
    CHECK(id != nullptr);
    CHECK(std::string(status) == "PASS");
    CHECK(tol == 1e-9);
    CHECK(exthyp_run_report(run, 9999, &id, &lhs, &rhs, &abs_err, &rel_err, &tol,
                            &status, &terms, &evals) == EXTHYP_ERR_INVALID_ARG);
    exthyp_run_destroy(run);

    CHECK(exthyp_run_suite(c.p, "bogus", 0.0, &run) == EXTHYP_ERR_DOMAIN);
}

TEST_CASE("null and invalid arguments are reported, not crashed on") {
    Ctx c;
    exthyp_result res;
    CHECK(exthyp_gamma_lower(nullptr, 1.0, 1.0, 0.0, &res) == EXTHYP_ERR_INVALID_ARG);
    CHECK(exthyp_gamma_lower(c.p, 1.0, 1.0, 0.0, nullptr) == EXTHYP_ERR_INVALID_ARG);
    CHECK(exthyp_eval_hyp(c.p, nullptr, &res) == EXTHYP_ERR_INVALID_ARG);
    CHECK(exthyp_spec_add_num(nullptr, 1.0) == EXTHYP_ERR_INVALID_ARG);
    CHECK(exthyp_run_suite(c.p, nullptr, 0.0, nullptr) == EXTHYP_ERR_INVALID_ARG);
    CHECK(exthyp_ctx_set_quad(c.p, -1.0, 1e-14, 100) == EXTHYP_ERR_DOMAIN);
    CHECK(exthyp_ctx_set_series(c.p, 1e-12, 0) == EXTHYP_ERR_DOMAIN);
    CHECK(exthyp_ctx_set_quad(c.p, 1e-10, 1e-12, 500) == EXTHYP_OK);
}
