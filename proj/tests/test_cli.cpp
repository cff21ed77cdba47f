#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef EXTHYP_CLI_PATH
#error "EXTHYP_CLI_PATH must point at the command line binary"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = "cli_capture_" + std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const std::string cmd = std::string(EXTHYP_CLI_PATH) + " " + args + " >" +
                            out_path + " 2>" + err_path;
    int raw = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

double first_number(const std::string& text) {
    return std::strtod(text.c_str(), nullptr);
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char ch : text)
        if (ch == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("eval prints the value and exits cleanly") {
    auto r = run_cli("eval gamma_p s=3 p=0");
    CHECK(r.exit_code == 0);
    CHECK(first_number(r.out) == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(r.err.find("err_estimate=") != std::string::npos);
}

TEST_CASE("eval handles every selector") {
    CHECK(run_cli("eval lower s=1.5 x=2 p=0.5").exit_code == 0);
    CHECK(run_cli("eval upper s=0.5 x=1 p=2").exit_code == 0);
    CHECK(run_cli("eval poch_lower lambda=1.5 nu=2 x=1 p=0.5").exit_code == 0);
    CHECK(run_cli("eval poch_upper lambda=1.5 nu=1 x=0.5 p=1").exit_code == 0);
    CHECK(run_cli("eval hyp kind=upper alpha1=1.5 x=1 p=0.5 num=2 den=3 z=0.3").exit_code == 0);
    CHECK(run_cli("eval genfun family=shifted-single lambda=0.9 n=1 t=0.25 side=lhs "
                  "alpha1=1.2 x=0.8 p=0.5 den=1.9,2.3 z=0.2").exit_code == 0);
    CHECK(run_cli("eval frac op=integral a=0 rho=0.8 mu=0.6 omega=0.7 y=1.4 "
                  "alpha1=1.3 x=0.9 p=0.5 den=1.8").exit_code == 0);
}

TEST_CASE("eval agrees with the frozen oracle value") {
    auto r = run_cli("eval lower s=1.5 x=2 p=0.5");
    CHECK(first_number(r.out) == doctest::Approx(0.32523733622650403).epsilon(1e-11));
    auto h = run_cli("eval hyp kind=upper alpha1=1.5 x=1 p=0.5 num=2 den=3 z=0.3");
    CHECK(first_number(h.out) == doctest::Approx(0.73906808399942581).epsilon(1e-11));
}

TEST_CASE("json output is a single object with the value") {
    auto r = run_cli("eval gamma_p s=3 p=0 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"value\":") != std::string::npos);
    CHECK(r.out.find("\"err_estimate\":") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("eval").exit_code == 1);
    CHECK(run_cli("eval bogus s=1").exit_code == 1);
    CHECK(run_cli("eval gamma_p").exit_code == 1);            // missing s
    CHECK(run_cli("eval gamma_p s=1 s=2 p=0").exit_code == 1);  // duplicate key
    CHECK(run_cli("eval gamma_p s=abc p=0").exit_code == 1);
    CHECK(run_cli("eval gamma_p s=1 p=0 bogus_key=3").exit_code == 1);
    CHECK(run_cli("verify nosuchsuite").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    auto r = run_cli("eval gamma_p");
    CHECK(r.err.find("usage") != std::string::npos);
}

TEST_CASE("domain errors exit 2 and divergence exits 3") {
    CHECK(run_cli("eval lower s=1 x=-1 p=0").exit_code == 2);
    CHECK(run_cli("eval gamma_p s=-2 p=0").exit_code == 2);   // gamma pole
    CHECK(run_cli("eval hyp alpha1=1 num=1,1 z=0.5").exit_code == 3);
}

TEST_CASE("table sweeps the requested variable") {
    auto r = run_cli("table upper s=1 p=0 sweep x 0..2 steps=2 --format csv");
    CHECK(r.exit_code == 0);
    // header plus three rows
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out.find("x,value,err_estimate") == 0);
    std::istringstream rows(r.out);
    std::string line;
    std::getline(rows, line);
    std::getline(rows, line);
    CHECK(first_number(line) == doctest::Approx(0.0));
    // row at x = 1 carries e^{-1}
    std::getline(rows, line);
    auto comma = line.find(',');
    CHECK(std::strtod(line.substr(comma + 1).c_str(), nullptr) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-11));
}

TEST_CASE("table reports row failures in a status column") {
    auto r = run_cli("table gamma_p sweep s -1..1 steps=2 p=0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("status") != std::string::npos);
    CHECK(r.out.find("domain") != std::string::npos);
    CHECK(r.out.find(",ok") != std::string::npos);
}

TEST_CASE("verify suite runs and summarizes") {
    auto r = run_cli("verify gamma");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("passed 51 failed 0 skipped 0") != std::string::npos);
    auto j = run_cli("verify gamma --format json");
    CHECK(j.exit_code == 0);
    CHECK(count_lines(j.out) == 51);
    CHECK(j.out.find("\"identity_id\":") != std::string::npos);
    CHECK(j.err.find("passed 51") != std::string::npos);
}

TEST_CASE("verify all json output is deterministic") {
    auto a = run_cli("verify all --format json");
    auto b = run_cli("verify all --format json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(count_lines(a.out) == 278);
}

TEST_CASE("verify honours a tolerance override without changing the pass set") {
    auto r = run_cli("verify gamma tol=1e-2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("passed 51 failed 0") != std::string::npos);
}
