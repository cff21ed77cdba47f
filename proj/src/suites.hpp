#ifndef EXTHYP_SUITES_HPP
#define EXTHYP_SUITES_HPP

#include <string>
#include <vector>

#include "verify.hpp"

namespace exthyp {

// Canonical identity checks, grouped by module.  "all" concatenates every
// suite in a fixed order; case lists are deterministic so repeated runs
// produce identical reports.  A positive tol_override replaces each case's
// built-in comparison tolerance (skips are unaffected).
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const NumericControls& ctl,
                                          double tol_override = 0.0);

} // namespace exthyp

#endif
