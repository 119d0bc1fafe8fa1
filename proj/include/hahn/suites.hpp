#pragma once

#include "hahn/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hahn {

struct SuiteOptions {
  // explicit parameters; when absent the suite sweeps its default lattice
  std::optional<std::vector<Rational>> alpha;
  std::optional<int> N;
  std::string check;  // empty runs every check of the suite
  double tol = 1e-10;
  Rational perturb = 0;
};

// uni, bi, mv, oracle, classical, all
const std::vector<std::string>& suite_names();
// check identifiers accepted by --check for a suite
std::vector<std::string> suite_checks(const std::string& suite);

// The values -1/2, 0, 1/2, 3, 7/3 and a fixed ten-element sample of their
// triples that includes the singular points a12 = -1, a12 = 0, a123 = 0.
const std::vector<Rational>& lattice_values();
const std::vector<std::array<Rational, 3>>& lattice_triples();

// Throws std::invalid_argument for unknown suites/checks or a parameter
// count that does not fit the suite.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt);

// Default sweeps, also used by the acceptance driver.
VerificationReport sweep_uni_orthogonality(int max_N);
VerificationReport sweep_uni_genfuns(int max_N);
VerificationReport sweep_bi_exact(int max_N, int max_N_genfun);
VerificationReport sweep_bi_float(int max_N, double tol);
VerificationReport sweep_oracle_exact(int max_N);
VerificationReport sweep_oracle_float(int max_N, double tol);
VerificationReport sweep_mv();
VerificationReport sweep_classical(int max_n);
VerificationReport sweep_su11(int nmax);

}  // namespace hahn
