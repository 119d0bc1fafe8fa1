#include "hahn/suites.hpp"

#include <doctest.h>

using namespace hahn;
using R = Rational;

namespace {

SuiteOptions explicit_params(std::vector<R> alpha, int N, std::string check = "") {
  SuiteOptions o;
  o.alpha = std::move(alpha);
  o.N = N;
  o.check = std::move(check);
  return o;
}

}  // namespace

TEST_CASE("lattice sample covers the singular parameter points") {
  CHECK(lattice_values().size() == 5);
  auto t = lattice_triples();
  CHECK(t.size() == 10);
  bool a12_m1 = false, a12_0 = false, a123_0 = false;
  for (const auto& a : t) {
    a12_m1 = a12_m1 || a[0] + a[1] == -1;
    a12_0 = a12_0 || a[0] + a[1] == 0;
    a123_0 = a123_0 || a[0] + a[1] + a[2] == 0;
  }
  CHECK(a12_m1);
  CHECK(a12_0);
  CHECK(a123_0);
}

TEST_CASE("explicit runs and check filtering") {
  auto rep = run_suite("bi", explicit_params({0, 0, 0}, 1, "diff-L1"));
  CHECK(rep.pass());
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name.starts_with("diff-L1"));
  CHECK(run_suite("oracle", explicit_params({R(1, 2), 0, 3}, 3)).pass());
  CHECK(run_suite("mv", explicit_params({0, R(1, 2), 3, R(-1, 2)}, 2)).pass());
  CHECK(run_suite("classical", explicit_params({R(1, 2), R(-1, 3)}, 4)).pass());
  auto uni = run_suite("uni", explicit_params({0, 0}, 2));
  CHECK(uni.data.at("gram_diagonal").size() == 3);
}

TEST_CASE("every suite detects injected perturbations") {
  for (auto [suite, alpha] : std::vector<std::pair<std::string, std::vector<R>>>{
           {"uni", {R(1, 2), 3}}, {"bi", {R(1, 2), 0, 3}}, {"mv", {0, R(1, 2), 3}},
           {"oracle", {R(1, 2), 0, 3}}, {"classical", {R(1, 2), R(7, 3)}}}) {
    CAPTURE(suite);
    auto o = explicit_params(alpha, 3);
    CHECK(run_suite(suite, o).pass());
    o.perturb = R(1, 1000);
    CHECK_FALSE(run_suite(suite, o).pass());
  }
}

TEST_CASE("malformed requests throw invalid_argument") {
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("bi", explicit_params({0, 0, 0}, 1, "nope")), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("bi", explicit_params({0, 0}, 1)), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("uni", explicit_params({0, -1}, 1)), std::invalid_argument);
  SuiteOptions all;
  all.N = 3;
  CHECK_THROWS_AS(run_suite("all", all), std::invalid_argument);
  SuiteOptions n_only;
  n_only.N = 3;
  CHECK_THROWS_AS(run_suite("bi", n_only), std::invalid_argument);
  for (const auto& s : suite_names())
    for (const auto& c : suite_checks(s)) CHECK_FALSE(c.empty());
}
