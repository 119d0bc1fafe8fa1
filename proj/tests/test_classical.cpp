#include "hahn/classical.hpp"
#include "hahn/combinat.hpp"
#include "hahn/pfq.hpp"
#include "random_params.hpp"

#include <doctest.h>

using namespace hahn;
using R = Rational;

TEST_CASE("jacobi and laguerre examples") {
  CHECK(jacobi_coeffs(0, R(1, 2), 3) == Poly(1));
  R a(1, 2), b(-1, 3);
  // (a+1) + (a+b+2)(z-1)/2
  CHECK(jacobi_coeffs(1, a, b) == Poly(std::vector<R>{a + 1 - (a + b + 2) / 2, (a + b + 2) / 2}));
  CHECK(jacobi_coeffs(2, 0, 0) == Poly(std::vector<R>{R(-1, 2), 0, R(3, 2)}));
  CHECK(laguerre_coeffs(0, 3) == Poly(1));
  CHECK(laguerre_coeffs(1, a) == Poly(std::vector<R>{a + 1, -1}));
  CHECK(laguerre_coeffs(2, 0) == Poly(std::vector<R>{1, -2, R(1, 2)}));
  CHECK(jacobi_coeffs(-1, 0, 0).is_zero());
}

TEST_CASE("jacobi values agree with the 2F1 oracle") {
  testing::ParamGen g(21);
  for (int t = 0; t < 60; ++t) {
    int n = g.uniform(0, 7);
    R a = g.alpha(), b = g.alpha(), z = g.any();
    R want = pochhammer(a + 1, n) / R(factorial(n)) * pfq_terminating({-n, n + a + b + 1}, {a + 1}, (1 - z) / 2);
    CHECK(jacobi_coeffs(n, a, b).eval(z) == want);
  }
}

TEST_CASE("laguerre values agree with the 1F1 oracle") {
  testing::ParamGen g(22);
  for (int t = 0; t < 60; ++t) {
    int n = g.uniform(0, 8);
    R a = g.alpha(), z = g.any();
    CHECK(laguerre_coeffs(n, a).eval(z) == pochhammer(a + 1, n) / R(factorial(n)) * pfq_terminating({-n}, {a + 1}, z));
  }
}

TEST_CASE("relation examples pass") {
  CHECK(verify_classical("laguerre-lower", 1, 0, 0).pass());
  CHECK(verify_classical("jacobi-lower-1", 2, R(1, 2), R(-1, 3)).pass());
  CHECK(verify_classical("laguerre-addition", 3, R(1, 2), R(3, 2)).pass());
}

TEST_CASE("every relation passes at random parameters and fails when perturbed") {
  testing::ParamGen g(23);
  for (const auto& rel : classical_relations())
    for (int t = 0; t < 8; ++t) {
      int n = g.uniform(1, 8);
      R a = g.alpha(), b = g.alpha();
      CAPTURE(rel);
      CAPTURE(n);
      CHECK(verify_classical(rel, n, a, b).pass());
      auto bad = verify_classical(rel, n, a, b, R(1, 1000));
      REQUIRE_FALSE(bad.pass());
      CHECK_FALSE(bad.checks.front().counterexample.empty());
    }
  CHECK_THROWS_AS(verify_classical("jacobi-nope", 1, 0, 0), std::invalid_argument);
}
