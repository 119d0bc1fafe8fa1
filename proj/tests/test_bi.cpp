#include "hahn/combinat.hpp"
#include "hahn/hahn_bi.hpp"
#include "hahn/matrix.hpp"
#include "random_params.hpp"

#include <cmath>
#include <doctest.h>

using namespace hahn;
using R = Rational;

namespace {

BiParams zero(int N) { return make_bi_params(0, 0, 0, N); }

BiParams random_params(testing::ParamGen& g, int N) { return make_bi_params(g.alpha(), g.alpha(), g.alpha(), N); }

}  // namespace

TEST_CASE("ordering is k-major colex") {
  auto g = grid_points(2);
  REQUIRE(g.size() == 6);
  CHECK(g[0] == GridPoint{0, 0});
  CHECK(g[1] == GridPoint{1, 0});
  CHECK(g[2] == GridPoint{2, 0});
  CHECK(g[3] == GridPoint{0, 1});
  CHECK(g[5] == GridPoint{0, 2});
  for (int N = 0; N <= 6; ++N) {
    CHECK(simplex_size(N) == (N + 1) * (N + 2) / 2);
    auto pts = grid_points(N);
    for (int j = 0; j < simplex_size(N); ++j) CHECK(simplex_index(pts[j].i, pts[j].k, N) == j);
  }
  CHECK(simplex_index(2, 1, 2) == -1);
}

TEST_CASE("hand values at N = 1") {
  auto p = zero(1);
  auto pts = grid_points(1);
  std::vector<R> p10, p01;
  for (auto g : pts) {
    CHECK(weight2(g, p) == R(1, 3));
    CHECK(amplitude(g, p) == RadicalScalar(1, R(1, 3)));
    p10.push_back(p2_eval({1, 0}, g, p));
    p01.push_back(p2_eval({0, 1}, g, p));
    CHECK(p2_eval({0, 0}, g, p) == 1);
  }
  CHECK(p10 == std::vector<R>{0, -1, 1});
  CHECK(p01 == std::vector<R>{2, -1, -1});
  CHECK(lambda2({0, 0}, p) == 1);
  CHECK(lambda2({1, 0}, p) == R(2, 3));
  CHECK(lambda2({0, 1}, p) == 2);
  CHECK(bigLambda({0, 0}, p) == 1);
  CHECK(bigLambda({1, 0}, p) == R(2, 3));
  CHECK(bigLambda({0, 1}, p) == 2);
  CHECK(weight2({0, 0}, zero(0)) == 1);
  CHECK(amplitude({0, 0}, zero(0)) == RadicalScalar(1, 1));
  CHECK(q2_eval({0, 0}, {0, 0}, zero(0)) == RadicalScalar(1, 1));
}

TEST_CASE("normalized sign convention is frozen") {
  auto p = zero(1);
  // Q = hh / sqrt(Lambda), hh = (-N)_{m+n} P
  CHECK(q2_eval({1, 0}, {0, 1}, p).squared() == R(3, 2));
  CHECK(q2_eval({1, 0}, {0, 1}, p).sign() == -1);
  CHECK(q2_float({1, 0}, {0, 1}, p) == doctest::Approx(-std::sqrt(1.5)));
  auto o = overlap2(p, OverlapMode::Float);
  const double r2 = 1 / std::sqrt(2.0), r3 = 1 / std::sqrt(3.0), r6 = 1 / std::sqrt(6.0);
  double want[3][3] = {{r3, 0, -2 * r6}, {r3, r2, r6}, {r3, -r2, r6}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(o.at(r, c) == doctest::Approx(want[r][c]).epsilon(1e-14));
}

TEST_CASE("off-simplex inputs are rejected") {
  auto p = zero(2);
  CHECK_THROWS_AS(weight2({2, 1}, p), std::out_of_range);
  CHECK_THROWS_AS(p2_eval({2, 1}, {0, 0}, p), std::out_of_range);
  CHECK_THROWS_AS(lambda2({3, 0}, p), std::out_of_range);
  CHECK_THROWS_AS(q2_eval({0, 0}, {-1, 0}, p), std::out_of_range);
  CHECK_THROWS_AS(make_bi_params(0, -1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_bi_params(0, 0, 0, -1), std::invalid_argument);
}

TEST_CASE("weights sum to one and amplitudes square to weights") {
  testing::ParamGen g(41);
  for (int t = 0; t < 30; ++t) {
    int N = g.uniform(0, 8);
    auto p = random_params(g, N);
    R s = 0;
    for (auto pt : grid_points(N)) {
      R w = weight2(pt, p);
      CHECK(w > 0);
      CHECK(amplitude(pt, p).squared() == w);
      s += w;
    }
    CHECK(s == 1);
  }
}

TEST_CASE("brute-force Gram matrix matches lambda and normalizations are consistent") {
  testing::ParamGen g(42);
  for (int t = 0; t < 12; ++t) {
    int N = g.uniform(0, 5);
    auto p = random_params(g, N);
    auto degs = degree_pairs(N);
    auto pts = grid_points(N);
    for (size_t a = 0; a < degs.size(); ++a) {
      auto d = degs[a];
      R poch = pochhammer(-N, d.m + d.n);
      CHECK(bigLambda(d, p) == lambda2(d, p) * poch * poch);
      for (auto pt : pts) {
        R P = p2_eval(d, pt, p);
        CHECK(hh_product(d, pt, p) == poch * P);
        CHECK(h2_eval(d, pt, p) == P / R(factorial(d.m) * factorial(d.n)));
        CHECK(q2_eval(d, pt, p).squared() * bigLambda(d, p) == hh_product(d, pt, p) * hh_product(d, pt, p));
      }
      for (size_t b = 0; b <= a; ++b) {
        R s = 0;
        for (auto pt : pts) s += weight2(pt, p) * p2_eval(d, pt, p) * p2_eval(degs[b], pt, p);
        CHECK(s == (a == b ? lambda2(d, p) : R(0)));
      }
    }
  }
}

TEST_CASE("P has total degree m+n") {
  testing::ParamGen g(43);
  for (int t = 0; t < 15; ++t) {
    int N = g.uniform(2, 6);
    R a1 = g.alpha(), a2 = g.alpha(), a3 = g.alpha();
    int m = g.uniform(0, N), n = g.uniform(0, N - m), D = m + n;
    auto cont = [&](int i, int k) { return hh_poly(m, n, i, k, a1, a2, a3, N); };
    // fit coefficients of x^a y^b, a + b <= D, on the triangle of side D
    auto fit_pts = grid_points(D);
    int u = simplex_size(D);
    RationalMatrix V(u, u + 1);
    for (int r = 0; r < u; ++r) {
      auto e = degree_pairs(D);
      for (int c = 0; c < u; ++c) V(r, c) = power(fit_pts[r].i, e[c].m) * power(fit_pts[r].k, e[c].n);
      V(r, u) = -cont(fit_pts[r].i, fit_pts[r].k);
    }
    auto ker = nullspace(V);
    REQUIRE(ker.size() == 1);
    REQUIRE(ker[0][u] != 0);
    auto e = degree_pairs(D);
    for (int i = -2; i <= D + 3; ++i)
      for (int k = -1; k <= D + 2; ++k) {
        R v = 0;
        for (int c = 0; c < u; ++c) v += ker[0][c] * power(i, e[c].m) * power(k, e[c].n);
        CHECK(v / ker[0][u] == cont(i, k));
      }
  }
}

TEST_CASE("overlap is orthogonal in both directions and the exact modes agree with float") {
  testing::ParamGen g(44);
  for (int t = 0; t < 10; ++t) {
    int N = g.uniform(0, 7);
    auto p = random_params(g, N);
    auto f = overlap2(p, OverlapMode::Float);
    auto rad = overlap2(p, OverlapMode::Radical);
    auto sq = overlap2(p, OverlapMode::Squared);
    int s = f.size();
    REQUIRE(s == simplex_size(N));
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) {
        double cols = 0, rows = 0;
        for (int r = 0; r < s; ++r) {
          cols += f.at(r, a) * f.at(r, b);
          rows += f.at(a, r) * f.at(b, r);
        }
        CHECK(std::abs(cols - (a == b)) <= 1e-12);
        CHECK(std::abs(rows - (a == b)) <= 1e-12);
        CHECK(std::abs(rad.at(a, b) - f.at(a, b)) <= 1e-13);
        CHECK(std::abs(sq.at(a, b) - f.at(a, b)) <= 1e-13);
      }
    // exact column norms through the squared mode
    for (int c = 0; c < s; ++c) {
      R col = 0;
      for (int r = 0; r < s; ++r) col += sq.squares[static_cast<size_t>(r) * s + c];
      CHECK(col == 1);
    }
  }
}

TEST_CASE("genfun example and random exact relations") {
  auto [lhs, rhs] = bi_genfun_sides({0, 0}, zero(1));
  CHECK(lhs == BiPoly::linear(1, 1, 1));
  CHECK(rhs == lhs);
  testing::ParamGen g(45);
  for (int t = 0; t < 6; ++t) {
    int N = g.uniform(0, 5);
    auto p = random_params(g, N);
    for (const auto& c : bi_checks()) {
      CAPTURE(c);
      CAPTURE(param_echo(p));
      CHECK(verify_bi(c, p).pass());
    }
  }
}

TEST_CASE("every check reports a counterexample under perturbation") {
  auto p = make_bi_params(R(1, 2), R(-1, 2), 3, 3);
  for (const auto& c : bi_checks()) {
    CAPTURE(c);
    auto rep = verify_bi(c, p, {1e-10, R(1, 1000)});
    REQUIRE_FALSE(rep.pass());
    bool any = false;
    for (const auto& r : rep.checks) any = any || (!r.pass && !r.counterexample.empty());
    CHECK(any);
  }
  CHECK_THROWS_AS(verify_bi("nope", p), std::invalid_argument);
}
