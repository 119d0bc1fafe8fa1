#include "hahn/combinat.hpp"
#include "hahn/hahn_bi.hpp"
#include "hahn/hahn_multi.hpp"
#include "hahn/hahn_uni.hpp"
#include "hahn/matrix.hpp"
#include "random_params.hpp"

#include <doctest.h>
#include <numeric>

using namespace hahn;
using R = Rational;

namespace {

MultiParams random_params(testing::ParamGen& g, int d, int N) {
  std::vector<R> a;
  for (int j = 0; j <= d; ++j) a.push_back(g.alpha());
  return make_multi_params(a, N);
}

int total(const MultiIndex& i) { return std::accumulate(i.begin(), i.end(), 0); }

}  // namespace

TEST_CASE("index enumeration and dimension count") {
  for (int d = 1; d <= 5; ++d)
    for (int N = 0; N <= 5; ++N) {
      auto idx = multi_indices(d, N);
      CHECK(R(static_cast<long>(idx.size())) == R(binomial(N + d, d)));
      for (const auto& i : idx) {
        CHECK(static_cast<int>(i.size()) == d);
        CHECK(total(i) <= N);
      }
    }
  auto two = multi_indices(2, 2);
  for (size_t j = 0; j < two.size(); ++j) {
    auto g = grid_points(2)[j];
    CHECK(two[j] == MultiIndex{g.i, g.k});
  }
}

TEST_CASE("examples and validation") {
  using V = std::vector<R>;
  auto p = make_multi_params(V{R(1, 2), 0, 3, R(7, 3)}, 4);
  R s = 0;
  for (const auto& i : multi_indices(3, 4)) s += mv_weight(i, p);
  CHECK(s == 1);
  CHECK(mv_p_eval({0, 0, 0}, {1, 2, 0}, p) == 1);
  CHECK(mv_lambda({0, 0, 0}, p) == 1);
  CHECK_THROWS_AS(make_multi_params(V{0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_multi_params(V{0, -1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(mv_weight({3, 2, 0}, p), std::out_of_range);
  CHECK_THROWS_AS(mv_weight({1, 1}, p), std::out_of_range);
}

TEST_CASE("specializations to one and two variables") {
  testing::ParamGen g(51);
  for (int t = 0; t < 20; ++t) {
    int N = g.uniform(0, 6);
    auto p1 = random_params(g, 1, N);
    auto u = make_uni_params(p1.alphas[0], p1.alphas[1], N);
    for (int x = 0; x <= N; ++x) {
      CHECK(mv_weight({x}, p1) == hahn_weight(x, u));
      for (int n = 0; n <= N; ++n) CHECK(mv_p_eval({n}, {x}, p1) == hahn_eval(n, x, u));
    }
    auto p2 = random_params(g, 2, N);
    auto b = make_bi_params(p2.alphas[0], p2.alphas[1], p2.alphas[2], N);
    for (auto pt : grid_points(N)) {
      CHECK(mv_weight({pt.i, pt.k}, p2) == weight2(pt, b));
      for (auto d : degree_pairs(N)) CHECK(mv_p_eval({d.m, d.n}, {pt.i, pt.k}, p2) == hh_product(d, pt, b));
    }
    for (auto d : degree_pairs(N)) CHECK(mv_lambda({d.m, d.n}, p2) == bigLambda(d, b));
  }
}

TEST_CASE("Gram matrix is diagonal in three and four variables") {
  testing::ParamGen g(52);
  for (auto [d, N] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    auto p = random_params(g, d, N);
    auto idx = multi_indices(d, N);
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < a; ++b) {
        R s = 0;
        for (const auto& i : idx) s += mv_weight(i, p) * mv_p_eval(idx[a], i, p) * mv_p_eval(idx[b], i, p);
        CHECK(s == 0);
      }
    CHECK(verify_mv(p).pass());
    CHECK_FALSE(verify_mv(p, R(1, 1000)).pass());
  }
}

TEST_CASE("P_n has total degree |n| in three variables") {
  testing::ParamGen g(53);
  const int d = 3, N = 5;
  auto p = random_params(g, d, N);
  for (const auto& n : multi_indices(d, 2)) {
    int D = total(n);
    auto fit = multi_indices(d, D);
    auto mono = multi_indices(d, D);
    int u = static_cast<int>(fit.size());
    auto monomial = [&](const MultiIndex& e, const MultiIndex& i) {
      R v = 1;
      for (int j = 0; j < d; ++j) v *= power(i[j], e[j]);
      return v;
    };
    RationalMatrix V(u, u + 1);
    for (int r = 0; r < u; ++r) {
      for (int c = 0; c < u; ++c) V(r, c) = monomial(mono[c], fit[r]);
      V(r, u) = -mv_p_eval(n, fit[r], p);
    }
    auto ker = nullspace(V);
    REQUIRE(ker.size() == 1);
    REQUIRE(ker[0][u] != 0);
    for (const auto& i : multi_indices(d, N)) {
      if (total(i) <= D) continue;
      R v = 0;
      for (int c = 0; c < u; ++c) v += ker[0][c] * monomial(mono[c], i);
      CHECK(v / ker[0][u] == mv_p_eval(n, i, p));
    }
  }
}
