#include "hahn/coupling.hpp"
#include "random_params.hpp"

#include <cmath>
#include <doctest.h>

using namespace hahn;
using R = Rational;

namespace {

RationalVector p_vector(DegreePair d, const BiParams& p) {
  RationalVector v;
  for (auto g : grid_points(p.N)) v.push_back(p2_eval(d, g, p));
  return v;
}

}  // namespace

TEST_CASE("operator examples") {
  CHECK(build_operator(OperatorLabel::L1, make_bi_params(0, 0, 0, 0)).matrix == RationalMatrix(1, 1));
  auto p = make_bi_params(0, 0, 0, 1);
  auto L1 = build_operator(OperatorLabel::L1, p);
  RationalVector v{0, -1, 1};
  CHECK(L1.matrix * v == RationalVector{0, 2, -2});
  auto L2 = build_operator(OperatorLabel::L2, p);
  auto ker0 = nullspace(L2.matrix);
  CHECK(ker0.size() == 1);
  CHECK(nullspace(L2.matrix + RationalMatrix::identity(3) * R(3)).size() == 2);
}

TEST_CASE("operators annihilate constants, commute and stay on the simplex") {
  testing::ParamGen g(61);
  for (int t = 0; t < 15; ++t) {
    int N = g.uniform(0, 6);
    auto p = make_bi_params(g.alpha(), g.alpha(), g.alpha(), N);
    auto L1 = build_operator(OperatorLabel::L1, p), L2 = build_operator(OperatorLabel::L2, p);
    CHECK(L1.dropped == 0);
    CHECK(L2.dropped == 0);
    RationalVector one(simplex_size(N), 1), zero(simplex_size(N), 0);
    CHECK(L1.matrix * one == zero);
    CHECK(L2.matrix * one == zero);
    CHECK(L1.matrix * L2.matrix == L2.matrix * L1.matrix);
  }
}

TEST_CASE("joint eigenvectors reproduce P up to scale") {
  testing::ParamGen g(62);
  for (int t = 0; t < 10; ++t) {
    int N = g.uniform(0, 5);
    auto p = make_bi_params(g.alpha(), g.alpha(), g.alpha(), N);
    CAPTURE(param_echo(p));
    auto ev = joint_eigenvectors(p);
    REQUIRE(static_cast<int>(ev.size()) == simplex_size(N));
    for (const auto& [d, v] : ev) {
      CHECK(v == normalize_first(p_vector(d, p)));
      if (d == DegreePair{0, 0}) CHECK(v == RationalVector(simplex_size(N), 1));
    }
  }
  auto ev = joint_eigenvectors(make_bi_params(0, 0, 0, 1));
  for (const auto& [d, v] : ev)
    if (d == DegreePair{1, 0}) CHECK(v == RationalVector{0, 1, -1});
}

TEST_CASE("perturbing an operator coefficient is detected") {
  auto p = make_bi_params(R(1, 2), 0, 3, 3);
  CHECK(verify_oracle_exact(p).pass());
  auto rep = verify_oracle_exact(p, R(1, 1000));
  REQUIRE_FALSE(rep.pass());
  bool any = false;
  for (const auto& c : rep.checks) any = any || (!c.pass && !c.counterexample.empty());
  CHECK(any);
}

TEST_CASE("chain factors are orthogonal and compose to the overlap") {
  auto n0 = chain_matrices(make_bi_params(0, 0, 0, 0));
  CHECK(n0.cart_to_cyl.a == std::vector<double>{1});
  CHECK(n0.cyl_to_sph.a == std::vector<double>{1});
  CHECK(cylindrical_states(2) == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}});
  testing::ParamGen g(63);
  for (int t = 0; t < 8; ++t) {
    int N = g.uniform(0, 8);
    auto p = make_bi_params(g.alpha(), g.alpha(), g.alpha(), N);
    auto ch = chain_matrices(p);
    CHECK(identity_defect(multiply(transpose(ch.cart_to_cyl), ch.cart_to_cyl)) <= 1e-12);
    CHECK(identity_defect(multiply(transpose(ch.cyl_to_sph), ch.cyl_to_sph)) <= 1e-12);
    auto prod = multiply(ch.cart_to_cyl, ch.cyl_to_sph);
    auto o = overlap_float(p);
    double worst = 0;
    for (size_t j = 0; j < o.a.size(); ++j) worst = std::max(worst, std::abs(prod.a[j] - o.a[j]));
    CHECK(worst <= 1e-12);
    CHECK(verify_chain(p).pass());
  }
}

TEST_CASE("su(1,1) module") {
  auto s = su11_build(R(3, 4), 5);
  CHECK(su11_casimir(s) == RationalMatrix::identity(6) * R(-3, 16));
  auto comm = s.Kminus * s.Kplus - s.Kplus * s.Kminus - s.K0 * R(2);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 6; ++c) CHECK(comm(r, c) == 0);
  bool top = false;
  for (int c = 0; c < 6; ++c) top = top || comm(5, c) != 0;
  CHECK(top);
  CHECK(s.K0 * s.Kplus - s.Kplus * s.K0 == s.Kplus);
  CHECK(s.K0 * s.Kminus - s.Kminus * s.K0 == s.Kminus * R(-1));
  CHECK_THROWS_AS(su11_build(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(su11_build(1, 0), std::invalid_argument);
  for (auto nu : {R(1, 4), R(1, 2), R(2)}) CHECK(verify_su11(nu, 8).pass());
  CHECK(su11_spectrum_check(make_bi_params(R(-1, 2), R(7, 3), 0, 6)).pass());
}
