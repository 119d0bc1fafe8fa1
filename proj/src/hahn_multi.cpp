#include "hahn/hahn_multi.hpp"

#include "hahn/combinat.hpp"
#include "hahn/hahn_bi.hpp"
#include "hahn/hahn_uni.hpp"

#include <numeric>
#include <stdexcept>

namespace hahn {

MultiParams make_multi_params(std::vector<Rational> alphas, int N) {
  if (alphas.size() < 2) throw std::invalid_argument("need at least two parameters (d >= 1)");
  for (const auto& a : alphas)
    if (a <= -1) throw std::invalid_argument("Hahn parameters must exceed -1");
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  return {std::move(alphas), N};
}

std::vector<MultiIndex> multi_indices(int d, int N) {
  std::vector<MultiIndex> out;
  if (d == 0) return {MultiIndex{}};
  // last entry outermost, remaining entries recursively
  for (int last = 0; last <= N; ++last)
    for (auto head : multi_indices(d - 1, N - last)) {
      head.push_back(last);
      out.push_back(std::move(head));
    }
  return out;
}

namespace {

void require(const MultiIndex& v, const MultiParams& p) {
  if (static_cast<int>(v.size()) != p.d()) throw std::out_of_range("multi-index has the wrong length");
  int s = 0;
  for (int x : v) {
    if (x < 0) throw std::out_of_range("negative multi-index entry");
    s += x;
  }
  if (s > p.N) throw std::out_of_range("multi-index off the simplex");
}

std::vector<int> full(const MultiIndex& v, int N) {
  std::vector<int> f = v;
  f.push_back(N - std::accumulate(v.begin(), v.end(), 0));
  return f;
}

std::string show(const MultiIndex& v) {
  std::string s = "(";
  for (size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s + ")";
}

std::string echo(const MultiParams& p) {
  std::string s = "alpha=";
  for (size_t j = 0; j < p.alphas.size(); ++j) s += (j ? "," : "") + p.alphas[j].get_str();
  return s + " N=" + std::to_string(p.N);
}

}  // namespace

Rational mv_weight(const MultiIndex& i, const MultiParams& p) {
  require(i, p);
  auto f = full(i, p.N);
  Rational r = Rational(factorial(p.N));
  Rational total = 0;
  for (size_t j = 0; j < f.size(); ++j) {
    r *= pochhammer(p.alphas[j] + 1, f[j]) / Rational(factorial(f[j]));
    total += p.alphas[j];
  }
  return r / pochhammer(total + static_cast<long>(p.alphas.size()), p.N);
}

Rational mv_p_eval(const MultiIndex& n, const MultiIndex& i, const MultiParams& p) {
  require(n, p);
  require(i, p);
  auto fi = full(i, p.N);
  const int d = p.d();
  Rational r = 1;
  long deg_before = 0, idx_partial = 0;
  Rational alpha_partial = 0;
  for (int k = 1; k <= d; ++k) {
    alpha_partial += p.alphas[k - 1];
    idx_partial += fi[k - 1];
    const Rational a = 2 * deg_before + alpha_partial + (k - 1);
    r *= hahn_poly(n[k - 1], idx_partial - deg_before, a, p.alphas[k], idx_partial + fi[k] - deg_before);
    if (sgn(r) == 0) return 0;
    deg_before += n[k - 1];
  }
  return r;
}

Rational mv_lambda(const MultiIndex& n, const MultiParams& p) {
  require(n, p);
  Rational s = 0;
  for (const auto& i : multi_indices(p.d(), p.N)) {
    Rational v = mv_p_eval(n, i, p);
    s += mv_weight(i, p) * v * v;
  }
  return s;
}

VerificationReport verify_mv(const MultiParams& p, const Rational& perturb) {
  VerificationReport rep;
  rep.suite = "mv";
  rep.params = echo(p);
  const auto idx = multi_indices(p.d(), p.N);
  std::vector<Rational> w;
  for (const auto& i : idx) w.push_back(mv_weight(i, p));

  ExactCheck wsum("weight-sum[" + echo(p) + "]");
  {
    Rational s = 0;
    for (const auto& x : w) s += x;
    wsum.compare(s, 1, "sum over simplex");
  }

  ExactCheck gram("gram-diagonal[" + echo(p) + "]");
  std::vector<std::vector<Rational>> P;
  for (const auto& n : idx) {
    std::vector<Rational> row;
    for (const auto& i : idx) row.push_back(mv_p_eval(n, i, p));
    P.push_back(std::move(row));
  }
  for (size_t a = 0; a < idx.size(); ++a) {
    Rational diag = 0;
    for (size_t x = 0; x < idx.size(); ++x) diag += w[x] * P[a][x] * P[a][x];
    if (sgn(diag) <= 0) gram.fail(show(idx[a]) + " nonpositive norm " + diag.get_str());
    for (size_t b = a + 1; b < idx.size(); ++b) {
      Rational s = 0;
      for (size_t x = 0; x < idx.size(); ++x) s += w[x] * P[a][x] * P[b][x];
      gram.compare(s, a == 0 && b == 1 ? perturb : Rational(0), show(idx[a]) + " vs " + show(idx[b]));
    }
  }
  rep.checks.push_back(wsum.result());
  rep.checks.push_back(gram.result());

  if (p.d() == 1) {
    ExactCheck sp("specialization-d1[" + echo(p) + "]");
    UniParams u{p.alphas[0], p.alphas[1], p.N};
    for (int x = 0; x <= p.N; ++x) {
      sp.compare(mv_weight({x}, p), hahn_weight(x, u), "weight x=" + std::to_string(x));
      for (int n = 0; n <= p.N; ++n)
        sp.compare(mv_p_eval({n}, {x}, p), hahn_eval(n, x, u), "n=" + std::to_string(n) + " x=" + std::to_string(x));
    }
    for (int n = 0; n <= p.N; ++n) sp.compare(mv_lambda({n}, p), hahn_norm(n, u), "norm n=" + std::to_string(n));
    rep.checks.push_back(sp.result());
  } else if (p.d() == 2) {
    ExactCheck sp("specialization-d2[" + echo(p) + "]");
    BiParams b{p.alphas[0], p.alphas[1], p.alphas[2], p.N};
    for (const auto& i : idx) {
      GridPoint g{i[0], i[1]};
      sp.compare(mv_weight(i, p), weight2(g, b), "weight " + show(i));
      for (const auto& n : idx)
        sp.compare(mv_p_eval(n, i, p), hh_product({n[0], n[1]}, g, b), show(n) + " at " + show(i));
    }
    for (const auto& n : idx) sp.compare(mv_lambda(n, p), bigLambda({n[0], n[1]}, b), "Lambda " + show(n));
    rep.checks.push_back(sp.result());
  }
  return rep;
}

}  // namespace hahn
