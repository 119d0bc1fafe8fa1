#include "hahn/hahn_bi.hpp"

#include "hahn/bi_coefficients.hpp"
#include "hahn/classical.hpp"
#include "hahn/combinat.hpp"
#include "hahn/hahn_uni.hpp"
#include "hahn/poly.hpp"
#include "hahn/ratfun.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace hahn {

BiParams make_bi_params(const Rational& a1, const Rational& a2, const Rational& a3, int N) {
  if (a1 <= -1 || a2 <= -1 || a3 <= -1) throw std::invalid_argument("Hahn parameters must exceed -1");
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  return {a1, a2, a3, N};
}

std::string param_echo(const BiParams& p) {
  return "alpha=" + p.alpha1.get_str() + "," + p.alpha2.get_str() + "," + p.alpha3.get_str() +
         " N=" + std::to_string(p.N);
}

namespace {

void require_point(GridPoint g, int N) {
  if (g.i < 0 || g.k < 0 || g.i + g.k > N) throw std::out_of_range("grid point off the simplex");
}

void require_degree(DegreePair d, int N) {
  if (d.m < 0 || d.n < 0 || d.m + d.n > N) throw std::out_of_range("degree off the simplex");
}

Rational weight_raw(long i, long k, const Rational& a1, const Rational& a2, const Rational& a3, long N) {
  return multinomial(static_cast<int>(N), {static_cast<int>(i), static_cast<int>(k)}) *
         pochhammer(a1 + 1, static_cast<int>(i)) * pochhammer(a2 + 1, static_cast<int>(k)) *
         pochhammer(a3 + 1, static_cast<int>(N - i - k)) / pochhammer(a1 + a2 + a3 + 3, static_cast<int>(N));
}

Rational lambda2_raw(int m, int n, const Rational& a1, const Rational& a2, const Rational& a3, int N) {
  const Rational a12 = a1 + a2, a123 = a12 + a3;
  Rational r = Rational(factorial(m) * factorial(n) * factorial(N - m - n)) / Rational(factorial(N));
  r *= pochhammer(a1 + 1, m) * pochhammer(a2 + 1, m) * pochhammer(a3 + 1, n) * pochhammer(a12 + 1 + m, m);
  r /= pochhammer(a123 + 3, N);
  r *= pochhammer(2 * m + a12 + 2, n) * pochhammer(2 * m + a123 + 2 + n, n) *
       pochhammer(2 * m + 2 * n + a123 + 3, N - m - n);
  return r;
}

}  // namespace

Rational hh_poly(int m, int n, long i, long k, const Rational& a1, const Rational& a2, const Rational& a3, long N) {
  if (N < 0 || m < 0 || n < 0 || m + n > N) return 0;
  Rational first = hahn_poly(m, i, a1, a2, i + k);
  if (sgn(first) == 0) return 0;
  return first * hahn_poly(n, i + k - m, 2 * m + a1 + a2 + 1, a3, N - m);
}

Rational weight2(GridPoint g, const BiParams& p) {
  require_point(g, p.N);
  return weight_raw(g.i, g.k, p.alpha1, p.alpha2, p.alpha3, p.N);
}

RadicalScalar amplitude(GridPoint g, const BiParams& p) { return RadicalScalar::sqrt_of(weight2(g, p)); }

Rational hh_product(DegreePair d, GridPoint g, const BiParams& p) {
  require_point(g, p.N);
  require_degree(d, p.N);
  return hh_poly(d.m, d.n, g.i, g.k, p.alpha1, p.alpha2, p.alpha3, p.N);
}

Rational p2_eval(DegreePair d, GridPoint g, const BiParams& p) {
  return hh_product(d, g, p) / pochhammer(Rational(-p.N), d.m + d.n);
}

Rational h2_eval(DegreePair d, GridPoint g, const BiParams& p) {
  return p2_eval(d, g, p) / Rational(factorial(d.m) * factorial(d.n));
}

Rational lambda2(DegreePair d, const BiParams& p) {
  require_degree(d, p.N);
  return lambda2_raw(d.m, d.n, p.alpha1, p.alpha2, p.alpha3, p.N);
}

Rational bigLambda(DegreePair d, const BiParams& p) {
  Rational s = pochhammer(Rational(-p.N), d.m + d.n);
  return lambda2(d, p) * s * s;
}

RadicalScalar q2_eval(DegreePair d, GridPoint g, const BiParams& p) {
  return {hh_product(d, g, p), 1 / bigLambda(d, p)};
}

double q2_float(DegreePair d, GridPoint g, const BiParams& p) { return q2_eval(d, g, p).to_double(); }

// ---------------------------------------------------------------------------

namespace {

long long pack(int m, int n, int i, int k) {
  auto u = [](int v) { return static_cast<long long>(v + 64) & 0xffff; };
  return (u(m) << 48) | (u(n) << 32) | (u(i) << 16) | u(k);
}

const Rational& zero_rational() {
  static const Rational z = 0;
  return z;
}

}  // namespace

BiTable::BiTable(Rational a1, Rational a2, Rational a3, int N)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), N_(N) {
  for (int s = 0; s <= std::max(N, 0); ++s) poch_negN_.push_back(pochhammer(Rational(-N), s));
}

const Rational& BiTable::hh(int m, int n, int i, int k) {
  if (!on_simplex(m, n)) return zero_rational();
  long long key = pack(m, n, i, k);
  auto it = hh_.find(key);
  if (it != hh_.end()) return it->second;
  // first factor h_m(i; a1, a2; i+k), second h_n(i+k-m; 2m+a12+1, a3; N-m)
  long long k1 = pack(m, 0, i, i + k);
  auto f = first_.find(k1);
  if (f == first_.end()) f = first_.emplace(k1, hahn_poly(m, i, a1_, a2_, i + k)).first;
  if (sgn(f->second) == 0) return hh_.emplace(key, 0).first->second;
  long long k2 = pack(m, n, i + k - m, 0);
  auto s = second_.find(k2);
  if (s == second_.end()) s = second_.emplace(k2, hahn_poly(n, i + k - m, 2 * m + a1_ + a2_ + 1, a3_, N_ - m)).first;
  return hh_.emplace(key, f->second * s->second).first->second;
}

Rational BiTable::P(int m, int n, int i, int k) {
  if (!on_simplex(m, n)) return 0;
  return hh(m, n, i, k) / poch_negN_[m + n];
}

const Rational& BiTable::Lambda(int m, int n) {
  if (!on_simplex(m, n)) return zero_rational();
  long long key = pack(m, n, 0, 0);
  auto it = lam_.find(key);
  if (it != lam_.end()) return it->second;
  const Rational& s = poch_negN_[m + n];
  return lam_.emplace(key, lambda2_raw(m, n, a1_, a2_, a3_, N_) * s * s).first->second;
}

double BiTable::Q(int m, int n, int i, int k) {
  if (!on_simplex(m, n)) return 0.0;
  long long key = pack(m, n, i, k);
  auto it = q_.find(key);
  if (it != q_.end()) return it->second;
  const Rational& h = hh(m, n, i, k);
  double v = sgn(h) == 0 ? 0.0 : h.get_d() / std::sqrt(Lambda(m, n).get_d());
  q_.emplace(key, v);
  return v;
}

// ---------------------------------------------------------------------------

double OverlapMatrix::at(int r, int c) const {
  size_t idx = static_cast<size_t>(r) * rows.size() + c;
  switch (mode) {
    case OverlapMode::Float:
      return floats[idx];
    case OverlapMode::Radical:
      return radicals[idx].to_double();
    case OverlapMode::Squared:
      return signs[idx] * std::sqrt(squares[idx].get_d());
  }
  return 0.0;
}

std::string OverlapMatrix::entry_string(int r, int c) const {
  size_t idx = static_cast<size_t>(r) * rows.size() + c;
  switch (mode) {
    case OverlapMode::Float:
      return format_double(floats[idx]);
    case OverlapMode::Radical:
      return radicals[idx].to_string();
    case OverlapMode::Squared: {
      if (signs[idx] == 0) return "0";
      return (signs[idx] < 0 ? "-" : "") + squares[idx].get_str();
    }
  }
  return "";
}

OverlapMatrix overlap2(const BiParams& p, OverlapMode mode) {
  OverlapMatrix o;
  o.params = p;
  o.mode = mode;
  o.rows = grid_points(p.N);
  o.cols = degree_pairs(p.N);
  const size_t n = o.rows.size();
  BiTable t(p.alpha1, p.alpha2, p.alpha3, p.N);
  std::vector<Rational> w;
  for (auto g : o.rows) w.push_back(weight2(g, p));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      const GridPoint g = o.rows[r];
      const DegreePair d = o.cols[c];
      const Rational& h = t.hh(d.m, d.n, g.i, g.k);
      const Rational& lam = t.Lambda(d.m, d.n);
      switch (mode) {
        case OverlapMode::Float:
          o.floats.push_back(sgn(h) == 0 ? 0.0 : h.get_d() * std::sqrt(w[r].get_d() / lam.get_d()));
          break;
        case OverlapMode::Radical:
          o.radicals.emplace_back(h, w[r] / lam);
          break;
        case OverlapMode::Squared:
          o.squares.push_back(w[r] * h * h / lam);
          o.signs.push_back(sgn(h));
          break;
      }
    }
  }
  return o;
}

std::pair<BiPoly, BiPoly> bi_genfun_sides(DegreePair d, const BiParams& p) {
  require_degree(d, p.N);
  const int m = d.m, n = d.n, N = p.N;
  const BiPoly diff = BiPoly::linear(0, -1, 1), sum = BiPoly::linear(0, 1, 1);
  const BiPoly one_minus = BiPoly::linear(1, -1, -1), one_plus = BiPoly::linear(1, 1, 1);
  Poly j1 = jacobi_coeffs(m, p.alpha1, p.alpha2), j2 = jacobi_coeffs(n, 2 * m + p.a12() + 1, p.alpha3);
  BiPoly A, B;
  for (int k = 0; k <= j1.degree(); ++k) A += diff.pow(k) * sum.pow(m - k) * BiPoly(j1.coeff(k));
  for (int k = 0; k <= j2.degree(); ++k) B += one_minus.pow(k) * one_plus.pow(N - m - k) * BiPoly(j2.coeff(k));
  BiPoly rhs;
  for (auto g : grid_points(N))
    rhs += BiPoly::monomial(g.i, g.k, multinomial(N, {g.i, g.k}) * h2_eval(d, g, p));
  return {A * B, rhs};
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& bi_checks() {
  static const std::vector<std::string> names = {
      "orthogonality",   "symmetry",          "recurrence-x1",   "recurrence-x2",
      "diff-L1",         "diff-L2",           "forward-shift-m", "forward-shift-n",
      "backward-shift-m", "backward-shift-n", "structure",       "genfun",
      "normalization",   "normalized-structure-float",          "normalized-recurrence-float",
      "normalized-difference-float",          "normalized-lowering-float",
      "normalized-raising-float"};
  return names;
}

namespace {

using coef::Alphas;

template <size_t K>
using CoefSet = std::array<std::optional<Rational>, K>;

std::string at(int m, int n, int i, int k) {
  return "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") (i,k)=(" + std::to_string(i) + "," +
         std::to_string(k) + ")";
}

// Sum of coefficient * value; terms with a vanishing value are skipped so
// that a coefficient pole only matters where it multiplies something.
struct Acc {
  Rational sum = 0;
  bool ok = true;
  void add(const std::optional<Rational>& c, const Rational& v, int sign = 1) {
    if (sgn(v) == 0) return;
    if (!c) {
      ok = false;
      return;
    }
    if (sign > 0)
      sum += *c * v;
    else
      sum -= *c * v;
  }
  void add(const Rational& c, const Rational& v) { sum += c * v; }
};

void settle(ExactCheck& chk, const Rational& lhs, const Acc& rhs, const std::string& where) {
  if (!rhs.ok)
    chk.fail(where + " coefficient pole");
  else
    chk.compare(lhs, rhs.sum, where);
}

struct FAcc {
  double sum = 0.0;
  void add(double c, double v, int sign = 1) {
    if (v == 0.0) return;
    sum += sign * c * v;
  }
};

double root(const std::optional<Rational>& v) {
  if (!v || sgn(*v) < 0) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(v->get_d());
}

double value(const std::optional<Rational>& v) {
  return v ? v->get_d() : std::numeric_limits<double>::quiet_NaN();
}


class Verifier {
 public:
  Verifier(const BiParams& p, const BiOptions& opt)
      : p_(p), opt_(opt), a1_(p.alpha1), a2_(p.alpha2), a3_(p.alpha3), a12_(p.a12()), a123_(p.a123()),
        N_(p.N), eps_(opt.perturb), feps_(opt.perturb.get_d()) {}

  VerificationReport run(const std::string& check);

 private:
  std::string label(const std::string& name) const { return name + "[" + param_echo(p_) + "]"; }
  CheckResult orthogonality();
  CheckResult symmetry();
  CheckResult recurrence(bool second);
  CheckResult diff_l1();
  CheckResult diff_l2();
  CheckResult forward_m();
  CheckResult forward_n();
  CheckResult backward_m();
  CheckResult backward_n();
  std::vector<CheckResult> structure();
  CheckResult genfun();
  CheckResult normalization();
  std::vector<CheckResult> normalized_structure();
  std::vector<CheckResult> normalized_recurrence();
  std::vector<CheckResult> normalized_difference();
  std::vector<CheckResult> normalized_lowering();
  std::vector<CheckResult> normalized_raising();

  template <size_t K, class F>
  CoefSet<K> coefs(const Rational& b1, const Rational& b2, const Rational& b3, F&& f) const {
    return limit_eval_all<K>(b1, b2, b3, [&](const RatFun& x, const RatFun& y, const RatFun& z) {
      return f(Alphas<RatFun>{x, y, z});
    });
  }

  // square roots of the normalized structure coefficients, zero at negative degrees
  const std::array<double, 4>& norm_struct(bool swapped, int m, int n);

  BiParams p_;
  BiOptions opt_;
  Rational a1_, a2_, a3_, a12_, a123_;
  int N_;
  Rational eps_;
  double feps_;
  std::map<std::tuple<bool, int, int>, std::array<double, 4>> struct_cache_;
};

CheckResult Verifier::orthogonality() {
  ExactCheck chk(label("orthogonality"));
  BiTable t(a1_, a2_, a3_, N_);
  auto G = grid_points(N_);
  auto D = degree_pairs(N_);
  std::vector<Rational> w;
  for (auto g : G) w.push_back(weight_raw(g.i, g.k, a1_, a2_, a3_, N_));
  std::vector<std::vector<Rational>> P(D.size());
  for (size_t a = 0; a < D.size(); ++a)
    for (auto g : G) P[a].push_back(t.P(D[a].m, D[a].n, g.i, g.k));
  for (size_t a = 0; a < D.size(); ++a)
    for (size_t b = a; b < D.size(); ++b) {
      Rational s = 0;
      for (size_t x = 0; x < G.size(); ++x) s += w[x] * P[a][x] * P[b][x];
      Rational expect = a == b ? lambda2_raw(D[a].m, D[a].n, a1_, a2_, a3_, N_) + eps_ : Rational(0);
      chk.compare(s, expect,
                  "(m,n)=(" + std::to_string(D[a].m) + "," + std::to_string(D[a].n) + ") (m',n')=(" +
                      std::to_string(D[b].m) + "," + std::to_string(D[b].n) + ")");
    }
  return chk.result();
}

CheckResult Verifier::symmetry() {
  ExactCheck chk(label("symmetry"));
  BiTable t(a1_, a2_, a3_, N_), s(a2_, a1_, a3_, N_);
  for (auto d : degree_pairs(N_))
    for (auto g : grid_points(N_)) {
      Rational sign = (d.m % 2 ? -1 : 1) + eps_;
      chk.compare(t.P(d.m, d.n, g.i, g.k), sign * s.P(d.m, d.n, g.k, g.i), at(d.m, d.n, g.i, g.k));
    }
  return chk.result();
}

CheckResult Verifier::recurrence(bool second) {
  ExactCheck chk(label(second ? "recurrence-x2" : "recurrence-x1"));
  BiTable t(a1_, a2_, a3_, N_);
  const int N = N_;
  static const int plain[9] = {1, 1, 1, 1, 1, 1, -1, -1, -1};
  static const int swapped[9] = {-1, 1, -1, -1, 1, -1, 1, -1, 1};
  const int* sg = second ? swapped : plain;
  for (auto d : degree_pairs(N)) {
    const int n1 = d.m, n2 = d.n;
    CoefSet<9> c = second ? coefs<9>(a2_, a1_, a3_, [&](const auto& al) { return coef::recurrence_x1(al, n1, n2, N); })
                          : coefs<9>(a1_, a2_, a3_, [&](const auto& al) { return coef::recurrence_x1(al, n1, n2, N); });
    if (c[0]) *c[0] += eps_;
    const int dm[9] = {1, 0, -1, -1, 0, 1, 1, 0, -1};
    const int dn[9] = {0, 1, 2, 1, 0, -1, -2, -1, 0};
    for (auto g : grid_points(N)) {
      Acc acc;
      for (int j = 0; j < 9; ++j) acc.add(c[j], t.P(n1 + dm[j], n2 + dn[j], g.i, g.k), sg[j]);
      settle(chk, Rational(second ? g.k : g.i) * t.P(n1, n2, g.i, g.k), acc, at(n1, n2, g.i, g.k));
    }
  }
  return chk.result();
}

CheckResult Verifier::diff_l1() {
  ExactCheck chk(label("diff-L1"));
  BiTable t(a1_, a2_, a3_, N_);
  for (auto d : degree_pairs(N_)) {
    auto P = [&](int i, int k) { return t.P(d.m, d.n, i, k); };
    for (auto g : grid_points(N_)) {
      const int i = g.i, k = g.k;
      Rational u1 = i * (k + a2_ + 1) + eps_, u2 = k * (i + a1_ + 1);
      Rational lhs = u1 * P(i - 1, k + 1) + u2 * P(i + 1, k - 1) - (u1 + u2) * P(i, k);
      chk.compare(lhs, -d.m * (d.m + a12_ + 1) * P(i, k), at(d.m, d.n, i, k));
    }
  }
  return chk.result();
}

CheckResult Verifier::diff_l2() {
  ExactCheck chk(label("diff-L2"));
  BiTable t(a1_, a2_, a3_, N_);
  for (auto d : degree_pairs(N_)) {
    auto P = [&](int i, int k) { return t.P(d.m, d.n, i, k); };
    for (auto g : grid_points(N_)) {
      const int i = g.i, k = g.k, r = N_ - i - k;
      const Rational o1 = (i + a1_ + 1) * r + eps_, o2 = (k + a2_ + 1) * r, o3 = i * (r + a3_ + 1),
                     o4 = k * (r + a3_ + 1), o5 = k * (i + a1_ + 1), o6 = i * (k + a2_ + 1);
      Rational lhs = o1 * P(i + 1, k) + o2 * P(i, k + 1) + o3 * P(i - 1, k) + o4 * P(i, k - 1) +
                     o5 * P(i + 1, k - 1) + o6 * P(i - 1, k + 1) - (o1 + o2 + o3 + o4 + o5 + o6) * P(i, k);
      chk.compare(lhs, -(d.m + d.n) * (d.m + d.n + a123_ + 2) * P(i, k), at(d.m, d.n, i, k));
    }
  }
  return chk.result();
}

CheckResult Verifier::forward_m() {
  ExactCheck chk(label("forward-shift-m"));
  if (N_ < 1) return chk.result();
  BiTable t(a1_, a2_, a3_, N_), q(a1_ + 1, a2_ + 1, a3_, N_ - 1);
  for (auto d : degree_pairs(N_ - 1))
    for (auto g : grid_points(N_)) {
      const int i = g.i, k = g.k;
      Rational lhs = Rational(-N_) * t.P(d.m + 1, d.n, i, k);
      Rational rhs = (i * (k + a2_ + 1) + eps_) * q.P(d.m, d.n, i - 1, k) - k * (i + a1_ + 1) * q.P(d.m, d.n, i, k - 1);
      chk.compare(lhs, rhs, at(d.m, d.n, i, k));
    }
  return chk.result();
}

CheckResult Verifier::forward_n() {
  ExactCheck chk(label("forward-shift-n"));
  if (N_ < 1) return chk.result();
  BiTable t(a1_, a2_, a3_, N_), q(a1_, a2_, a3_ + 2, N_ - 1);
  for (auto d : degree_pairs(N_ - 1))
    for (auto g : grid_points(N_)) {
      const int i = g.i, k = g.k, r = N_ - i - k;
      auto Q = [&](int x, int y) { return q.P(d.m, d.n, x, y); };
      Rational lhs = Rational(-N_) * (d.n + a3_ + 2) * t.P(d.m, d.n + 1, i, k);
      Rational rhs = ((i + a1_ + 1) * r * (r - 1) + eps_) * Q(i + 1, k) + (k + a2_ + 1) * r * (r - 1) * Q(i, k + 1) +
                     i * (r + a3_ + 1) * (r + a3_ + 2) * Q(i - 1, k) + k * (r + a3_ + 1) * (r + a3_ + 2) * Q(i, k - 1) -
                     r * (r + a3_ + 1) * (2 * i + 2 * k + a12_ + 2) * Q(i, k);
      chk.compare(lhs, rhs, at(d.m, d.n, i, k));
    }
  return chk.result();
}

CheckResult Verifier::backward_m() {
  ExactCheck chk(label("backward-shift-m"));
  BiTable t(a1_, a2_, a3_, N_ + 1), q(a1_ + 1, a2_ + 1, a3_, N_);
  for (auto d : degree_pairs(N_ + 1)) {
    if (d.m < 1) continue;
    for (auto g : grid_points(N_)) {
      const int i = g.i, k = g.k;
      Rational lhs = -(d.m * (d.m + a12_ + 1) + eps_) / (N_ + 1) * q.P(d.m - 1, d.n, i, k);
      chk.compare(lhs, t.P(d.m, d.n, i + 1, k) - t.P(d.m, d.n, i, k + 1), at(d.m, d.n, i, k));
    }
  }
  return chk.result();
}

CheckResult Verifier::backward_n() {
  ExactCheck chk(label("backward-shift-n"));
  BiTable t(a1_, a2_, a3_, N_ + 1), q(a1_, a2_, a3_ + 2, N_);
  for (auto d : degree_pairs(N_ + 1)) {
    if (d.n < 1) continue;
    const int m = d.m, n = d.n;
    auto P = [&](int x, int y) { return t.P(m, n, x, y); };
    for (auto g : grid_points(N_)) {
      const int i = g.i, k = g.k;
      Rational lhs = -(n * (2 * m + n + a12_ + 1) * (2 * m + n + a123_ + 2) + eps_) / (N_ + 1) * q.P(m, n - 1, i, k);
      Rational rhs = (i + a1_ + 1) * P(i + 1, k) + i * P(i - 1, k) + (k + a2_ + 1) * P(i, k + 1) + k * P(i, k - 1) -
                     (2 * i + 2 * k + a12_ + 2) * P(i, k);
      chk.compare(lhs, rhs, at(m, n, i, k));
    }
  }
  return chk.result();
}

std::vector<CheckResult> Verifier::structure() {
  ExactCheck f1(label("structure/forward-x1")), f2(label("structure/forward-x2")),
      b1(label("structure/backward-x1")), b2(label("structure/backward-x2"));
  const int N = N_;
  if (N >= 1) {
    BiTable t(a1_, a2_, a3_, N), s1(a1_ + 1, a2_, a3_, N - 1), s2(a1_, a2_ + 1, a3_, N - 1);
    const int dm[4] = {0, -1, 0, -1}, dn[4] = {0, 0, -1, 1};
    for (auto d : degree_pairs(N)) {
      const int m = d.m, n = d.n;
      auto c1 = coefs<4>(a1_, a2_, a3_, [&](const auto& al) { return coef::structure_forward_x1(al, m, n, N); });
      auto c2 = coefs<4>(a1_, a2_, a3_, [&](const auto& al) { return coef::structure_forward_x2(al, m, n, N); });
      if (c1[0]) *c1[0] += eps_;
      for (auto g : grid_points(N - 1)) {
        const int i = g.i, k = g.k;
        Acc r1, r2;
        for (int j = 0; j < 4; ++j) {
          r1.add(c1[j], s1.P(m + dm[j], n + dn[j], i, k));
          r2.add(c2[j], s2.P(m + dm[j], n + dn[j], i, k));
        }
        settle(f1, N * t.P(m, n, i + 1, k), r1, at(m, n, i, k));
        settle(f2, N * t.P(m, n, i, k + 1), r2, at(m, n, i, k));
      }
    }
    const int em[4] = {0, 1, 0, 1}, en[4] = {0, 0, 1, -1};
    for (auto d : degree_pairs(N - 1)) {
      const int m = d.m, n = d.n;
      auto c1 = coefs<4>(a1_, a2_, a3_, [&](const auto& al) { return coef::structure_backward_x1(al, m, n); });
      auto c2 = coefs<4>(a1_, a2_, a3_, [&](const auto& al) { return coef::structure_backward_x2(al, m, n); });
      for (auto g : grid_points(N)) {
        const int i = g.i, k = g.k;
        Acc r1, r2;
        for (int j = 0; j < 4; ++j) {
          r1.add(c1[j], t.P(m + em[j], n + en[j], i, k));
          r2.add(c2[j], t.P(m + em[j], n + en[j], i, k));
        }
        settle(b1, Rational(i) / N * s1.P(m, n, i - 1, k), r1, at(m, n, i, k));
        settle(b2, Rational(k) / N * s2.P(m, n, i, k - 1), r2, at(m, n, i, k));
      }
    }
  }
  return {f1.result(), f2.result(), b1.result(), b2.result()};
}

CheckResult Verifier::genfun() {
  ExactCheck chk(label("genfun"));
  const int N = N_;
  for (auto d : degree_pairs(N)) {
    auto [lhs, rhs] = bi_genfun_sides(d, p_);
    rhs += BiPoly(eps_);
    for (int a = 0; a <= N; ++a)
      for (int b = 0; b <= N; ++b)
        chk.compare(lhs.coeff(a, b), rhs.coeff(a, b),
                    "(m,n)=(" + std::to_string(d.m) + "," + std::to_string(d.n) + ") z1^" + std::to_string(a) +
                        " z2^" + std::to_string(b));
  }
  return chk.result();
}

CheckResult Verifier::normalization() {
  ExactCheck chk(label("normalization"));
  BiTable t(a1_, a2_, a3_, N_);
  std::vector<Rational> w;
  auto G = grid_points(N_);
  for (auto g : G) w.push_back(weight_raw(g.i, g.k, a1_, a2_, a3_, N_));
  for (auto d : degree_pairs(N_)) {
    const Rational& lam = t.Lambda(d.m, d.n);
    Rational direct = 0, qsum = 0;
    for (size_t x = 0; x < G.size(); ++x) {
      const Rational& h = t.hh(d.m, d.n, G[x].i, G[x].k);
      direct += w[x] * h * h;
      RadicalScalar q(h, 1 / lam);
      qsum += w[x] * q.squared();
      Rational hval = t.P(d.m, d.n, G[x].i, G[x].k) / Rational(factorial(d.m) * factorial(d.n));
      chk.compare(hval * Rational(factorial(d.m) * factorial(d.n)) * pochhammer(Rational(-N_), d.m + d.n), h,
                  at(d.m, d.n, G[x].i, G[x].k) + " H chain");
    }
    std::string where = "(m,n)=(" + std::to_string(d.m) + "," + std::to_string(d.n) + ")";
    chk.compare(direct, lam + eps_, where + " Lambda");
    chk.compare(qsum, 1, where + " sum w Q^2");
  }
  return chk.result();
}

// ----------------------------------------------------------------- float

const std::array<double, 4>& Verifier::norm_struct(bool swapped, int m, int n) {
  auto key = std::make_tuple(swapped, m, n);
  auto it = struct_cache_.find(key);
  if (it != struct_cache_.end()) return it->second;
  std::array<double, 4> out{0, 0, 0, 0};
  if (m >= 0 && n >= 0) {
    const int N = N_;
    auto sq = swapped ? coefs<4>(a2_, a1_, a3_, [&](const auto& al) { return coef::structure_normalized_sq(al, m, n, N); })
                      : coefs<4>(a1_, a2_, a3_, [&](const auto& al) { return coef::structure_normalized_sq(al, m, n, N); });
    for (int j = 0; j < 4; ++j) out[j] = root(sq[j]);
    out[0] += feps_;
  }
  return struct_cache_.emplace(key, out).first->second;
}

std::vector<CheckResult> Verifier::normalized_structure() {
  const double tol = opt_.tol;
  FloatCheck f1(label("normalized-structure-float/forward-1"), tol), f2(label("normalized-structure-float/forward-2"), tol),
      b1(label("normalized-structure-float/backward-1"), tol), b2(label("normalized-structure-float/backward-2"), tol);
  const int N = N_;
  if (N >= 1) {
    BiTable t(a1_, a2_, a3_, N), s1(a1_ + 1, a2_, a3_, N - 1), s2(a1_, a2_ + 1, a3_, N - 1);
    const double k1 = std::sqrt(Rational(N * (a1_ + 1) / (a123_ + 3)).get_d());
    const double k2 = std::sqrt(Rational(N * (a2_ + 1) / (a123_ + 3)).get_d());
    auto C = [&](bool sw, int m, int n, int j) { return norm_struct(sw, m, n)[j]; };
    for (auto d : degree_pairs(N)) {
      const int m = d.m, n = d.n;
      for (auto g : grid_points(N - 1)) {
        const int i = g.i, k = g.k;
        FAcc r1, r2;
        r1.add(C(false, m, n, 0), s1.Q(m, n, i, k));
        r1.add(C(false, m, n, 1), s1.Q(m - 1, n, i, k));
        r1.add(C(false, m, n, 2), s1.Q(m, n - 1, i, k));
        r1.add(C(false, m, n + 1, 3), s1.Q(m - 1, n + 1, i, k));
        f1.compare(k1 * t.Q(m, n, i + 1, k), r1.sum, at(m, n, i, k));
        r2.add(C(true, m, n, 0), s2.Q(m, n, i, k));
        r2.add(C(true, m, n, 1), s2.Q(m - 1, n, i, k), -1);
        r2.add(C(true, m, n, 2), s2.Q(m, n - 1, i, k));
        r2.add(C(true, m, n + 1, 3), s2.Q(m - 1, n + 1, i, k), -1);
        f2.compare(k2 * t.Q(m, n, i, k + 1), r2.sum, at(m, n, i, k));
      }
    }
    for (auto d : degree_pairs(N - 1)) {
      const int m = d.m, n = d.n;
      for (auto g : grid_points(N)) {
        const int i = g.i, k = g.k;
        FAcc r1, r2;
        r1.add(C(false, m, n, 0), t.Q(m, n, i, k));
        r1.add(C(false, m + 1, n, 1), t.Q(m + 1, n, i, k));
        r1.add(C(false, m, n + 1, 2), t.Q(m, n + 1, i, k));
        r1.add(C(false, m + 1, n, 3), t.Q(m + 1, n - 1, i, k));
        b1.compare(i / k1 * s1.Q(m, n, i - 1, k), r1.sum, at(m, n, i, k));
        r2.add(C(true, m, n, 0), t.Q(m, n, i, k));
        r2.add(C(true, m + 1, n, 1), t.Q(m + 1, n, i, k), -1);
        r2.add(C(true, m, n + 1, 2), t.Q(m, n + 1, i, k));
        r2.add(C(true, m + 1, n, 3), t.Q(m + 1, n - 1, i, k), -1);
        b2.compare(k / k2 * s2.Q(m, n, i, k - 1), r2.sum, at(m, n, i, k));
      }
    }
  }
  return {f1.result(), f2.result(), b1.result(), b2.result()};
}

std::vector<CheckResult> Verifier::normalized_recurrence() {
  const double tol = opt_.tol;
  const int N = N_;
  BiTable t(a1_, a2_, a3_, N);
  std::vector<CheckResult> out;
  for (int which = 0; which < 2; ++which) {
    const bool sw = which == 1;
    const int sgn = sw ? -1 : 1;
    const std::string var = sw ? "x2" : "x1";
    // product form built from the structure coefficients
    FloatCheck prod(label("normalized-recurrence-float/product-" + var), tol);
    auto A = [&](int m, int n) { return norm_struct(sw, m, n)[0]; };
    auto B = [&](int m, int n) { return norm_struct(sw, m, n)[1]; };
    auto G = [&](int m, int n) { return norm_struct(sw, m, n)[2]; };
    auto D = [&](int m, int n) { return norm_struct(sw, m, n)[3]; };
    for (auto d : degree_pairs(N)) {
      const int m = d.m, n = d.n;
      for (auto g : grid_points(N)) {
        const int i = g.i, k = g.k;
        auto q = [&](int a, int b) { return t.Q(a, b, i, k); };
        FAcc r;
        if (q(m + 1, n) != 0.0) r.add(A(m, n) * B(m + 1, n), q(m + 1, n), sgn);
        if (q(m, n + 1) != 0.0) r.add(A(m, n) * G(m, n + 1) + B(m, n + 1) * D(m, n + 1), q(m, n + 1));
        if (q(m - 1, n + 2) != 0.0) r.add(G(m - 1, n + 2) * D(m, n + 1), q(m - 1, n + 2), sgn);
        if (q(m + 1, n - 1) != 0.0) r.add(A(m, n) * D(m + 1, n) + B(m + 1, n - 1) * G(m, n), q(m + 1, n - 1), sgn);
        r.add(A(m, n) * A(m, n) + B(m, n) * B(m, n) + G(m, n) * G(m, n) + D(m, n + 1) * D(m, n + 1), q(m, n));
        if (q(m - 1, n + 1) != 0.0)
          r.add(A(m - 1, n + 1) * D(m, n + 1) + B(m, n) * G(m - 1, n + 1), q(m - 1, n + 1), sgn);
        if (q(m + 1, n - 2) != 0.0) r.add(G(m, n) * D(m + 1, n - 1), q(m + 1, n - 2), sgn);
        if (q(m, n - 1) != 0.0) r.add(A(m, n - 1) * G(m, n) + B(m, n) * D(m, n), q(m, n - 1));
        if (q(m - 1, n) != 0.0) r.add(A(m - 1, n) * B(m, n), q(m - 1, n), sgn);
        prod.compare((sw ? k : i) * q(m, n), r.sum, at(m, n, i, k));
      }
    }
    out.push_back(prod.result());

    // explicit a..e coefficients
    FloatCheck expl(label("normalized-recurrence-float/explicit-" + var), tol);
    std::map<std::pair<int, int>, std::array<double, 5>> cache;
    auto coef_at = [&](int m, int n) -> const std::array<double, 5>& {
      auto key = std::make_pair(m, n);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      std::array<double, 5> v{0, 0, 0, 0, 0};
      if (m >= 0 && n >= 0) {
        auto f = [&](const RatFun& x, const RatFun& y, const RatFun& z) {
          auto c = sw ? coef::recurrence_normalized(Alphas<RatFun>{y, x, z}, m, n, N)
                      : coef::recurrence_normalized(Alphas<RatFun>{x, y, z}, m, n, N);
          // b and d are sqrt(radicand) * bracket; square them as one quantity
          return std::array<RatFun, 7>{c[0], c[1], c[2] * c[3] * c[3], c[3], c[4] * c[5] * c[5], c[5], c[6]};
        };
        auto lim = [](const RatFun& r) -> std::optional<Rational> {
          try {
            return r.limit();
          } catch (const SingularValue&) {
            return std::nullopt;
          }
        };
        try {
          auto c = eval_with_fallback<7>(a1_, a2_, a3_, f);
          v = {root(lim(c[0])) + feps_, root(lim(c[1])), c[3].leading_sign() * root(lim(c[2])),
               c[5].leading_sign() * root(lim(c[4])), value(lim(c[6]))};
        } catch (const SingularValue&) {
          v.fill(std::numeric_limits<double>::quiet_NaN());
        }
      }
      return cache.emplace(key, v).first->second;
    };
    for (auto d : degree_pairs(N)) {
      const int m = d.m, n = d.n;
      for (auto g : grid_points(N)) {
        const int i = g.i, k = g.k;
        auto q = [&](int a, int b) { return t.Q(a, b, i, k); };
        FAcc r;
        r.add(coef_at(m + 1, n)[0], q(m + 1, n), sgn);
        r.add(coef_at(m, n)[0], q(m - 1, n), sgn);
        r.add(coef_at(m, n + 1)[2], q(m, n + 1));
        r.add(coef_at(m, n)[2], q(m, n - 1));
        r.add(coef_at(m, n + 2)[1], q(m - 1, n + 2), sgn);
        r.add(coef_at(m + 1, n)[1], q(m + 1, n - 2), sgn);
        r.add(coef_at(m + 1, n)[3], q(m + 1, n - 1), sgn);
        r.add(coef_at(m, n + 1)[3], q(m - 1, n + 1), sgn);
        r.add(coef_at(m, n)[4], q(m, n));
        expl.compare((sw ? k : i) * q(m, n), r.sum, at(m, n, i, k));
      }
    }
    out.push_back(expl.result());
  }
  return out;
}

std::vector<CheckResult> Verifier::normalized_difference() {
  const double tol = opt_.tol;
  FloatCheck l1(label("normalized-difference-float/L1"), tol), l2(label("normalized-difference-float/L2"), tol),
      kap(label("normalized-difference-float/L2-kappa"), tol);
  BiTable t(a1_, a2_, a3_, N_);
  const double a1 = a1_.get_d(), a2 = a2_.get_d(), a3 = a3_.get_d();
  const double a12 = a12_.get_d(), a123 = a123_.get_d();
  const double N = N_;
  for (auto d : degree_pairs(N_)) {
    const int m = d.m, n = d.n;
    for (auto g : grid_points(N_)) {
      const int i = g.i, k = g.k;
      auto Q = [&](int x, int y) { return t.Q(m, n, x, y); };
      const double r = N - i - k;
      const double u1 = i * (k + a2 + 1) + feps_, u2 = k * (i + a1 + 1);
      l1.compare(u1 * Q(i - 1, k + 1) + u2 * Q(i + 1, k - 1) - (u1 + u2) * Q(i, k),
                 -m * (m + a12 + 1) * Q(i, k), at(m, n, i, k));
      const double o1 = (i + a1 + 1) * r + feps_, o2 = (k + a2 + 1) * r, o3 = i * (r + a3 + 1), o4 = k * (r + a3 + 1),
                   o5 = k * (i + a1 + 1), o6 = i * (k + a2 + 1);
      const double shifts = o1 * Q(i + 1, k) + o2 * Q(i, k + 1) + o3 * Q(i - 1, k) + o4 * Q(i, k - 1) +
                            o5 * Q(i + 1, k - 1) + o6 * Q(i - 1, k + 1);
      const double eig = -(m + n) * (m + n + a123 + 2) * Q(i, k);
      l2.compare(shifts - (o1 + o2 + o3 + o4 + o5 + o6) * Q(i, k), eig, at(m, n, i, k));
      const double kappa = i * (a2 + a3) + k * (a1 + a3) + r * a12 - 2 * (i * i + k * k + i * k - i * N - k * N - N);
      kap.compare(shifts - kappa * Q(i, k), eig, at(m, n, i, k));
    }
  }
  return {l1.result(), l2.result(), kap.result()};
}

std::vector<CheckResult> Verifier::normalized_lowering() {
  const double tol = opt_.tol;
  FloatCheck le(label("normalized-lowering-float/e"), tol), lf(label("normalized-lowering-float/f"), tol);
  const int N = N_;
  BiTable up(a1_, a2_, a3_, N + 1), se(a1_ + 1, a2_ + 1, a3_, N), sf(a1_, a2_, a3_ + 2, N);
  for (auto d : degree_pairs(N + 1)) {
    const int m = d.m, n = d.n;
    double e = 0, f = 0;
    if (m >= 1)
      e = std::sqrt(Rational(m * (m + a12_ + 1) * (a123_ + 3) * (a123_ + 4) /
                             ((a1_ + 1) * (a2_ + 1) * (N + 1) * (N + a123_ + 4)))
                        .get_d()) +
          feps_;
    if (n >= 1)
      f = std::sqrt(Rational(n * (n + a3_ + 1) * (n + 2 * m + a12_ + 1) * (n + 2 * m + a123_ + 2) * (a123_ + 3) *
                             (a123_ + 4) / ((a3_ + 1) * (a3_ + 2) * (N + 1) * (N + a123_ + 4)))
                        .get_d());
    for (auto g : grid_points(N)) {
      const int i = g.i, k = g.k;
      auto Q = [&](int x, int y) { return up.Q(m, n, x, y); };
      if (m >= 1) le.compare(e * se.Q(m - 1, n, i, k), Q(i + 1, k) - Q(i, k + 1), at(m, n, i, k));
      if (n >= 1) {
        const double a1 = a1_.get_d(), a2 = a2_.get_d(), a12 = a12_.get_d();
        double rhs = (i + a1 + 1) * Q(i + 1, k) + (k + a2 + 1) * Q(i, k + 1) + i * Q(i - 1, k) + k * Q(i, k - 1) -
                     (2 * i + 2 * k + a12 + 2) * Q(i, k);
        lf.compare(f * sf.Q(m, n - 1, i, k), rhs, at(m, n, i, k));
      }
    }
  }
  return {le.result(), lf.result()};
}

std::vector<CheckResult> Verifier::normalized_raising() {
  const double tol = opt_.tol;
  FloatCheck rc(label("normalized-raising-float/c"), tol), rd(label("normalized-raising-float/d"), tol);
  const int N = N_;
  if (N >= 1) {
    BiTable t(a1_, a2_, a3_, N), sc(a1_ + 1, a2_ + 1, a3_, N - 1), sd(a1_, a2_, a3_ + 2, N - 1);
    const double a1 = a1_.get_d(), a2 = a2_.get_d(), a3 = a3_.get_d(), a12 = a12_.get_d();
    for (auto d : degree_pairs(N - 1)) {
      const int m = d.m, n = d.n;
      const double c = std::sqrt(Rational(N * (a1_ + 1) * (a2_ + 1) * (N + a123_ + 3) * (m + 1) * (m + a12_ + 2) /
                                          ((a123_ + 3) * (a123_ + 4)))
                                     .get_d()) +
                       feps_;
      const double dd =
          std::sqrt(Rational(N * (N + a123_ + 3) * (a3_ + 1) * (a3_ + 2) * (n + 1) * (n + a3_ + 2) *
                             (n + 2 * m + a12_ + 2) * (n + 2 * m + a123_ + 3) / ((a123_ + 3) * (a123_ + 4)))
                        .get_d());
      for (auto g : grid_points(N)) {
        const int i = g.i, k = g.k;
        const double r = N - i - k;
        rc.compare(c * t.Q(m + 1, n, i, k),
                   i * (k + a2 + 1) * sc.Q(m, n, i - 1, k) - k * (i + a1 + 1) * sc.Q(m, n, i, k - 1), at(m, n, i, k));
        auto S = [&](int x, int y) { return sd.Q(m, n, x, y); };
        double rhs = (i + a1 + 1) * r * (r - 1) * S(i + 1, k) + (k + a2 + 1) * r * (r - 1) * S(i, k + 1) +
                     i * (r + a3 + 1) * (r + a3 + 2) * S(i - 1, k) + k * (r + a3 + 1) * (r + a3 + 2) * S(i, k - 1) -
                     r * (r + a3 + 1) * (2 * i + 2 * k + a12 + 2) * S(i, k);
        rd.compare(dd * t.Q(m, n + 1, i, k), rhs, at(m, n, i, k));
      }
    }
  }
  return {rc.result(), rd.result()};
}

VerificationReport Verifier::run(const std::string& check) {
  VerificationReport rep;
  rep.suite = "bi";
  rep.params = param_echo(p_);
  auto add = [&](std::vector<CheckResult> v) { rep.checks.insert(rep.checks.end(), v.begin(), v.end()); };
  if (check == "orthogonality")
    add({orthogonality()});
  else if (check == "symmetry")
    add({symmetry()});
  else if (check == "recurrence-x1")
    add({recurrence(false)});
  else if (check == "recurrence-x2")
    add({recurrence(true)});
  else if (check == "diff-L1")
    add({diff_l1()});
  else if (check == "diff-L2")
    add({diff_l2()});
  else if (check == "forward-shift-m")
    add({forward_m()});
  else if (check == "forward-shift-n")
    add({forward_n()});
  else if (check == "backward-shift-m")
    add({backward_m()});
  else if (check == "backward-shift-n")
    add({backward_n()});
  else if (check == "structure")
    add(structure());
  else if (check == "genfun")
    add({genfun()});
  else if (check == "normalization")
    add({normalization()});
  else if (check == "normalized-structure-float")
    add(normalized_structure());
  else if (check == "normalized-recurrence-float")
    add(normalized_recurrence());
  else if (check == "normalized-difference-float")
    add(normalized_difference());
  else if (check == "normalized-lowering-float")
    add(normalized_lowering());
  else if (check == "normalized-raising-float")
    add(normalized_raising());
  else
    throw std::invalid_argument("unknown bi check '" + check + "'");
  return rep;
}

}  // namespace

VerificationReport verify_bi(const std::string& check, const BiParams& p, const BiOptions& opt) {
  Verifier v(p, opt);
  return v.run(check);
}

}  // namespace hahn
