#include "hahn/hahn_uni.hpp"

#include "hahn/classical.hpp"
#include "hahn/combinat.hpp"
#include "hahn/pfq.hpp"

#include <stdexcept>

namespace hahn {

UniParams make_uni_params(const Rational& alpha, const Rational& beta, int N) {
  if (alpha <= -1 || beta <= -1) throw std::invalid_argument("Hahn parameters must exceed -1");
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  return {alpha, beta, N};
}

Rational hahn_eval(int n, long x, const UniParams& p) {
  if (n < 0 || n > p.N) throw std::out_of_range("hahn_eval: degree outside 0..N");
  Rational series = pfq_terminating({Rational(-n), n + p.alpha + p.beta + 1, Rational(-x)},
                                    {p.alpha + 1, Rational(-p.N)}, 1);
  return pochhammer(p.alpha + 1, n) * pochhammer(Rational(-p.N), n) * series;
}

Rational hahn_poly(int n, long x, const Rational& a, const Rational& b, long N) {
  if (n < 0) return 0;
  // tail[j] = (a+1+j)_{n-j} (-N+j)_{n-j}
  std::vector<Rational> tail(n + 1);
  tail[n] = 1;
  for (int j = n - 1; j >= 0; --j) tail[j] = tail[j + 1] * (a + 1 + j) * Rational(j - N);
  const Rational top = n + a + b + 1;
  Rational head = 1, sum = 0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      head *= Rational(j - 1 - n) * (top + j - 1) * Rational(j - 1 - x);
      head /= j;
    }
    if (sgn(head) == 0) break;
    sum += head * tail[j];
  }
  return sum;
}

Rational hahn_weight(int x, const UniParams& p) {
  if (x < 0 || x > p.N) throw std::out_of_range("hahn_weight: x outside 0..N");
  return Rational(binomial(p.N, x)) * pochhammer(p.alpha + 1, x) * pochhammer(p.beta + 1, p.N - x) /
         pochhammer(p.alpha + p.beta + 2, p.N);
}

Rational hahn_norm(int n, const UniParams& p) {
  if (n < 0 || n > p.N) throw std::out_of_range("hahn_norm: degree outside 0..N");
  if (n == 0) return 1;
  const Rational s = p.alpha + p.beta;
  Rational r = Rational(factorial(p.N) * factorial(n)) / Rational(factorial(p.N - n));
  r *= pochhammer(p.alpha + 1, n) * pochhammer(p.beta + 1, n) * pochhammer(p.N + s + 2, n);
  return r / ((2 * n + s + 1) * pochhammer(s + 2, n - 1));
}

namespace {

// sum_j (a)_j / (b)_j (c t)^j / j!, terminating since a = -m
Poly confluent(long m, const Rational& b, const Rational& c) {
  std::vector<Rational> coef;
  for (long j = 0; j <= m; ++j)
    coef.push_back(pochhammer(Rational(-m), j) / pochhammer(b, j) * power(c, j) / Rational(factorial(j)));
  return Poly(std::move(coef));
}

}  // namespace

std::pair<Poly, Poly> hahn_genfun_sides(long x, const UniParams& p) {
  Poly lhs = confluent(x, p.alpha + 1, -1) * confluent(p.N - x, p.beta + 1, 1);
  std::vector<Rational> rhs;
  for (int n = 0; n <= p.N; ++n)
    rhs.push_back(hahn_eval(n, x, p) /
                  (pochhammer(p.alpha + 1, n) * pochhammer(p.beta + 1, n) * Rational(factorial(n))));
  return {lhs, Poly(std::move(rhs))};
}

std::pair<Poly, Poly> hahn_dual_genfun_sides(int n, const UniParams& p) {
  // (1+t)^N P_n((1-t)/(1+t)) = sum_k c_k (1-t)^k (1+t)^{N-k}
  Poly jac = jacobi_coeffs(n, p.alpha, p.beta);
  Poly lhs, minus = Poly::linear(1, -1), plus = Poly::linear(1, 1);
  for (int k = 0; k <= jac.degree(); ++k) lhs += minus.pow(k) * plus.pow(p.N - k) * Poly(jac.coeff(k));
  lhs *= Poly(pochhammer(Rational(-p.N), n) * Rational(factorial(n)));
  std::vector<Rational> rhs;
  for (int x = 0; x <= p.N; ++x) rhs.push_back(Rational(binomial(p.N, x)) * hahn_eval(n, x, p));
  return {lhs, Poly(std::move(rhs))};
}

const std::vector<std::string>& uni_checks() {
  static const std::vector<std::string> names = {"orthogonality", "genfun", "dual-genfun"};
  return names;
}

namespace {

std::string param_echo(const UniParams& p) {
  return "alpha=" + p.alpha.get_str() + " beta=" + p.beta.get_str() + " N=" + std::to_string(p.N);
}

void compare_poly(ExactCheck& chk, const Poly& lhs, const Poly& rhs, const std::string& where) {
  int deg = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= deg; ++k) chk.compare(lhs.coeff(k), rhs.coeff(k), where + " t^" + std::to_string(k));
}

}  // namespace

VerificationReport verify_uni(const std::string& check, const UniParams& p, const Rational& perturb) {
  VerificationReport rep;
  rep.suite = "uni";
  rep.params = param_echo(p);
  ExactCheck chk(check + "[" + param_echo(p) + "]");
  if (check == "orthogonality") {
    std::vector<std::vector<Rational>> h(p.N + 1);
    std::vector<Rational> rho;
    for (int x = 0; x <= p.N; ++x) rho.push_back(hahn_weight(x, p));
    for (int n = 0; n <= p.N; ++n)
      for (int x = 0; x <= p.N; ++x) h[n].push_back(hahn_eval(n, x, p));
    for (int n = 0; n <= p.N; ++n)
      for (int m = n; m <= p.N; ++m) {
        Rational s = 0;
        for (int x = 0; x <= p.N; ++x) s += rho[x] * h[n][x] * h[m][x];
        if (n == m) rep.data["gram_diagonal"].push_back(s.get_str());
        chk.compare(s, n == m ? hahn_norm(n, p) + perturb : Rational(0),
                    "n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
  } else if (check == "genfun") {
    for (int x = 0; x <= p.N; ++x) {
      auto [lhs, rhs] = hahn_genfun_sides(x, p);
      compare_poly(chk, lhs, rhs + Poly(perturb), "x=" + std::to_string(x));
    }
  } else if (check == "dual-genfun") {
    for (int n = 0; n <= p.N; ++n) {
      auto [lhs, rhs] = hahn_dual_genfun_sides(n, p);
      compare_poly(chk, lhs, rhs + Poly(perturb), "n=" + std::to_string(n));
    }
  } else {
    throw std::invalid_argument("unknown uni check '" + check + "'");
  }
  rep.checks.push_back(chk.result());
  return rep;
}

}  // namespace hahn
