#include "hahn/classical.hpp"

#include "hahn/combinat.hpp"

#include <stdexcept>

namespace hahn {

// (a+1+j)_{n-j} rather than (a+1)_n/(a+1)_j keeps a = -1 well defined.
Poly jacobi_coeffs(int n, const Rational& a, const Rational& b) {
  if (n < 0) return {};
  Poly half_gap = Poly::linear(Rational(1, 2), Rational(-1, 2));  // (1-z)/2
  Poly r, power = 1;
  for (int j = 0; j <= n; ++j) {
    Rational c = pochhammer(-n, j) * pochhammer(n + a + b + 1, j) * pochhammer(a + 1 + j, n - j) /
                 Rational(factorial(j));
    r += power * Poly(c);
    power *= half_gap;
  }
  return r * Rational(Integer(1), factorial(n));
}

Poly laguerre_coeffs(int n, const Rational& a) {
  if (n < 0) return {};
  std::vector<Rational> c(n + 1);
  for (int j = 0; j <= n; ++j)
    c[j] = pochhammer(-n, j) * pochhammer(a + 1 + j, n - j) / Rational(factorial(j) * factorial(n));
  return Poly(std::move(c));
}

const std::vector<std::string>& classical_relations() {
  static const std::vector<std::string> names = {"jacobi-lower-1", "jacobi-lower-2", "jacobi-raise-1",
                                                 "jacobi-raise-2", "laguerre-lower", "laguerre-raise",
                                                 "laguerre-addition"};
  return names;
}

namespace {

CheckResult compare_polys(const std::string& name, const Poly& lhs, Poly rhs, const Rational& perturb) {
  ExactCheck chk(name);
  rhs += Poly(perturb);
  int deg = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= deg; ++k) chk.compare(lhs.coeff(k), rhs.coeff(k), "z^" + std::to_string(k));
  return chk.result();
}

CheckResult compare_bipolys(const std::string& name, const BiPoly& lhs, BiPoly rhs, const Rational& perturb) {
  ExactCheck chk(name);
  rhs += BiPoly(perturb);
  int A = std::max(lhs.max_deg1(), rhs.max_deg1()), B = std::max(lhs.max_deg2(), rhs.max_deg2());
  for (int x = 0; x <= A; ++x)
    for (int y = 0; y <= B; ++y)
      chk.compare(lhs.coeff(x, y), rhs.coeff(x, y), "x^" + std::to_string(x) + " y^" + std::to_string(y));
  return chk.result();
}

}  // namespace

VerificationReport verify_classical(const std::string& relation, int n, const Rational& a,
                                    const Rational& b, const Rational& perturb) {
  if (n < 0) throw std::invalid_argument("verify_classical: negative degree");
  VerificationReport rep;
  rep.suite = "classical";
  rep.params = "n=" + std::to_string(n) + " alpha=" + a.get_str() + " beta=" + b.get_str();
  const Poly z = Poly::monomial(1);
  const std::string name = relation + "[n=" + std::to_string(n) + ",a=" + a.get_str() + ",b=" + b.get_str() + "]";

  if (relation == "jacobi-lower-1") {
    Poly p = jacobi_coeffs(n, a, b);
    rep.checks.push_back(
        compare_polys(name, p.derivative(), jacobi_coeffs(n - 1, a + 1, b + 1) * Rational((n + a + b + 1) / 2), perturb));
  } else if (relation == "jacobi-lower-2") {
    Poly p = jacobi_coeffs(n, a, b);
    Poly lhs = (z - 1) * p.derivative().derivative() + p.derivative() * Poly(Rational(a + 1));
    rep.checks.push_back(
        compare_polys(name, lhs, jacobi_coeffs(n - 1, a, b + 2) * Rational((n + a) * (n + a + b + 1) / 2), perturb));
  } else if (relation == "jacobi-raise-1") {
    Poly p = jacobi_coeffs(n, a, b);
    Poly lhs = (1 - z * z) * p.derivative() + Poly::linear(b - a, -(a + b)) * p;
    rep.checks.push_back(compare_polys(name, lhs, jacobi_coeffs(n + 1, a - 1, b - 1) * Rational(-2 * (n + 1)), perturb));
  } else if (relation == "jacobi-raise-2") {
    Poly p = jacobi_coeffs(n, a, b);
    Poly one_plus = Poly::linear(1, 1);
    Poly lhs = one_plus * (z * z - 1) * p.derivative().derivative() +
               one_plus * Poly::linear(1 + a - 2 * b, 1 + a + 2 * b) * p.derivative() +
               Poly::linear(b * (2 + a - b), b * (a + b)) * p;
    rep.checks.push_back(
        compare_polys(name, lhs, jacobi_coeffs(n + 1, a, b - 2) * Rational(2 * (n + 1) * (n + b)), perturb));
  } else if (relation == "laguerre-lower") {
    rep.checks.push_back(
        compare_polys(name, laguerre_coeffs(n, a).derivative(), -laguerre_coeffs(n - 1, a + 1), perturb));
  } else if (relation == "laguerre-raise") {
    Poly l = laguerre_coeffs(n, a);
    Poly lhs = z * l.derivative() + Poly::linear(a, -1) * l;
    rep.checks.push_back(compare_polys(name, lhs, laguerre_coeffs(n + 1, a - 1) * Rational(n + 1), perturb));
  } else if (relation == "laguerre-addition") {
    // L_n^{(a+b+1)}(x+y) = sum_{l+k=n} L_l^{(a)}(x) L_k^{(b)}(y)
    BiPoly rhs;
    for (int l = 0; l <= n; ++l)
      rhs += BiPoly::from_z1(laguerre_coeffs(l, a)) * BiPoly::from_z2(laguerre_coeffs(n - l, b));
    rep.checks.push_back(compare_bipolys(name, BiPoly::from_sum(laguerre_coeffs(n, a + b + 1)), rhs, perturb));
  } else {
    throw std::invalid_argument("unknown classical relation '" + relation + "'");
  }
  return rep;
}

}  // namespace hahn
