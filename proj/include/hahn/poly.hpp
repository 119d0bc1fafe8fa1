#pragma once

#include "hahn/rational.hpp"

#include <string>
#include <vector>

namespace hahn {

// Dense univariate polynomial, ascending powers. Trailing zeros are trimmed,
// so the zero polynomial has no stored coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT

  static Poly monomial(int degree, const Rational& c = 1);
  // c0 + c1 z
  static Poly linear(const Rational& c0, const Rational& c1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  // index of the lowest nonzero coefficient, -1 for zero
  int valuation() const;

  Rational eval(const Rational& z) const;
  Poly derivative() const;
  Poly pow(int e) const;
  // p(a + b z)
  Poly substitute_linear(const Rational& a, const Rational& b) const;
  // divide by z^k; requires valuation() >= k
  Poly shift_down(int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { Poly r = a; return r *= b; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Dense bivariate polynomial, c[a][b] multiplies z1^a z2^b.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT
  BiPoly(int c) : BiPoly(Rational(c)) {}  // NOLINT

  static BiPoly monomial(int a, int b, const Rational& c = 1);
  static BiPoly from_z1(const Poly& p);
  static BiPoly from_z2(const Poly& p);
  // p(z1 + z2)
  static BiPoly from_sum(const Poly& p);
  // c0 + c1 z1 + c2 z2
  static BiPoly linear(const Rational& c0, const Rational& c1, const Rational& c2);

  int max_deg1() const { return static_cast<int>(c_.size()) - 1; }
  int max_deg2() const;
  bool is_zero() const;
  Rational coeff(int a, int b) const;

  BiPoly pow(int e) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) { BiPoly r = a; return r *= b; }
  bool operator==(const BiPoly& o) const;

 private:
  void trim();
  std::vector<std::vector<Rational>> c_;
};

}  // namespace hahn
