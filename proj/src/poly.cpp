#include "hahn/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hahn {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly Poly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& c0, const Rational& c1) { return Poly({c0, c1}); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

int Poly::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  return -1;
}

Rational Poly::eval(const Rational& z) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
  return r;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::pow(int e) const {
  Poly r(1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

Poly Poly::substitute_linear(const Rational& a, const Rational& b) const {
  Poly r, lin = linear(a, b);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
  return r;
}

Poly Poly::shift_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (valuation() < k) throw std::domain_error("Poly::shift_down: not divisible");
  return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t a = 0; a < c_.size(); ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::string Poly::to_string() const {
  std::string s = "[";
  for (size_t k = 0; k < c_.size(); ++k) s += (k ? ", " : "") + c_[k].get_str();
  return s + "]";
}

// ---- BiPoly

BiPoly::BiPoly(const Rational& c) {
  if (sgn(c) != 0) c_ = {{c}};
}

BiPoly BiPoly::monomial(int a, int b, const Rational& c) {
  BiPoly r;
  r.c_.assign(static_cast<size_t>(a) + 1, {});
  r.c_[a].assign(static_cast<size_t>(b) + 1, Rational(0));
  r.c_[a][b] = c;
  r.trim();
  return r;
}

BiPoly BiPoly::from_z1(const Poly& p) {
  BiPoly r;
  for (int a = 0; a <= p.degree(); ++a) r += monomial(a, 0, p.coeff(a));
  return r;
}

BiPoly BiPoly::from_z2(const Poly& p) {
  BiPoly r;
  for (int b = 0; b <= p.degree(); ++b) r += monomial(0, b, p.coeff(b));
  return r;
}

BiPoly BiPoly::from_sum(const Poly& p) {
  BiPoly r, s = linear(0, 1, 1);
  for (int k = p.degree(); k >= 0; --k) r = r * s + BiPoly(p.coeff(k));
  return r;
}

BiPoly BiPoly::linear(const Rational& c0, const Rational& c1, const Rational& c2) {
  return BiPoly(c0) + monomial(1, 0, c1) + monomial(0, 1, c2);
}

int BiPoly::max_deg2() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

bool BiPoly::is_zero() const { return c_.empty(); }

Rational BiPoly::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a >= static_cast<int>(c_.size())) return 0;
  const auto& row = c_[a];
  return b < static_cast<int>(row.size()) ? row[b] : Rational(0);
}

void BiPoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && sgn(row.back()) == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly BiPoly::pow(int e) const {
  BiPoly r(1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& row : r.c_)
    for (auto& x : row) x = -x;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t a = 0; a < o.c_.size(); ++a) {
    auto& row = c_[a];
    if (o.c_[a].size() > row.size()) row.resize(o.c_[a].size(), Rational(0));
    for (size_t b = 0; b < o.c_[a].size(); ++b) row[b] += o.c_[a][b];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  size_t A = c_.size() + o.c_.size() - 1;
  size_t B = static_cast<size_t>(max_deg2() + o.max_deg2() + 1);
  std::vector<std::vector<Rational>> r(A, std::vector<Rational>(B, Rational(0)));
  for (size_t a1 = 0; a1 < c_.size(); ++a1)
    for (size_t b1 = 0; b1 < c_[a1].size(); ++b1) {
      if (sgn(c_[a1][b1]) == 0) continue;
      for (size_t a2 = 0; a2 < o.c_.size(); ++a2)
        for (size_t b2 = 0; b2 < o.c_[a2].size(); ++b2) r[a1 + a2][b1 + b2] += c_[a1][b1] * o.c_[a2][b2];
    }
  c_ = std::move(r);
  trim();
  return *this;
}

bool BiPoly::operator==(const BiPoly& o) const { return c_ == o.c_; }

}  // namespace hahn
