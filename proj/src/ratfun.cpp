#include "hahn/ratfun.hpp"

#include <algorithm>

namespace hahn {

RatFun::RatFun(Poly num, Poly den) : constant_(false), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw SingularValue("RatFun: zero denominator");
  normalize();
}

RatFun RatFun::perturbed(const Rational& a) { return {Poly::linear(a, 1), Poly(1)}; }

void RatFun::normalize() {
  if (num_.is_zero()) {
    *this = RatFun();
    return;
  }
  int common = std::min(num_.valuation(), den_.valuation());
  if (common > 0) {
    num_ = num_.shift_down(common);
    den_ = den_.shift_down(common);
  }
  if (num_.degree() == 0 && den_.degree() == 0) *this = RatFun(Rational(num_.coeff(0) / den_.coeff(0)));
}

Rational RatFun::limit() const {
  if (constant_) return c_;
  if (num_.is_zero()) return 0;
  int vn = num_.valuation(), vd = den_.valuation();
  if (vd > vn) throw SingularValue("RatFun: pole at t = 0");
  if (vn > vd) return 0;
  return num_.coeff(vn) / den_.coeff(vd);
}

int RatFun::leading_sign() const {
  if (constant_) return sgn(c_);
  if (num_.is_zero()) return 0;
  return sgn(num_.coeff(num_.valuation())) * sgn(den_.coeff(den_.valuation()));
}

RatFun RatFun::operator-() const {
  if (constant_) return RatFun(Rational(-c_));
  return {-num_, den_};
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.constant_ && b.constant_) return RatFun(Rational(a.c_ + b.c_));
  Poly ad = a.den(), bd = b.den();
  if (ad == bd) return {a.num() + b.num(), ad};
  return {a.num() * bd + b.num() * ad, ad * bd};
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.constant_ && b.constant_) return RatFun(Rational(a.c_ * b.c_));
  return {a.num() * b.num(), a.den() * b.den()};
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw SingularValue("RatFun: division by zero");
  if (a.constant_ && b.constant_) return RatFun(Rational(a.c_ / b.c_));
  return {a.num() * b.den(), a.den() * b.num()};
}

}  // namespace hahn
