#pragma once

#include "hahn/poly.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace hahn {

struct SingularValue : std::domain_error {
  using std::domain_error::domain_error;
};

// Quotient of polynomials in an auxiliary variable t. Used to take limits
// t -> 0 of coefficient formulas that are 0/0 at the parameters of interest.
class RatFun {
 public:
  RatFun() = default;
  RatFun(const Rational& c) : c_(c) {}  // NOLINT
  RatFun(int c) : c_(c) {}  // NOLINT
  RatFun(Poly num, Poly den);

  // a + t
  static RatFun perturbed(const Rational& a);

  bool is_zero() const { return constant_ ? sgn(c_) == 0 : num_.is_zero(); }
  // value at t = 0; throws SingularValue on a pole
  Rational limit() const;
  // sign as t -> 0+
  int leading_sign() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  // throws SingularValue when b is identically zero
  friend RatFun operator/(const RatFun& a, const RatFun& b);

 private:
  void normalize();
  Poly num() const { return constant_ ? Poly(c_) : num_; }
  Poly den() const { return constant_ ? Poly(1) : den_; }

  // constants skip the polynomial representation
  bool constant_ = true;
  Rational c_{0};
  Poly num_, den_;
};

// Evaluate f at three parameters; on an exact 0/0 fall back to the limit
// along alpha_i -> alpha_i + t.
template <class F>
Rational limit_eval(const Rational& a1, const Rational& a2, const Rational& a3, F&& f) {
  try {
    return f(RatFun(a1), RatFun(a2), RatFun(a3)).limit();
  } catch (const SingularValue&) {
    return f(RatFun::perturbed(a1), RatFun::perturbed(a2), RatFun::perturbed(a3)).limit();
  }
}

// Evaluates f over constant RatFuns, or along alpha_i + t after a 0/0.
// Throws SingularValue when even the perturbed evaluation divides by zero.
template <size_t K, class F>
std::array<RatFun, K> eval_with_fallback(const Rational& a1, const Rational& a2, const Rational& a3, F&& f) {
  try {
    return f(RatFun(a1), RatFun(a2), RatFun(a3));
  } catch (const SingularValue&) {
    return f(RatFun::perturbed(a1), RatFun::perturbed(a2), RatFun::perturbed(a3));
  }
}

// Componentwise limits for a family of coefficients that share the
// parameters; a component with a genuine pole comes back empty.
template <size_t K, class F>
std::array<std::optional<Rational>, K> limit_eval_all(const Rational& a1, const Rational& a2, const Rational& a3,
                                                      F&& f) {
  std::array<std::optional<Rational>, K> out;
  std::array<RatFun, K> v;
  try {
    v = eval_with_fallback<K>(a1, a2, a3, f);
  } catch (const SingularValue&) {
    return out;
  }
  for (size_t j = 0; j < K; ++j) {
    try {
      out[j] = v[j].limit();
    } catch (const SingularValue&) {
    }
  }
  return out;
}

}  // namespace hahn
