#include "hahn/radical.hpp"

#include <cmath>
#include <stdexcept>

namespace hahn {

RadicalScalar::RadicalScalar(Rational coeff, Rational radicand)
    : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (sgn(radicand_) < 0) throw std::domain_error("negative radicand");
  if (sgn(coeff_) == 0 || sgn(radicand_) == 0) {
    coeff_ = 0;
    radicand_ = 0;
  }
}

int RadicalScalar::sign() const { return sgn(coeff_); }

Rational RadicalScalar::squared() const { return coeff_ * coeff_ * radicand_; }

double RadicalScalar::to_double() const {
  return coeff_.get_d() * std::sqrt(radicand_.get_d());
}

std::string RadicalScalar::to_string() const {
  if (sgn(coeff_) == 0) return "0";
  return coeff_.get_str() + "*sqrt(" + radicand_.get_str() + ")";
}

RadicalScalar RadicalScalar::operator*(const RadicalScalar& o) const {
  return {coeff_ * o.coeff_, radicand_ * o.radicand_};
}

RadicalScalar RadicalScalar::operator*(const Rational& r) const { return {coeff_ * r, radicand_}; }

bool RadicalScalar::operator==(const RadicalScalar& o) const {
  return sign() == o.sign() && squared() == o.squared();
}

}  // namespace hahn
