#pragma once

#include "hahn/rational.hpp"

#include <string>

namespace hahn {

// coeff * sqrt(radicand). Radicands are never reduced to squarefree form.
class RadicalScalar {
 public:
  RadicalScalar() = default;
  RadicalScalar(Rational coeff, Rational radicand);

  static RadicalScalar sqrt_of(const Rational& radicand) { return {Rational(1), radicand}; }

  const Rational& coeff() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }

  int sign() const;
  // coeff^2 * radicand
  Rational squared() const;
  double to_double() const;
  std::string to_string() const;

  RadicalScalar operator*(const RadicalScalar& o) const;
  RadicalScalar operator*(const Rational& r) const;

  bool operator==(const RadicalScalar& o) const;

 private:
  Rational coeff_{0};
  Rational radicand_{0};
};

}  // namespace hahn
