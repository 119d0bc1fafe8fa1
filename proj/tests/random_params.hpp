#pragma once

#include "hahn/rational.hpp"

#include <random>

namespace hahn::testing {

// Rationals p/q > -1 with small numerator and denominator.
class ParamGen {
 public:
  explicit ParamGen(unsigned seed) : rng_(seed) {}

  Rational alpha() {
    std::uniform_int_distribution<int> q(1, 7);
    int den = q(rng_);
    std::uniform_int_distribution<int> p(-den + 1, 5 * den);
    Rational r(p(rng_), den);
    r.canonicalize();
    return r;
  }
  Rational any() {
    std::uniform_int_distribution<int> q(1, 9), p(-30, 30);
    Rational r(p(rng_), q(rng_));
    r.canonicalize();
    return r;
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace hahn::testing
