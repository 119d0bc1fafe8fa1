#pragma once

#include "hahn/rational.hpp"

#include <vector>

namespace hahn {

Rational pochhammer(const Rational& a, int n);
Integer factorial(int n);
Rational power(const Rational& a, long e);
Integer binomial(int n, int k);

// N! / (parts! * (N - sum parts)!)
Rational multinomial(int N, const std::vector<int>& parts);

}  // namespace hahn
