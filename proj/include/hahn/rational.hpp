#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hahn {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long p, long q = 1);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);
bool is_integer(const Rational& r);
int sign(const Rational& r);

}  // namespace hahn
