#include "hahn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hahn {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t j = start; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  Integer p, q = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, p)
                : parse_integer(text.substr(0, slash), p) && parse_integer(text.substr(slash + 1), q) &&
                      text[slash + 1] != '-' && text[slash + 1] != '+';
  if (!ok) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

int sign(const Rational& r) { return sgn(r); }

}  // namespace hahn
