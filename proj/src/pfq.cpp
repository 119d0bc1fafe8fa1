#include "hahn/pfq.hpp"

#include <optional>

namespace hahn {

namespace {

std::optional<long> nonpositive_integer(const Rational& a) {
  if (a.get_den() != 1 || sgn(a) > 0 || !a.get_num().fits_slong_p()) return std::nullopt;
  return -a.get_num().get_si();
}

}  // namespace

Rational pfq_terminating(const std::vector<Rational>& num, const std::vector<Rational>& den,
                         const Rational& arg) {
  std::optional<long> n;
  for (const auto& a : num)
    if (auto m = nonpositive_integer(a); m && (!n || *m < *n)) n = m;
  if (!n) throw NonTerminating("pfq_terminating: no nonpositive integer numerator");

  Rational sum = 1, term = 1;
  for (long j = 0; j < *n; ++j) {
    // ratio term_{j+1}/term_j; vanishing denominator factors need a vanishing
    // numerator partner, and the pair counts as 1
    std::vector<bool> used(num.size(), false);
    Rational up = arg, down = j + 1;
    for (const auto& b : den) {
      Rational bj = b + j;
      if (sgn(bj) != 0) {
        down *= bj;
        continue;
      }
      bool paired = false;
      for (size_t q = 0; q < num.size(); ++q) {
        if (!used[q] && sgn(num[q] + j) == 0) {
          used[q] = paired = true;
          break;
        }
      }
      if (!paired) throw std::domain_error("pfq_terminating: denominator vanishes without a cancelling numerator");
    }
    for (size_t q = 0; q < num.size(); ++q)
      if (!used[q]) up *= num[q] + j;
    term = term * up / down;
    if (sgn(term) == 0) break;
    sum += term;
  }
  return sum;
}

}  // namespace hahn
