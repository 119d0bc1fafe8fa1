#pragma once

#include "hahn/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hahn {

struct NonTerminating : std::domain_error {
  using std::domain_error::domain_error;
};

// Terminating pFq. A denominator -M whose Pochhammer vanishes inside the
// summation range must be matched by a numerator -M; the pair is cancelled.
Rational pfq_terminating(const std::vector<Rational>& numerators,
                         const std::vector<Rational>& denominators,
                         const Rational& arg);

}  // namespace hahn
