#pragma once

#include "hahn/report.hpp"

#include <vector>

namespace hahn {

// d+1 parameters, each > -1.
struct MultiParams {
  std::vector<Rational> alphas;
  int N = 0;
  int d() const { return static_cast<int>(alphas.size()) - 1; }
};

// d stored entries; the last component N - sum is implicit.
using MultiIndex = std::vector<int>;

MultiParams make_multi_params(std::vector<Rational> alphas, int N);

// All indices of length d with sum <= N, last entry outermost.
std::vector<MultiIndex> multi_indices(int d, int N);

// Throw std::out_of_range for indices off the simplex or of the wrong length.
Rational mv_weight(const MultiIndex& i, const MultiParams& p);
Rational mv_p_eval(const MultiIndex& n, const MultiIndex& i, const MultiParams& p);
// sum_i w_i P_n(i)^2
Rational mv_lambda(const MultiIndex& n, const MultiParams& p);

// Gram diagonality, weight normalization, and for d <= 2 agreement with the
// univariate and bivariate modules.
VerificationReport verify_mv(const MultiParams& p, const Rational& perturb = 0);

}  // namespace hahn
