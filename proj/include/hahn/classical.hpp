#pragma once

#include "hahn/poly.hpp"
#include "hahn/report.hpp"

#include <string>
#include <vector>

namespace hahn {

// Coefficients in z, ascending. Negative n gives the zero polynomial.
Poly jacobi_coeffs(int n, const Rational& alpha, const Rational& beta);
Poly laguerre_coeffs(int n, const Rational& alpha);

// jacobi-lower-1, jacobi-lower-2, jacobi-raise-1, jacobi-raise-2,
// laguerre-lower, laguerre-raise, laguerre-addition
const std::vector<std::string>& classical_relations();

// beta is ignored by the single-parameter Laguerre relations. Throws
// std::invalid_argument for an unknown relation.
// perturb is added to the right-hand side (failure injection).
VerificationReport verify_classical(const std::string& relation, int n, const Rational& alpha,
                                    const Rational& beta, const Rational& perturb = 0);

}  // namespace hahn
