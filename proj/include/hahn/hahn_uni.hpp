#pragma once

#include "hahn/poly.hpp"
#include "hahn/report.hpp"

#include <string>
#include <vector>

namespace hahn {

struct UniParams {
  Rational alpha, beta;
  int N = 0;
};

// Throws std::invalid_argument unless alpha, beta > -1 and N >= 0.
UniParams make_uni_params(const Rational& alpha, const Rational& beta, int N);

// (alpha+1)_n (-N)_n 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1), 0 <= n <= N, any integer x.
Rational hahn_eval(int n, long x, const UniParams& p);

// Same polynomial in the division-free form
//   sum_j (-n)_j (n+a+b+1)_j (-x)_j (a+1+j)_{n-j} (-N+j)_{n-j} / j!
// with no restriction on n versus N. At n > N it vanishes on 0..N.
Rational hahn_poly(int n, long x, const Rational& a, const Rational& b, long N);

Rational hahn_weight(int x, const UniParams& p);
Rational hahn_norm(int n, const UniParams& p);

// Both sides of the generating functions as polynomials in t.
// genfun: for grid point x; dual-genfun: for degree n.
std::pair<Poly, Poly> hahn_genfun_sides(long x, const UniParams& p);
std::pair<Poly, Poly> hahn_dual_genfun_sides(int n, const UniParams& p);

// orthogonality, genfun, dual-genfun
const std::vector<std::string>& uni_checks();
// perturb is added to the right-hand side (failure injection).
VerificationReport verify_uni(const std::string& check, const UniParams& p, const Rational& perturb = 0);

}  // namespace hahn
