#pragma once

#include "hahn/poly.hpp"
#include "hahn/radical.hpp"
#include "hahn/report.hpp"
#include "hahn/simplex.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace hahn {

struct BiParams {
  Rational alpha1, alpha2, alpha3;
  int N = 0;
  Rational a12() const { return alpha1 + alpha2; }
  Rational a123() const { return alpha1 + alpha2 + alpha3; }
};

// Throws std::invalid_argument unless every alpha > -1 and N >= 0.
BiParams make_bi_params(const Rational& a1, const Rational& a2, const Rational& a3, int N);
std::string param_echo(const BiParams& p);

// All of these throw std::out_of_range for points or degrees off the simplex.
Rational weight2(GridPoint g, const BiParams& p);
RadicalScalar amplitude(GridPoint g, const BiParams& p);
Rational p2_eval(DegreePair d, GridPoint g, const BiParams& p);
// P / (m! n!)
Rational h2_eval(DegreePair d, GridPoint g, const BiParams& p);
// h_m(i; a1, a2; i+k) h_n(i+k-m; 2m+a12+1, a3; N-m) = (-N)_{m+n} P
Rational hh_product(DegreePair d, GridPoint g, const BiParams& p);
Rational lambda2(DegreePair d, const BiParams& p);
// lambda2 * ((-N)_{m+n})^2
Rational bigLambda(DegreePair d, const BiParams& p);
RadicalScalar q2_eval(DegreePair d, GridPoint g, const BiParams& p);
double q2_float(DegreePair d, GridPoint g, const BiParams& p);

// Polynomial continuation of hh and P to any integer point; zero for
// degrees off the simplex or N < 0.
Rational hh_poly(int m, int n, long i, long k, const Rational& a1, const Rational& a2, const Rational& a3, long N);

// Memoized values for one parameter set, used by the verification sweeps.
class BiTable {
 public:
  BiTable(Rational a1, Rational a2, Rational a3, int N);
  int N() const { return N_; }
  const Rational& hh(int m, int n, int i, int k);
  Rational P(int m, int n, int i, int k);
  // Lambda(m, n), zero off the simplex
  const Rational& Lambda(int m, int n);
  double Q(int m, int n, int i, int k);

 private:
  bool on_simplex(int m, int n) const { return N_ >= 0 && m >= 0 && n >= 0 && m + n <= N_; }
  Rational a1_, a2_, a3_;
  int N_;
  std::vector<Rational> poch_negN_;
  std::unordered_map<long long, Rational> first_;
  std::unordered_map<long long, Rational> second_;
  std::unordered_map<long long, Rational> hh_;
  std::unordered_map<long long, Rational> lam_;
  std::unordered_map<long long, double> q_;
};

// Both sides of the bivariate generating function at degree d, as
// polynomials in z1, z2: the Jacobi product side and
// sum_{i,k} N!/(i!k!(N-i-k)!) H_{m,n}(i,k) z1^i z2^k.
std::pair<BiPoly, BiPoly> bi_genfun_sides(DegreePair d, const BiParams& p);

enum class OverlapMode { Float, Radical, Squared };

// Entries W_{i,k} Q_{m,n}(i,k), row index = grid point, column = degree.
// Squared mode stores w (hh)^2 / Lambda with the sign kept separately.
struct OverlapMatrix {
  BiParams params;
  OverlapMode mode = OverlapMode::Float;
  std::vector<GridPoint> rows;
  std::vector<DegreePair> cols;
  std::vector<double> floats;
  std::vector<RadicalScalar> radicals;
  std::vector<Rational> squares;
  std::vector<int> signs;

  int size() const { return static_cast<int>(rows.size()); }
  double at(int r, int c) const;
  std::string entry_string(int r, int c) const;
};

OverlapMatrix overlap2(const BiParams& p, OverlapMode mode);

struct BiOptions {
  double tol = 1e-10;
  // added to one coefficient of the relation under test
  Rational perturb = 0;
};

const std::vector<std::string>& bi_checks();
VerificationReport verify_bi(const std::string& check, const BiParams& p, const BiOptions& opt = {});

}  // namespace hahn
