#pragma once

#include "hahn/hahn_bi.hpp"
#include "hahn/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace hahn {

enum class OperatorLabel { L1, L2 };

// Difference operator on functions over the simplex grid, in the shared
// grid ordering. dropped counts nonzero coefficients whose shift would leave
// the simplex (zero for a well-formed operator).
struct GridOperator {
  OperatorLabel label = OperatorLabel::L1;
  RationalMatrix matrix;
  int dropped = 0;
};

// perturb is added to the first shift coefficient (failure injection).
GridOperator build_operator(OperatorLabel label, const BiParams& p, const Rational& perturb = 0);

struct DegenerateSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JointEigenspace {
  DegreePair degree;
  std::vector<RationalVector> basis;  // first nonzero entry of each vector is 1
};

// Kernel of the stacked (L1 + m(m+a12+1)) and (L2 + (m+n)(m+n+a123+2)) for
// every degree on the simplex.
std::vector<JointEigenspace> joint_eigenspaces(const BiParams& p, const Rational& perturb = 0);
// Same, requiring each space to be one-dimensional; throws DegenerateSpectrum.
std::vector<std::pair<DegreePair, RationalVector>> joint_eigenvectors(const BiParams& p);

// Dense row-major float matrix.
struct FloatMatrix {
  int rows = 0, cols = 0;
  std::vector<double> a;
  double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

FloatMatrix multiply(const FloatMatrix& x, const FloatMatrix& y);
FloatMatrix transpose(const FloatMatrix& x);
// max |x - identity|
double identity_defect(const FloatMatrix& x);

// Cylindrical states (p, q), 0 <= p <= q <= N, q outer and p inner.
std::vector<std::pair<int, int>> cylindrical_states(int N);

struct ChainMatrices {
  FloatMatrix cart_to_cyl;  // rows grid points, cols cylindrical states
  FloatMatrix cyl_to_sph;   // rows cylindrical states, cols degree pairs
};

ChainMatrices chain_matrices(const BiParams& p);
FloatMatrix overlap_float(const BiParams& p);

// Basis f_0..f_nmax with K+ f_n = f_{n+1} (truncated at the top),
// K- f_n = n(n+2nu-1) f_{n-1}, K0 f_n = (n+nu) f_n.
struct Su11Module {
  Rational nu;
  int nmax = 0;
  RationalMatrix K0, Kplus, Kminus;
};

// Throws std::invalid_argument unless nu > 0 and nmax >= 1.
Su11Module su11_build(const Rational& nu, int nmax);
RationalMatrix su11_casimir(const Su11Module& s);
VerificationReport verify_su11(const Rational& nu, int nmax);

// Casimir parameterization of the L1/L2 spectrum against the eigenvalues.
VerificationReport su11_spectrum_check(const BiParams& p);

struct OracleOptions {
  double tol = 1e-10;
  Rational perturb = 0;
};

// Exact part: operator structure, commutation, joint eigenvectors, spectrum.
VerificationReport verify_oracle_exact(const BiParams& p, const Rational& perturb = 0);
// Float part: chain factor orthogonality, composition, overlap unitarity.
VerificationReport verify_chain(const BiParams& p, double tol = 1e-10);
VerificationReport verify_oracle(const BiParams& p, const OracleOptions& opt = {});

}  // namespace hahn
