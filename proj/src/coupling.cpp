#include "hahn/coupling.hpp"

#include "hahn/hahn_uni.hpp"

#include <cmath>
#include <set>

namespace hahn {

namespace {

struct Shift {
  int di, dk;
  Rational c;
};

std::vector<Shift> shifts(OperatorLabel label, const BiParams& p, int i, int k, const Rational& perturb) {
  const Rational &a1 = p.alpha1, &a2 = p.alpha2, &a3 = p.alpha3;
  if (label == OperatorLabel::L1)
    return {{-1, 1, i * (k + a2 + 1) + perturb}, {1, -1, k * (i + a1 + 1)}};
  const int r = p.N - i - k;
  return {{1, 0, (i + a1 + 1) * r + perturb}, {0, 1, (k + a2 + 1) * r},  {-1, 0, i * (r + a3 + 1)},
          {0, -1, k * (r + a3 + 1)},          {1, -1, k * (i + a1 + 1)}, {-1, 1, i * (k + a2 + 1)}};
}

std::string dp(DegreePair d) { return "(m,n)=(" + std::to_string(d.m) + "," + std::to_string(d.n) + ")"; }

}  // namespace

GridOperator build_operator(OperatorLabel label, const BiParams& p, const Rational& perturb) {
  GridOperator op;
  op.label = label;
  const int S = simplex_size(p.N);
  op.matrix = RationalMatrix(S, S);
  for (auto g : grid_points(p.N)) {
    const int row = simplex_index(g.i, g.k, p.N);
    Rational diag = 0;
    for (const auto& s : shifts(label, p, g.i, g.k, perturb)) {
      if (sgn(s.c) == 0) continue;
      const int col = simplex_index(g.i + s.di, g.k + s.dk, p.N);
      if (col < 0) {
        ++op.dropped;
        continue;
      }
      op.matrix(row, col) += s.c;
      diag -= s.c;
    }
    op.matrix(row, row) += diag;
  }
  return op;
}

std::vector<JointEigenspace> joint_eigenspaces(const BiParams& p, const Rational& perturb) {
  const RationalMatrix L1 = build_operator(OperatorLabel::L1, p, perturb).matrix;
  const RationalMatrix L2 = build_operator(OperatorLabel::L2, p).matrix;
  const RationalMatrix I = RationalMatrix::identity(L1.rows());
  const Rational a12 = p.a12(), a123 = p.a123();
  std::vector<JointEigenspace> out;
  for (auto d : degree_pairs(p.N)) {
    const Rational e1 = d.m * (d.m + a12 + 1), e2 = (d.m + d.n) * (d.m + d.n + a123 + 2);
    out.push_back({d, nullspace(RationalMatrix::stack(L1 + I * e1, L2 + I * e2))});
  }
  return out;
}

std::vector<std::pair<DegreePair, RationalVector>> joint_eigenvectors(const BiParams& p) {
  std::vector<std::pair<DegreePair, RationalVector>> out;
  for (auto& sp : joint_eigenspaces(p)) {
    if (sp.basis.size() != 1)
      throw DegenerateSpectrum("joint eigenspace at " + dp(sp.degree) + " has dimension " +
                               std::to_string(sp.basis.size()));
    out.emplace_back(sp.degree, std::move(sp.basis[0]));
  }
  return out;
}

// ---------------------------------------------------------------------------

FloatMatrix multiply(const FloatMatrix& x, const FloatMatrix& y) {
  FloatMatrix z{x.rows, y.cols, std::vector<double>(static_cast<size_t>(x.rows) * y.cols, 0.0)};
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const double v = x(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

FloatMatrix transpose(const FloatMatrix& x) {
  FloatMatrix t{x.cols, x.rows, std::vector<double>(x.a.size())};
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
  return t;
}

double identity_defect(const FloatMatrix& x) {
  double worst = 0.0;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) worst = std::max(worst, std::fabs(x(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

std::vector<std::pair<int, int>> cylindrical_states(int N) {
  std::vector<std::pair<int, int>> out;
  for (int q = 0; q <= N; ++q)
    for (int p = 0; p <= q; ++p) out.emplace_back(p, q);
  return out;
}

namespace {

// sqrt(rho(x) / lambda_n) h_n(x)
double normalized_hahn(int n, int x, const UniParams& u) {
  const Rational h = hahn_eval(n, x, u);
  if (sgn(h) == 0) return 0.0;
  return h.get_d() * std::sqrt(Rational(hahn_weight(x, u) / hahn_norm(n, u)).get_d());
}

}  // namespace

ChainMatrices chain_matrices(const BiParams& p) {
  const auto grid = grid_points(p.N);
  const auto cyl = cylindrical_states(p.N);
  const auto deg = degree_pairs(p.N);
  const int S = static_cast<int>(grid.size());
  ChainMatrices c;
  c.cart_to_cyl = {S, S, std::vector<double>(static_cast<size_t>(S) * S, 0.0)};
  c.cyl_to_sph = {S, S, std::vector<double>(static_cast<size_t>(S) * S, 0.0)};
  for (int r = 0; r < S; ++r)
    for (int s = 0; s < S; ++s) {
      auto [pp, q] = cyl[s];
      if (q != grid[r].i + grid[r].k) continue;
      c.cart_to_cyl(r, s) = normalized_hahn(pp, grid[r].i, UniParams{p.alpha1, p.alpha2, q});
    }
  for (int s = 0; s < S; ++s)
    for (int t = 0; t < S; ++t) {
      auto [pp, q] = cyl[s];
      const DegreePair d = deg[t];
      if (d.m != pp || q < d.m) continue;
      UniParams u{2 * d.m + p.a12() + 1, p.alpha3, p.N - d.m};
      c.cyl_to_sph(s, t) = normalized_hahn(d.n, q - d.m, u);
    }
  return c;
}

FloatMatrix overlap_float(const BiParams& p) {
  OverlapMatrix o = overlap2(p, OverlapMode::Float);
  return {o.size(), o.size(), o.floats};
}

// ---------------------------------------------------------------------------

Su11Module su11_build(const Rational& nu, int nmax) {
  if (nu <= 0) throw std::invalid_argument("su(1,1) weight must be positive");
  if (nmax < 1) throw std::invalid_argument("truncation must be at least 1");
  const int S = nmax + 1;
  Su11Module m{nu, nmax, RationalMatrix(S, S), RationalMatrix(S, S), RationalMatrix(S, S)};
  for (int n = 0; n <= nmax; ++n) {
    m.K0(n, n) = n + nu;
    if (n + 1 <= nmax) m.Kplus(n + 1, n) = 1;
    if (n >= 1) m.Kminus(n - 1, n) = n * (n + 2 * nu - 1);
  }
  return m;
}

RationalMatrix su11_casimir(const Su11Module& s) { return s.K0 * s.K0 - s.Kplus * s.Kminus - s.K0; }

VerificationReport verify_su11(const Rational& nu, int nmax) {
  VerificationReport rep;
  rep.suite = "su11";
  rep.params = "nu=" + nu.get_str() + " nmax=" + std::to_string(nmax);
  const std::string tag = "[" + rep.params + "]";
  Su11Module s = su11_build(nu, nmax);
  const int S = nmax + 1;
  auto compare_rows = [&](ExactCheck& chk, const RationalMatrix& lhs, const RationalMatrix& rhs, int rows) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < S; ++c)
        chk.compare(lhs(r, c), rhs(r, c), "row " + std::to_string(r) + " col " + std::to_string(c));
  };
  ExactCheck cas("su11-casimir" + tag);
  compare_rows(cas, su11_casimir(s), RationalMatrix::identity(S) * Rational(nu * (nu - 1)), S);
  ExactCheck c1("su11-K0-Kplus" + tag), c2("su11-K0-Kminus" + tag), c3("su11-Kminus-Kplus" + tag);
  compare_rows(c1, s.K0 * s.Kplus - s.Kplus * s.K0, s.Kplus, S);
  compare_rows(c2, s.K0 * s.Kminus - s.Kminus * s.K0, s.Kminus * Rational(-1), S);
  const RationalMatrix comm = s.Kminus * s.Kplus - s.Kplus * s.Kminus;
  compare_rows(c3, comm, s.K0 * Rational(2), nmax);
  ExactCheck top("su11-truncation-defect" + tag);
  // the top row of [K-, K+] - 2 K0 is the truncation artifact and must not vanish
  if (comm(nmax, nmax) == 2 * s.K0(nmax, nmax)) top.fail("top-row commutator unexpectedly exact");
  rep.checks = {cas.result(), c1.result(), c2.result(), c3.result(), top.result()};
  return rep;
}

VerificationReport su11_spectrum_check(const BiParams& p) {
  VerificationReport rep;
  rep.suite = "oracle";
  rep.params = param_echo(p);
  ExactCheck chk("su11-spectrum[" + param_echo(p) + "]");
  const Rational nu1 = (p.alpha1 + 1) / 2, nu2 = (p.alpha2 + 1) / 2, nu3 = (p.alpha3 + 1) / 2;
  const Rational a12 = p.a12(), a123 = p.a123();
  const RationalMatrix L1 = build_operator(OperatorLabel::L1, p).matrix;
  const RationalMatrix L2 = build_operator(OperatorLabel::L2, p).matrix;
  BiTable t(p.alpha1, p.alpha2, p.alpha3, p.N);
  for (auto d : degree_pairs(p.N)) {
    // Casimir values read off truncated modules of weight nu12 and nu
    const Rational nu12 = d.m + nu1 + nu2, nu = d.m + d.n + nu1 + nu2 + nu3;
    const Rational c12 = su11_casimir(su11_build(nu12, 1))(0, 0);
    const Rational c123 = su11_casimir(su11_build(nu, 1))(0, 0);
    const Rational ev1 = -(c12 - a12 * (a12 + 2) / 4);
    const Rational ev2 = -(c123 - (a123 + 1) * (a123 + 3) / 4);
    chk.compare(ev1, -d.m * (d.m + a12 + 1), dp(d) + " L1 eigenvalue");
    chk.compare(ev2, -(d.m + d.n) * (d.m + d.n + a123 + 2), dp(d) + " L2 eigenvalue");
    RationalVector v;
    for (auto g : grid_points(p.N)) v.push_back(t.P(d.m, d.n, g.i, g.k));
    RationalVector w1 = L1 * v, w2 = L2 * v;
    for (size_t j = 0; j < v.size(); ++j) {
      chk.compare(w1[j], ev1 * v[j], dp(d) + " L1 action entry " + std::to_string(j));
      chk.compare(w2[j], ev2 * v[j], dp(d) + " L2 action entry " + std::to_string(j));
    }
  }
  rep.checks.push_back(chk.result());
  return rep;
}

VerificationReport verify_oracle_exact(const BiParams& p, const Rational& perturb) {
  VerificationReport rep;
  rep.suite = "oracle";
  rep.params = param_echo(p);
  const std::string tag = "[" + param_echo(p) + "]";
  const GridOperator L1 = build_operator(OperatorLabel::L1, p, perturb);
  const GridOperator L2 = build_operator(OperatorLabel::L2, p);
  const int S = L1.matrix.rows();

  ExactCheck boundary("operator-boundary" + tag);
  if (L1.dropped) boundary.fail("L1 has " + std::to_string(L1.dropped) + " nonzero shifts leaving the simplex");
  if (L2.dropped) boundary.fail("L2 has " + std::to_string(L2.dropped) + " nonzero shifts leaving the simplex");

  ExactCheck constants("operator-constants" + tag);
  RationalVector ones(S, Rational(1));
  RationalVector z1 = L1.matrix * ones, z2 = L2.matrix * ones;
  for (int j = 0; j < S; ++j) {
    constants.compare(z1[j], 0, "L1 row " + std::to_string(j));
    constants.compare(z2[j], 0, "L2 row " + std::to_string(j));
  }

  ExactCheck commute("operator-commutation" + tag);
  RationalMatrix c = L1.matrix * L2.matrix - L2.matrix * L1.matrix;
  for (int r = 0; r < S; ++r)
    for (int col = 0; col < S; ++col)
      commute.compare(c(r, col), 0, "row " + std::to_string(r) + " col " + std::to_string(col));

  ExactCheck injective("spectrum-injective" + tag);
  {
    std::set<std::pair<Rational, Rational>> seen;
    for (auto d : degree_pairs(p.N)) {
      auto key = std::make_pair(Rational(d.m * (d.m + p.a12() + 1)),
                                Rational((d.m + d.n) * (d.m + d.n + p.a123() + 2)));
      if (!seen.insert(key).second) injective.fail(dp(d) + " repeats a joint eigenvalue");
    }
  }

  ExactCheck eig("joint-eigenvectors" + tag);
  BiTable t(p.alpha1, p.alpha2, p.alpha3, p.N);
  for (auto& sp : joint_eigenspaces(p, perturb)) {
    const DegreePair d = sp.degree;
    if (sp.basis.size() != 1) {
      eig.fail(dp(d) + " eigenspace dimension " + std::to_string(sp.basis.size()));
      continue;
    }
    RationalVector v;
    for (auto g : grid_points(p.N)) v.push_back(t.P(d.m, d.n, g.i, g.k));
    v = normalize_first(std::move(v));
    for (int j = 0; j < S; ++j) eig.compare(sp.basis[0][j], v[j], dp(d) + " entry " + std::to_string(j));
  }

  rep.checks = {boundary.result(), constants.result(), commute.result(), injective.result(), eig.result()};
  rep.append(su11_spectrum_check(p));
  return rep;
}

VerificationReport verify_chain(const BiParams& p, double tol) {
  VerificationReport rep;
  rep.suite = "oracle";
  rep.params = param_echo(p);
  const std::string tag = "[" + param_echo(p) + "]";
  const int S = simplex_size(p.N);
  FloatCheck chain_orth("chain-orthogonality" + tag, tol), chain_comp("chain-composition" + tag, tol),
      unitary("overlap-unitarity" + tag, tol);
  ChainMatrices ch = chain_matrices(p);
  FloatMatrix O = overlap_float(p);
  chain_orth.compare(identity_defect(multiply(transpose(ch.cart_to_cyl), ch.cart_to_cyl)), 0, "cart_to_cyl");
  chain_orth.compare(identity_defect(multiply(transpose(ch.cyl_to_sph), ch.cyl_to_sph)), 0, "cyl_to_sph");
  FloatMatrix prod = multiply(ch.cart_to_cyl, ch.cyl_to_sph);
  for (int r = 0; r < S; ++r)
    for (int col = 0; col < S; ++col)
      chain_comp.compare(prod(r, col), O(r, col), "row " + std::to_string(r) + " col " + std::to_string(col));
  unitary.compare(identity_defect(multiply(transpose(O), O)), 0, "O^T O");
  unitary.compare(identity_defect(multiply(O, transpose(O))), 0, "O O^T");
  rep.checks.push_back(chain_orth.result());
  rep.checks.push_back(chain_comp.result());
  rep.checks.push_back(unitary.result());
  return rep;
}

VerificationReport verify_oracle(const BiParams& p, const OracleOptions& opt) {
  VerificationReport rep = verify_oracle_exact(p, opt.perturb);
  rep.append(verify_chain(p, opt.tol));
  return rep;
}

}  // namespace hahn
