#include "hahn/coupling.hpp"
#include "hahn/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <set>
#include <sys/wait.h>

using namespace hahn;

namespace {

constexpr double kNoLimit = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string first_failure(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.name + ": " + c.counterexample;
  return "";
}

std::string base(const std::string& name) {
  std::string s = name.substr(0, name.find('['));
  return s.substr(0, s.find('/'));
}

// pass, all exact residuals literally zero, every required check present, within the time limit
Outcome judge(const VerificationReport& r, double elapsed, double limit, const std::vector<std::string>& required,
              bool exact) {
  Outcome o;
  std::set<std::string> seen;
  bool zero = true;
  for (const auto& c : r.checks) {
    seen.insert(base(c.name));
    if (exact && c.max_residual != "0") zero = false;
  }
  std::vector<std::string> missing;
  for (const auto& q : required)
    if (!seen.count(q)) missing.push_back(q);
  o.pass = r.pass() && zero && missing.empty() && elapsed < limit;
  o.detail = std::to_string(r.checks.size()) + " checks, " + fmt(elapsed);
  if (std::isfinite(limit)) o.detail += " (limit " + fmt(limit) + ")";
  if (!r.pass()) o.detail += ", first failure " + first_failure(r);
  if (!zero) o.detail += ", nonzero exact residual";
  for (const auto& m : missing) o.detail += ", missing " + m;
  return o;
}

template <class F>
Outcome timed(double limit, const std::vector<std::string>& required, bool exact, F&& run) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = run();
  return judge(r, seconds_since(t0), limit, required, exact);
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
  double w = 0;
  for (size_t j = 0; j < a.a.size(); ++j) w = std::max(w, std::abs(a.a[j] - b.a[j]));
  return w;
}

Outcome overlap_unitarity() {
  double worst = 0;
  int cases = 0;
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= 10; ++N) {
      FloatMatrix o = overlap_float(make_bi_params(t[0], t[1], t[2], N));
      worst = std::max({worst, identity_defect(multiply(transpose(o), o)), identity_defect(multiply(o, transpose(o)))});
      ++cases;
    }
  return {worst <= 1e-10, std::to_string(cases) + " matrices, max defect " + format_double(worst)};
}

Outcome chain_factorization() {
  double comp = 0, orth = 0;
  int cases = 0;
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= 10; ++N) {
      auto p = make_bi_params(t[0], t[1], t[2], N);
      ChainMatrices ch = chain_matrices(p);
      comp = std::max(comp, max_abs_diff(multiply(ch.cart_to_cyl, ch.cyl_to_sph), overlap_float(p)));
      orth = std::max({orth, identity_defect(multiply(transpose(ch.cart_to_cyl), ch.cart_to_cyl)),
                       identity_defect(multiply(transpose(ch.cyl_to_sph), ch.cyl_to_sph))});
      ++cases;
    }
  return {comp <= 1e-10 && orth <= 1e-10, std::to_string(cases) + " chains, composition " + format_double(comp) +
                                              ", factor orthogonality " + format_double(orth)};
}

Outcome su11(double limit) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = sweep_su11(12);
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= 6; ++N) r.append(su11_spectrum_check(make_bi_params(t[0], t[1], t[2], N)));
  return judge(r, seconds_since(t0), limit,
               {"su11-casimir", "su11-K0-Kplus", "su11-K0-Kminus", "su11-Kminus-Kplus", "su11-truncation-defect",
                "su11-spectrum"},
               true);
}

Outcome full_cli(const std::string& cli) {
  auto t0 = std::chrono::steady_clock::now();
  int status = std::system((cli + " verify --suite all --format csv > /dev/null").c_str());
  double s = seconds_since(t0);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code == 0 && s < 120, "exit " + std::to_string(code) + ", " + fmt(s) + " (limit 120.00s)"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path to hahn cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"univariate exact orthogonality, N <= 12",
       [] { return timed(5, {"orthogonality"}, true, [] { return sweep_uni_orthogonality(12); }); }},
      {"univariate generating functions, N <= 10",
       [] { return timed(10, {"genfun", "dual-genfun"}, true, [] { return sweep_uni_genfuns(10); }); }},
      {"bivariate exact suite, N <= 8 on 10 triples",
       [] {
         return timed(60,
                      {"orthogonality", "symmetry", "recurrence-x1", "recurrence-x2", "diff-L1", "diff-L2",
                       "forward-shift-m", "forward-shift-n", "backward-shift-m", "backward-shift-n", "structure",
                       "genfun"},
                      true, [] { return sweep_bi_exact(8, 6); });
       }},
      {"normalized float suite, N <= 10",
       [] {
         return timed(30,
                      {"normalized-structure-float", "normalized-recurrence-float", "normalized-difference-float",
                       "normalized-lowering-float", "normalized-raising-float"},
                      false, [] { return sweep_bi_float(10, 1e-10); });
       }},
      {"overlap unitarity, N <= 10", overlap_unitarity},
      {"chain factorization, N <= 10", chain_factorization},
      {"oracle equivalence, N <= 6",
       [] {
         return timed(kNoLimit, {"operator-boundary", "operator-constants", "operator-commutation", "spectrum-injective",
                            "joint-eigenvectors"},
                      true, [] { return sweep_oracle_exact(6); });
       }},
      {"multivariate Gram diagonality and specializations",
       [] {
         return timed(kNoLimit, {"weight-sum", "gram-diagonal", "specialization-d1", "specialization-d2"}, true,
                      [] { return sweep_mv(); });
       }},
      {"classical structure relations and addition formula, n <= 10",
       [] {
         return timed(kNoLimit,
                      {"jacobi-lower-1", "jacobi-lower-2", "jacobi-raise-1", "jacobi-raise-2", "laguerre-lower",
                       "laguerre-raise", "laguerre-addition"},
                      true, [] { return sweep_classical(10); });
       }},
      {"su(1,1) truncated module and spectrum", [] { return su11(kNoLimit); }},
      {"verify --suite all under two minutes", [&] { return full_cli(cli); }},
  };
  int failed = 0;
  for (size_t j = 0; j < criteria.size(); ++j) {
    Outcome o;
    try {
      o = criteria[j].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << j + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[j].first << "  ["
              << o.detail << "]" << std::endl;
  }
  return failed ? 1 : 0;
}
