#include "hahn/suites.hpp"

#include "hahn/classical.hpp"
#include "hahn/coupling.hpp"
#include "hahn/hahn_bi.hpp"
#include "hahn/hahn_multi.hpp"
#include "hahn/hahn_uni.hpp"

#include <algorithm>
#include <stdexcept>

namespace hahn {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"uni", "bi", "mv", "oracle", "classical", "all"};
  return names;
}

namespace {

const std::vector<std::string> kOracleChecks = {
    "operator-boundary",   "operator-constants", "operator-commutation", "spectrum-injective",
    "joint-eigenvectors",  "su11-spectrum",      "chain-orthogonality",  "chain-composition",
    "overlap-unitarity",   "su11-casimir",       "su11-K0-Kplus",        "su11-K0-Kminus",
    "su11-Kminus-Kplus",   "su11-truncation-defect"};
const std::vector<std::string> kMvChecks = {"weight-sum", "gram-diagonal", "specialization-d1",
                                            "specialization-d2"};

bool is_float_check(const std::string& c) { return c.find("-float") != std::string::npos; }

// name up to the parameter tag and sub-check suffix
std::string base_name(const std::string& name) {
  std::string s = name.substr(0, name.find('['));
  return s.substr(0, s.find('/'));
}

VerificationReport filtered(VerificationReport rep, const std::string& check) {
  if (check.empty()) return rep;
  std::erase_if(rep.checks, [&](const CheckResult& c) { return base_name(c.name) != check; });
  return rep;
}

VerificationReport named(VerificationReport rep, const std::string& suite, const std::string& params) {
  rep.suite = suite;
  rep.params = params;
  return rep;
}

std::string echo(const std::vector<Rational>& a, std::optional<int> N) {
  std::string s = "alpha=";
  for (size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + a[j].get_str();
  if (N) s += " N=" + std::to_string(*N);
  return s;
}

void need_count(const std::vector<Rational>& a, size_t want, const std::string& suite) {
  if (a.size() != want)
    throw std::invalid_argument("suite " + suite + " takes " + std::to_string(want) + " alpha values, got " +
                                std::to_string(a.size()));
}

}  // namespace

std::vector<std::string> suite_checks(const std::string& suite) {
  if (suite == "uni") return uni_checks();
  if (suite == "bi") return bi_checks();
  if (suite == "mv") return kMvChecks;
  if (suite == "oracle") return kOracleChecks;
  if (suite == "classical") return classical_relations();
  if (suite == "all") return {};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

const std::vector<Rational>& lattice_values() {
  static const std::vector<Rational> v = {Rational(-1, 2), Rational(0), Rational(1, 2), Rational(3), Rational(7, 3)};
  return v;
}

const std::vector<std::array<Rational, 3>>& lattice_triples() {
  using R = Rational;
  static const std::vector<std::array<Rational, 3>> t = {
      {R(0), R(0), R(0)},         {R(-1, 2), R(-1, 2), R(-1, 2)}, {R(1, 2), R(-1, 2), R(0)},
      {R(-1, 2), R(1, 2), R(3)},  {R(3), R(7, 3), R(1, 2)},       {R(7, 3), R(0), R(-1, 2)},
      {R(1, 2), R(1, 2), R(1, 2)}, {R(0), R(3), R(7, 3)},         {R(-1, 2), R(0), R(7, 3)},
      {R(3), R(-1, 2), R(-1, 2)}};
  return t;
}

VerificationReport sweep_uni_orthogonality(int max_N) {
  VerificationReport rep{"uni", "lattice N<=" + std::to_string(max_N), {}, {}};
  for (const auto& a : lattice_values())
    for (const auto& b : lattice_values())
      for (int N = 0; N <= max_N; ++N) {
        auto r = verify_uni("orthogonality", make_uni_params(a, b, N));
        rep.checks.insert(rep.checks.end(), r.checks.begin(), r.checks.end());
      }
  return rep;
}

VerificationReport sweep_uni_genfuns(int max_N) {
  VerificationReport rep{"uni", "lattice N<=" + std::to_string(max_N), {}, {}};
  for (const auto& a : lattice_values())
    for (const auto& b : lattice_values())
      for (int N = 0; N <= max_N; ++N)
        for (const char* c : {"genfun", "dual-genfun"}) rep.append(verify_uni(c, make_uni_params(a, b, N)));
  return rep;
}

VerificationReport sweep_bi_exact(int max_N, int max_N_genfun) {
  VerificationReport rep{"bi", "lattice triples N<=" + std::to_string(max_N), {}, {}};
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= max_N; ++N) {
      auto p = make_bi_params(t[0], t[1], t[2], N);
      for (const auto& c : bi_checks()) {
        if (is_float_check(c) || (c == "genfun" && N > max_N_genfun)) continue;
        rep.append(verify_bi(c, p));
      }
    }
  return rep;
}

VerificationReport sweep_bi_float(int max_N, double tol) {
  VerificationReport rep{"bi", "lattice triples N<=" + std::to_string(max_N), {}, {}};
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= max_N; ++N) {
      auto p = make_bi_params(t[0], t[1], t[2], N);
      for (const auto& c : bi_checks())
        if (is_float_check(c)) rep.append(verify_bi(c, p, {tol, 0}));
    }
  return rep;
}

VerificationReport sweep_oracle_exact(int max_N) {
  VerificationReport rep{"oracle", "lattice triples N<=" + std::to_string(max_N), {}, {}};
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= max_N; ++N) rep.append(verify_oracle_exact(make_bi_params(t[0], t[1], t[2], N)));
  return rep;
}

VerificationReport sweep_oracle_float(int max_N, double tol) {
  VerificationReport rep{"oracle", "lattice triples N<=" + std::to_string(max_N), {}, {}};
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= max_N; ++N) rep.append(verify_chain(make_bi_params(t[0], t[1], t[2], N), tol));
  return rep;
}

VerificationReport sweep_mv() {
  using R = Rational;
  VerificationReport rep{"mv", "d,N in (3,4),(4,3),(5,2); d=1 N<=8; d=2 N<=6", {}, {}};
  rep.append(verify_mv(make_multi_params({R(1, 2), R(0), R(3), R(7, 3)}, 4)));
  rep.append(verify_mv(make_multi_params({R(-1, 2), R(1, 2), R(0), R(3), R(7, 3)}, 3)));
  rep.append(verify_mv(make_multi_params({R(7, 3), R(-1, 2), R(0), R(1, 2), R(3), R(-1, 2)}, 2)));
  for (const auto& a : lattice_values())
    for (const auto& b : lattice_values())
      for (int N = 0; N <= 8; ++N) rep.append(verify_mv(make_multi_params({a, b}, N)));
  for (const auto& t : lattice_triples())
    for (int N = 0; N <= 6; ++N) rep.append(verify_mv(make_multi_params({t[0], t[1], t[2]}, N)));
  return rep;
}

VerificationReport sweep_classical(int max_n) {
  VerificationReport rep{"classical", "lattice n<=" + std::to_string(max_n), {}, {}};
  for (const auto& rel : classical_relations())
    for (const auto& a : lattice_values())
      for (const auto& b : lattice_values()) {
        // single-parameter Laguerre relations need only one pass over b
        if (rel.starts_with("laguerre-") && rel != "laguerre-addition" && b != lattice_values()[0]) continue;
        for (int n = 0; n <= max_n; ++n) rep.append(verify_classical(rel, n, a, b));
      }
  return rep;
}

VerificationReport sweep_su11(int nmax) {
  VerificationReport rep{"oracle", "nu in 1/4,1/2,3/4,2 nmax=" + std::to_string(nmax), {}, {}};
  for (const auto& nu : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(2)}) rep.append(verify_su11(nu, nmax));
  return rep;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  const auto known = suite_checks(suite);
  if (!opt.check.empty() && std::find(known.begin(), known.end(), opt.check) == known.end())
    throw std::invalid_argument("unknown check '" + opt.check + "' for suite " + suite);

  if (suite == "all") {
    if (opt.alpha || opt.N || !opt.check.empty())
      throw std::invalid_argument("suite all runs the default sweeps and takes no parameters");
    VerificationReport rep{"all", "default sweeps", {}, {}};
    for (const char* s : {"uni", "bi", "mv", "oracle", "classical"}) {
      SuiteOptions sub;
      sub.tol = opt.tol;
      rep.append(run_suite(s, sub));
    }
    return rep;
  }

  if (!opt.alpha) {
    if (opt.N) throw std::invalid_argument("--N needs --alpha");
    if (suite == "uni") {
      VerificationReport rep = sweep_uni_orthogonality(12);
      rep.append(sweep_uni_genfuns(10));
      return filtered(named(rep, "uni", "lattice"), opt.check);
    }
    if (suite == "bi") {
      VerificationReport rep = sweep_bi_exact(8, 6);
      rep.append(sweep_bi_float(10, opt.tol));
      return filtered(named(rep, "bi", "lattice triples"), opt.check);
    }
    if (suite == "mv") return filtered(sweep_mv(), opt.check);
    if (suite == "oracle") {
      VerificationReport rep = sweep_oracle_exact(6);
      rep.append(sweep_oracle_float(10, opt.tol));
      rep.append(sweep_su11(12));
      return filtered(named(rep, "oracle", "lattice triples"), opt.check);
    }
    if (suite == "classical") return filtered(sweep_classical(10), opt.check);
  }

  const std::vector<Rational>& a = *opt.alpha;
  if (!opt.N) throw std::invalid_argument("--alpha needs --N");
  const int N = *opt.N;
  if (suite == "uni") {
    need_count(a, 2, suite);
    auto p = make_uni_params(a[0], a[1], N);
    VerificationReport rep{"uni", echo(a, N), {}, {}};
    for (const auto& c : uni_checks())
      if (opt.check.empty() || opt.check == c) rep.append(verify_uni(c, p, opt.perturb));
    return rep;
  }
  if (suite == "bi") {
    need_count(a, 3, suite);
    auto p = make_bi_params(a[0], a[1], a[2], N);
    VerificationReport rep{"bi", echo(a, N), {}, {}};
    for (const auto& c : bi_checks())
      if (opt.check.empty() || opt.check == c) rep.append(verify_bi(c, p, {opt.tol, opt.perturb}));
    return rep;
  }
  if (suite == "mv") return filtered(named(verify_mv(make_multi_params(a, N), opt.perturb), "mv", echo(a, N)), opt.check);
  if (suite == "oracle") {
    need_count(a, 3, suite);
    auto rep = verify_oracle(make_bi_params(a[0], a[1], a[2], N), {opt.tol, opt.perturb});
    return filtered(named(rep, "oracle", echo(a, N)), opt.check);
  }
  if (suite == "classical") {
    if (a.empty() || a.size() > 2) throw std::invalid_argument("suite classical takes one or two alpha values");
    if (N < 0) throw std::invalid_argument("degree must be nonnegative");
    const Rational b = a.size() == 2 ? a[1] : Rational(0);
    VerificationReport rep{"classical", echo(a, std::nullopt) + " n=" + std::to_string(N), {}, {}};
    for (const auto& rel : classical_relations())
      if (opt.check.empty() || opt.check == rel) rep.append(verify_classical(rel, N, a[0], b, opt.perturb));
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace hahn
