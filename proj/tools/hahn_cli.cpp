#include "hahn/coupling.hpp"
#include "hahn/hahn_bi.hpp"
#include "hahn/hahn_multi.hpp"
#include "hahn/hahn_uni.hpp"
#include "hahn/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hahn;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed rational '" + item + "' (expected p or p/q)");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s)) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("malformed integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct Shared {
  std::string alpha;
  int N = -1;
  std::string mode = "float";
  double tol = 1e-10;
  std::string format = "json";
  std::string out;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--alpha", s.alpha, "comma-separated rationals p/q");
  cmd->add_option("--N", s.N, "simplex size")->check(CLI::NonNegativeNumber);
  cmd->add_option("--mode", s.mode, "exact | float");
  cmd->add_option("--tol", s.tol, "float tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", s.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", s.out, "output path (default stdout)");
}

std::vector<Rational> need_alpha(const Shared& s) {
  if (s.alpha.empty()) throw UsageError("--alpha is required");
  return parse_rationals(s.alpha);
}

int need_N(const Shared& s) {
  if (s.N < 0) throw UsageError("--N is required");
  return s.N;
}

void need_count(const std::vector<Rational>& a, size_t n, const std::string& what) {
  if (a.size() != n) throw UsageError(what + " takes " + std::to_string(n) + " alpha values");
}

Json params_json(const std::vector<Rational>& alpha, int N) {
  Json p;
  p["alpha"] = Json::array();
  for (const auto& a : alpha) p["alpha"].push_back(a.get_str());
  p["N"] = N;
  return p;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string label(int a, int b) { return std::to_string(a) + "." + std::to_string(b); }

// ------------------------------------------------------------------ eval

std::string show(const Rational& r, bool exact) { return exact ? r.get_str() : format_double(r.get_d()); }

int run_eval(const Shared& s, const std::string& family, const std::string& degrees, const std::string& point,
             std::ostream& out) {
  const bool exact = s.mode == "exact";
  auto alpha = need_alpha(s);
  const int N = need_N(s);
  if (degrees.empty() || point.empty()) throw UsageError("eval needs --degrees and --point");
  auto deg = parse_ints(degrees);
  auto pt = parse_ints(point);
  std::vector<std::pair<std::string, std::string>> values;
  if (family == "hahn1") {
    need_count(alpha, 2, "hahn1");
    if (deg.size() != 1 || pt.size() != 1) throw UsageError("hahn1 takes one degree and one point");
    auto p = make_uni_params(alpha[0], alpha[1], N);
    if (pt[0] < 0 || pt[0] > N) throw std::out_of_range("point outside 0..N");
    values.emplace_back("h", show(hahn_eval(deg[0], pt[0], p), exact));
    values.emplace_back("weight", show(hahn_weight(pt[0], p), exact));
    values.emplace_back("norm", show(hahn_norm(deg[0], p), exact));
  } else if (family == "hahn2") {
    need_count(alpha, 3, "hahn2");
    if (deg.size() != 2 || pt.size() != 2) throw UsageError("hahn2 takes two degrees and two point coordinates");
    auto p = make_bi_params(alpha[0], alpha[1], alpha[2], N);
    DegreePair d{deg[0], deg[1]};
    GridPoint g{pt[0], pt[1]};
    RadicalScalar q = q2_eval(d, g, p);
    values.emplace_back("P", show(p2_eval(d, g, p), exact));
    values.emplace_back("H", show(h2_eval(d, g, p), exact));
    values.emplace_back("Q", exact ? q.to_string() : format_double(q.to_double()));
    values.emplace_back("weight", show(weight2(g, p), exact));
    values.emplace_back("lambda", show(lambda2(d, p), exact));
    values.emplace_back("Lambda", show(bigLambda(d, p), exact));
  } else if (family == "hahnd") {
    auto p = make_multi_params(alpha, N);
    if (static_cast<int>(deg.size()) != p.d() || static_cast<int>(pt.size()) != p.d())
      throw UsageError("hahnd takes d = (number of alpha values - 1) degrees and point coordinates");
    values.emplace_back("P", show(mv_p_eval(deg, pt, p), exact));
    values.emplace_back("weight", show(mv_weight(pt, p), exact));
    values.emplace_back("Lambda", show(mv_lambda(deg, p), exact));
  } else {
    throw UsageError("unknown family '" + family + "' (hahn1 | hahn2 | hahnd)");
  }
  if (s.format == "csv") {
    out << "quantity,value\n";
    for (const auto& [k, v] : values) out << k << "," << csv_escape(v) << "\n";
  } else {
    Json j;
    j["params"] = params_json(alpha, N);
    j["family"] = family;
    j["mode"] = exact ? "exact" : "float";
    j["degrees"] = deg;
    j["point"] = pt;
    Json v;
    for (const auto& [k, val] : values) v[k] = val;
    j["values"] = v;
    out << j.dump(2) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ matrices

struct Table {
  std::vector<std::string> rows, cols, entries;  // entries row-major
};

void emit_table_csv(const Table& t, std::ostream& out) {
  out << "";
  for (const auto& c : t.cols) out << "," << c;
  out << "\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    out << t.rows[r];
    for (size_t c = 0; c < t.cols.size(); ++c) out << "," << csv_escape(t.entries[r * t.cols.size() + c]);
    out << "\n";
  }
}

Json table_json(const Table& t) {
  Json j;
  j["rows"] = t.rows;
  j["cols"] = t.cols;
  j["entries"] = t.entries;
  return j;
}

int run_overlap(const Shared& s, std::ostream& out) {
  auto alpha = need_alpha(s);
  need_count(alpha, 3, "overlap");
  const int N = need_N(s);
  auto p = make_bi_params(alpha[0], alpha[1], alpha[2], N);
  OverlapMode mode;
  if (s.mode == "float")
    mode = OverlapMode::Float;
  else if (s.mode == "exact" || s.mode == "radical")
    mode = OverlapMode::Radical;
  else if (s.mode == "squared")
    mode = OverlapMode::Squared;
  else
    throw UsageError("unknown mode '" + s.mode + "' (float | exact | radical | squared)");
  OverlapMatrix o = overlap2(p, mode);
  Table t;
  for (auto g : o.rows) t.rows.push_back(label(g.i, g.k));
  for (auto d : o.cols) t.cols.push_back(label(d.m, d.n));
  for (int r = 0; r < o.size(); ++r)
    for (int c = 0; c < o.size(); ++c) t.entries.push_back(o.entry_string(r, c));
  if (s.format == "csv") {
    emit_table_csv(t, out);
  } else {
    Json j;
    j["params"] = params_json(alpha, N);
    j.update(table_json(t));
    j["mode"] = mode == OverlapMode::Float ? "float" : mode == OverlapMode::Radical ? "radical" : "squared";
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_chain(const Shared& s, std::ostream& out) {
  auto alpha = need_alpha(s);
  need_count(alpha, 3, "chain");
  const int N = need_N(s);
  auto p = make_bi_params(alpha[0], alpha[1], alpha[2], N);
  ChainMatrices ch = chain_matrices(p);
  std::vector<std::string> grid, cyl, deg;
  for (auto g : grid_points(N)) grid.push_back(label(g.i, g.k));
  for (auto [pp, q] : cylindrical_states(N)) cyl.push_back(label(pp, q));
  for (auto d : degree_pairs(N)) deg.push_back(label(d.m, d.n));
  auto table = [](const FloatMatrix& m, std::vector<std::string> rows, std::vector<std::string> cols) {
    Table t{std::move(rows), std::move(cols), {}};
    for (double v : m.a) t.entries.push_back(format_double(v));
    return t;
  };
  Table a = table(ch.cart_to_cyl, grid, cyl), b = table(ch.cyl_to_sph, cyl, deg);
  if (s.format == "csv") {
    emit_table_csv(a, out);
    out << "\n";
    emit_table_csv(b, out);
  } else {
    Json j;
    j["params"] = params_json(alpha, N);
    j["mode"] = "float";
    j["cart_to_cyl"] = table_json(a);
    j["cyl_to_sph"] = table_json(b);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_genfun(const Shared& s, const std::string& family, const std::string& degrees, const std::string& point,
               std::ostream& out) {
  auto alpha = need_alpha(s);
  const int N = need_N(s);
  std::vector<std::tuple<std::string, Rational, Rational>> terms;
  if (family == "hahn1") {
    need_count(alpha, 2, "hahn1 genfun");
    auto p = make_uni_params(alpha[0], alpha[1], N);
    std::pair<Poly, Poly> sides;
    if (!point.empty()) {
      auto x = parse_ints(point);
      if (x.size() != 1 || x[0] < 0 || x[0] > N) throw UsageError("hahn1 genfun takes one point in 0..N");
      sides = hahn_genfun_sides(x[0], p);
    } else if (!degrees.empty()) {
      auto n = parse_ints(degrees);
      if (n.size() != 1 || n[0] < 0 || n[0] > N) throw UsageError("hahn1 dual genfun takes one degree in 0..N");
      sides = hahn_dual_genfun_sides(n[0], p);
    } else {
      throw UsageError("hahn1 genfun needs --point (generating function) or --degrees (dual)");
    }
    int top = std::max(sides.first.degree(), sides.second.degree());
    for (int k = 0; k <= top; ++k)
      terms.emplace_back("t^" + std::to_string(k), sides.first.coeff(k), sides.second.coeff(k));
  } else if (family == "hahn2") {
    need_count(alpha, 3, "hahn2 genfun");
    auto n = parse_ints(degrees);
    if (n.size() != 2) throw UsageError("hahn2 genfun takes two degrees");
    auto [lhs, rhs] = bi_genfun_sides({n[0], n[1]}, make_bi_params(alpha[0], alpha[1], alpha[2], N));
    for (int b = 0; b <= N; ++b)
      for (int a = 0; a + b <= N; ++a)
        terms.emplace_back("z1^" + std::to_string(a) + " z2^" + std::to_string(b), lhs.coeff(a, b), rhs.coeff(a, b));
  } else {
    throw UsageError("genfun supports families hahn1 and hahn2");
  }
  bool equal = true;
  for (const auto& t : terms) equal = equal && std::get<1>(t) == std::get<2>(t);
  if (s.format == "csv") {
    out << "term,lhs,rhs\n";
    for (const auto& [k, l, r] : terms) out << csv_escape(k) << "," << l.get_str() << "," << r.get_str() << "\n";
  } else {
    Json j;
    j["params"] = params_json(alpha, N);
    j["family"] = family;
    j["mode"] = "exact";
    j["equal"] = equal;
    j["terms"] = Json::array();
    for (const auto& [k, l, r] : terms) j["terms"].push_back({{"term", k}, {"lhs", l.get_str()}, {"rhs", r.get_str()}});
    out << j.dump(2) << "\n";
  }
  return equal ? 0 : 1;
}

// ---------------------------------------------------------------- verify

int run_verify(const Shared& s, const std::string& suite, const std::string& check, const std::string& perturb,
               std::ostream& out) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite '" + suite + "'");
  SuiteOptions opt;
  if (!s.alpha.empty()) opt.alpha = parse_rationals(s.alpha);
  if (s.N >= 0) opt.N = s.N;
  opt.check = check;
  opt.tol = s.tol;
  if (!perturb.empty()) opt.perturb = parse_rationals(perturb).at(0);
  VerificationReport rep = run_suite(suite, opt);
  const bool pass = rep.pass();
  if (s.format == "csv") {
    out << "check,status,max_residual,counterexample\n";
    for (const auto& c : rep.checks)
      out << csv_escape(c.name) << "," << (c.pass ? "pass" : "fail") << "," << csv_escape(c.max_residual) << ","
          << csv_escape(c.counterexample) << "\n";
  } else {
    Json j;
    j["suite"] = rep.suite;
    j["params"] = rep.params;
    j["status"] = pass ? "pass" : "fail";
    j["checks_total"] = rep.checks.size();
    j["checks_failed"] = std::count_if(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return !c.pass; });
    j["checks"] = Json::array();
    for (const auto& c : rep.checks) {
      Json e;
      e["name"] = c.name;
      e["status"] = c.pass ? "pass" : "fail";
      e["max_residual"] = c.max_residual;
      if (!c.pass) e["counterexample"] = c.counterexample;
      e["evaluations"] = c.evaluations;
      j["checks"].push_back(e);
    }
    for (const auto& [k, v] : rep.data) j["data"][k] = v;
    out << j.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and float evaluation and verification of univariate, bivariate and multivariate Hahn "
               "polynomials"};
  app.require_subcommand(1);

  Shared shared;
  std::string family = "hahn2", degrees, point, suite = "all", check, perturb;

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial, its weight and norm");
  add_shared(eval, shared);
  eval->add_option("--family", family, "hahn1 | hahn2 | hahnd");
  eval->add_option("--degrees", degrees, "comma-separated degrees");
  eval->add_option("--point", point, "comma-separated grid point");

  auto* overlap = app.add_subcommand("overlap", "overlap matrix W Q over the simplex");
  add_shared(overlap, shared);

  auto* chain = app.add_subcommand("chain", "cartesian-cylindrical and cylindrical-spherical factors");
  add_shared(chain, shared);

  auto* genfun = app.add_subcommand("genfun", "both sides of a generating function");
  add_shared(genfun, shared);
  genfun->add_option("--family", family, "hahn1 | hahn2");
  genfun->add_option("--degrees", degrees, "degree(s)");
  genfun->add_option("--point", point, "grid point (hahn1)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_shared(verify, shared);
  verify->add_option("--suite", suite, "uni | bi | mv | oracle | classical | all");
  verify->add_option("--check", check, "single check identifier");
  verify->add_option("--perturb", perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (shared.mode != "exact" && shared.mode != "float" && !overlap->parsed())
      throw UsageError("unknown mode '" + shared.mode + "' (exact | float)");
    std::ofstream file;
    if (!shared.out.empty()) {
      file.open(shared.out);
      if (!file) throw UsageError("cannot open output file '" + shared.out + "'");
    }
    std::ostream& out = shared.out.empty() ? std::cout : file;
    if (eval->parsed()) return run_eval(shared, family, degrees, point, out);
    if (overlap->parsed()) return run_overlap(shared, out);
    if (chain->parsed()) return run_chain(shared, out);
    if (genfun->parsed()) return run_genfun(shared, family == "hahn2" && degrees.empty() ? "hahn1" : family, degrees, point, out);
    if (verify->parsed()) return run_verify(shared, suite, check, perturb, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
