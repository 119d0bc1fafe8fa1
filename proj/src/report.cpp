#include "hahn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hahn {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& [key, values] : other.data) data[key].insert(data[key].end(), values.begin(), values.end());
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool ExactCheck::compare(const Rational& lhs, const Rational& rhs, const std::string& where) {
  ++r_.evaluations;
  if (lhs == rhs) return true;
  Rational d = abs(lhs - rhs);
  if (d > worst_) worst_ = d;
  if (r_.pass) {
    r_.pass = false;
    r_.counterexample = where + " lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
  }
  return false;
}

void ExactCheck::fail(const std::string& where) {
  ++r_.evaluations;
  if (r_.pass) {
    r_.pass = false;
    r_.counterexample = where;
  }
}

CheckResult ExactCheck::result() const {
  CheckResult r = r_;
  r.max_residual = worst_.get_str();
  return r;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool FloatCheck::compare(double lhs, double rhs, const std::string& where) {
  ++r_.evaluations;
  double d = std::fabs(lhs - rhs);
  if (std::isnan(d)) {
    fail(where + " lhs=" + format_double(lhs) + " rhs=" + format_double(rhs));
    return false;
  }
  double scale = 1.0 + std::max(std::fabs(lhs), std::fabs(rhs));
  worst_ = std::max(worst_, d);
  if (d <= tol_ * scale) return true;
  if (r_.pass) {
    r_.pass = false;
    r_.counterexample = where + " lhs=" + format_double(lhs) + " rhs=" + format_double(rhs);
  }
  return false;
}

void FloatCheck::fail(const std::string& where) {
  ++r_.evaluations;
  if (r_.pass) {
    r_.pass = false;
    r_.counterexample = where;
  }
}

CheckResult FloatCheck::result() const {
  CheckResult r = r_;
  r.max_residual = format_double(worst_);
  return r;
}

}  // namespace hahn
