#pragma once

#include "hahn/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hahn {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string max_residual = "0";
  std::string counterexample;  // empty when passing
  long evaluations = 0;
};

struct VerificationReport {
  std::string suite;
  std::string params;
  std::vector<CheckResult> checks;
  // auxiliary exact values, e.g. "gram_diagonal"
  std::map<std::string, std::vector<std::string>> data;

  bool pass() const;
  void append(const VerificationReport& other);
  const CheckResult* find(const std::string& name) const;
};

// Accumulates exact comparisons; keeps the largest |lhs - rhs| and the first
// failing location.
class ExactCheck {
 public:
  explicit ExactCheck(std::string name) { r_.name = std::move(name); }
  bool compare(const Rational& lhs, const Rational& rhs, const std::string& where);
  // records a failure that has no residual (e.g. a coefficient pole)
  void fail(const std::string& where);
  CheckResult result() const;

 private:
  CheckResult r_;
  Rational worst_{0};
};

// Passes when |lhs - rhs| <= tol * (1 + max(|lhs|, |rhs|)) everywhere.
class FloatCheck {
 public:
  FloatCheck(std::string name, double tol) : tol_(tol) { r_.name = std::move(name); }
  bool compare(double lhs, double rhs, const std::string& where);
  void fail(const std::string& where);
  CheckResult result() const;
  double worst() const { return worst_; }

 private:
  CheckResult r_;
  double tol_;
  double worst_ = 0.0;
};

std::string format_double(double x);

}  // namespace hahn
