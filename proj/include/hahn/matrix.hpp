#pragma once

#include "hahn/rational.hpp"

#include <string>
#include <vector>

namespace hahn {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& s) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const RationalMatrix& o) const;

  // rows of a stacked on rows of b
  static RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Exact kernel basis; each vector scaled so its first nonzero entry is 1.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

// Scale v so its first nonzero entry is 1 (zero vector returned unchanged).
RationalVector normalize_first(RationalVector v);

}  // namespace hahn
