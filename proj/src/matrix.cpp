#include "hahn/matrix.hpp"

#include <stdexcept>

namespace hahn {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r = *this;
  for (size_t j = 0; j < a_.size(); ++j) r.a_[j] += o.a_[j];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const { return *this + o * Rational(-1); }

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  RationalVector r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      if (sgn((*this)(i, k)) != 0) r[i] += (*this)(i, k) * v[k];
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RationalMatrix RationalMatrix::stack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("stack: column mismatch");
  RationalMatrix r(a.rows_ + b.rows_, a.cols_);
  std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
  std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + static_cast<long>(a.a_.size()));
  return r;
}

RationalVector normalize_first(RationalVector v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      Rational s = x;
      for (auto& y : v) y /= s;
      break;
    }
  }
  return v;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const int R = m.rows(), C = m.cols();
  // clear denominators row by row, then Bareiss elimination over the integers
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (int i = 0; i < R; ++i) {
    Integer l = 1;
    for (int j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::vector<int> pivot_cols;
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(C, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(C, Rational(0));
    x[f] = 1;
    for (int pr = static_cast<int>(pivot_cols.size()) - 1; pr >= 0; --pr) {
      int pc = pivot_cols[pr];
      Rational s = 0;
      for (int j = pc + 1; j < C; ++j)
        if (a[pr][j] != 0 && sgn(x[j]) != 0) s += Rational(a[pr][j]) * x[j];
      x[pc] = -s / Rational(a[pr][pc]);
    }
    basis.push_back(normalize_first(std::move(x)));
  }
  return basis;
}

}  // namespace hahn
