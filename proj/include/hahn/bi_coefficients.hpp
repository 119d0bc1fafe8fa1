#pragma once

// Coefficient formulas of the bivariate identities, generic in the scalar so
// they can be evaluated over RatFun when the parameters hit a 0/0.

#include <array>

namespace hahn::coef {

template <class T>
struct Alphas {
  T a1, a2, a3;
  T a12() const { return a1 + a2; }
  T a123() const { return a1 + a2 + a3; }
};

// three-term recurrence in x1 (unnormalized P): a, b, c, d, e, f, g, h, i
template <class T>
std::array<T, 9> recurrence_x1(const Alphas<T>& al, int n1, int n2, int N) {
  const T a1 = al.a1, a2 = al.a2, a3 = al.a3, a12 = al.a12(), a123 = al.a123();
  const T m = T(n1), n = T(n2), NN = T(N);
  const T quad = T(2 * n1 * n1) + T(2 * n1) * (a12 + 1) + (a1 + 1) * a12;
  const T A = (m + a12 + 1) * (2 * m + n + a123 + 2) * (2 * m + n + a123 + 3) * (m + n - NN) /
              ((2 * m + a12 + 1) * (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 2) * (2 * m + 2 * n + a123 + 3));
  const T B = (2 * m + n + a123 + 2) * quad * (m + n - NN) /
              ((2 * m + a12) * (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 2) * (2 * m + 2 * n + a123 + 3));
  const T C = m * (m + a1) * (m + a2) * (m + n - NN) /
              ((2 * m + a12) * (2 * m + a12 + 1) * (2 * m + 2 * n + a123 + 2) * (2 * m + 2 * n + a123 + 3));
  const T D = m * (m + a1) * (m + a2) * (2 * m + n + a12 + 1) * (2 * NN + a123 + 3) /
              ((2 * m + a12) * (2 * m + a12 + 1) * (2 * m + 2 * n + a123 + 1) * (2 * m + 2 * n + a123 + 3));
  const T F = n * (n + a3) * (m + a12 + 1) * (2 * m + n + a123 + 2) * (2 * NN + a123 + 3) /
              ((2 * m + a12 + 1) * (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 1) * (2 * m + 2 * n + a123 + 3));
  const T G = n * (n - 1) * (n + a3) * (n + a3 - 1) * (m + a12 + 1) * (NN + m + n + a123 + 2) /
              ((2 * m + a12 + 1) * (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 1) * (2 * m + 2 * n + a123 + 2));
  const T H = n * (n + a3) * quad * (2 * m + n + a12 + 1) * (NN + m + n + a123 + 2) /
              ((2 * m + a12) * (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 1) * (2 * m + 2 * n + a123 + 2));
  const T I = m * (m + a1) * (m + a2) * (2 * m + n + a12) * (2 * m + n + a12 + 1) * (NN + m + n + a123 + 2) /
              ((2 * m + a12) * (2 * m + a12 + 1) * (2 * m + 2 * n + a123 + 1) * (2 * m + 2 * n + a123 + 2));
  const T E =
      n * (m + a1 + 1) * (m + a12 + 1) * (n + a3) * (NN + m + n + a123 + 2) /
          ((2 * m + a12 + 1) * (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 1) * (2 * m + 2 * n + a123 + 2)) +
      m * (m + a2) * (n + 1) * (n + a3 + 1) * (NN - m - n) /
          ((2 * m + a12) * (2 * m + a12 + 1) * (2 * m + 2 * n + a123 + 2) * (2 * m + 2 * n + a123 + 3)) +
      m * (m + a2) * (2 * m + n + a12 + 1) * (2 * m + n + a123 + 1) * (NN + m + n + a123 + 2) /
          ((2 * m + a12) * (2 * m + a12 + 1) * (2 * m + 2 * n + a123 + 1) * (2 * m + 2 * n + a123 + 2)) +
      (m + a1 + 1) * (m + a12 + 1) * (2 * m + n + a12 + 2) * (2 * m + n + a123 + 2) * (NN - m - n) /
          ((2 * m + a12 + 1) * (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 2) * (2 * m + 2 * n + a123 + 3));
  return {A, B, C, D, E, F, G, H, I};
}

// N P(x1+1, x2; N) in terms of P^{(a1+1,a2,a3)}(x1, x2; N-1) at degrees
// (n1,n2), (n1-1,n2), (n1,n2-1), (n1-1,n2+1)
template <class T>
std::array<T, 4> structure_forward_x1(const Alphas<T>& al, int n1, int n2, int N) {
  const T a2 = al.a2, a3 = al.a3, a12 = al.a12(), a123 = al.a123();
  const T m = T(n1), n = T(n2), NN = T(N);
  const T den = (2 * m + a12 + 1) * (2 * m + 2 * n + a123 + 2);
  return {(m + a12 + 1) * (2 * m + n + a123 + 2) * (NN - m - n) / den,
          -(m * (m + a2) * (2 * m + n + a12 + 1) * (NN + m + n + a123 + 2)) / den,
          -(n * (n + a3) * (m + a12 + 1) * (NN + m + n + a123 + 2)) / den,
          m * (m + a2) * (NN - m - n) / den};
}

// N P(x1, x2+1; N) in terms of P^{(a1,a2+1,a3)}(x1, x2; N-1), same degrees
template <class T>
std::array<T, 4> structure_forward_x2(const Alphas<T>& al, int n1, int n2, int N) {
  const T a1 = al.a1, a3 = al.a3, a12 = al.a12(), a123 = al.a123();
  const T m = T(n1), n = T(n2), NN = T(N);
  const T den = (2 * m + a12 + 1) * (2 * m + 2 * n + a123 + 2);
  return {(m + a12 + 1) * (2 * m + n + a123 + 2) * (NN - m - n) / den,
          m * (m + a1) * (2 * m + n + a12 + 1) * (NN + m + n + a123 + 2) / den,
          -(n * (n + a3) * (m + a12 + 1) * (NN + m + n + a123 + 2)) / den,
          -(m * (m + a1) * (NN - m - n)) / den};
}

// (x1/N) P^{(a1+1,a2,a3)}(x1-1, x2; N-1) in terms of P(x1, x2; N) at degrees
// (n1,n2), (n1+1,n2), (n1,n2+1), (n1+1,n2-1)
template <class T>
std::array<T, 4> structure_backward_x1(const Alphas<T>& al, int n1, int n2) {
  const T a1 = al.a1, a3 = al.a3, a12 = al.a12(), a123 = al.a123();
  const T m = T(n1), n = T(n2);
  const T den = (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 3);
  return {(m + a1 + 1) * (2 * m + n + a12 + 2) / den, -(2 * m + n + a123 + 3) / den, -(m + a1 + 1) / den,
          n * (n + a3) / den};
}

template <class T>
std::array<T, 4> structure_backward_x2(const Alphas<T>& al, int n1, int n2) {
  const T a2 = al.a2, a3 = al.a3, a12 = al.a12(), a123 = al.a123();
  const T m = T(n1), n = T(n2);
  const T den = (2 * m + a12 + 2) * (2 * m + 2 * n + a123 + 3);
  return {(m + a2 + 1) * (2 * m + n + a12 + 2) / den, (2 * m + n + a123 + 3) / den, -(m + a2 + 1) / den,
          -(n * (n + a3)) / den};
}

// Squares of the normalized structure coefficients alpha, beta, gamma, delta
// at (m, n; N). gamma uses (2n+2m+a123+1)(2n+2m+a123+2) in the denominator.
template <class T>
std::array<T, 4> structure_normalized_sq(const Alphas<T>& al, int mi, int ni, int N) {
  const T a1 = al.a1, a2 = al.a2, a3 = al.a3, a12 = al.a12(), a123 = al.a123();
  const T m = T(mi), n = T(ni), NN = T(N);
  const T alpha = (m + a1 + 1) * (m + a12 + 1) * (n + 2 * m + a12 + 2) * (n + 2 * m + a123 + 2) * (NN - m - n) /
                  ((2 * m + a12 + 1) * (2 * m + a12 + 2) * (2 * n + 2 * m + a123 + 2) * (2 * n + 2 * m + a123 + 3));
  const T beta = m * (m + a2) * (n + 2 * m + a12 + 1) * (n + 2 * m + a123 + 1) * (NN + m + n + a123 + 2) /
                 ((2 * m + a12) * (2 * m + a12 + 1) * (2 * n + 2 * m + a123 + 1) * (2 * n + 2 * m + a123 + 2));
  const T gamma = n * (n + a3) * (m + a1 + 1) * (m + a12 + 1) * (NN + m + n + a123 + 2) /
                  ((2 * m + a12 + 1) * (2 * m + a12 + 2) * (2 * n + 2 * m + a123 + 1) * (2 * n + 2 * m + a123 + 2));
  const T delta = m * n * (m + a2) * (n + a3) * (NN - m - n + 1) /
                  ((2 * m + a12) * (2 * m + a12 + 1) * (2 * n + 2 * m + a123) * (2 * n + 2 * m + a123 + 1));
  return {alpha, beta, gamma, delta};
}

template <class T>
T poch2(const T& x) {
  return x * (x + 1);
}

// Explicit normalized recurrence coefficients at (m, n; N):
// a^2, c^2, b^2 radicand, b bracket, d^2 radicand, d bracket, e
template <class T>
std::array<T, 7> recurrence_normalized(const Alphas<T>& al, int mi, int ni, int N) {
  const T a1 = al.a1, a2 = al.a2, a3 = al.a3, a12 = al.a12(), a123 = al.a123();
  const T m = T(mi), n = T(ni), NN = T(N);
  const T a_sq = m * (m + a1) * (m + a2) * (m + a12) * poch2(n + 2 * m + a12) * poch2(n + 2 * m + a123) *
                 (NN + m + n + a123 + 2) * (NN - m - n + 1) /
                 (poch2(2 * m + a12 - 1) * poch2(2 * m + a12) * poch2(2 * n + 2 * m + a123) *
                  poch2(2 * n + 2 * m + a123 + 1));
  const T c_sq = m * n * (n - 1) * (m + a1) * (m + a2) * (m + a12) * poch2(n + a3 - 1) * (NN + m + n + a123 + 1) *
                 (NN - m - n + 2) /
                 (poch2(2 * m + a12 - 1) * poch2(2 * m + a12) * poch2(2 * n + 2 * m + a123 - 2) *
                  poch2(2 * n + 2 * m + a123 - 1));
  const T b_sq = n * (n + a3) * (n + 2 * m + a12 + 1) * (n + 2 * m + a123 + 1) * (NN + m + n + a123 + 2) *
                 (NN - m - n + 1) /
                 ((2 * m + a12 + 1) * (2 * m + a12 + 1) * poch2(2 * m + 2 * n + a123) * poch2(2 * n + 2 * m + a123 + 1));
  const T b_br = m * (m + a2) / (2 * m + a12) + (m + a1 + 1) * (m + a12 + 1) / (2 * m + a12 + 2);
  const T d_sq = m * n * (m + a1) * (m + a2) * (m + a12) * (n + a3) * (n + 2 * m + a12) * (n + 2 * m + a123) /
                 (poch2(2 * m + a12 - 1) * poch2(2 * m + a12));
  const T d_br = (2 * NN + a123 + 3) / ((2 * n + 2 * m + a123 - 1) * (2 * n + 2 * m + a123 + 1));
  const T e = (m + a1 + 1) * (m + a12 + 1) * n * (n + a3) * (NN + m + n + a123 + 2) /
                  (poch2(2 * m + a12 + 1) * poch2(2 * n + 2 * m + a123 + 1)) +
              m * (m + a2) * (n + 1) * (n + a3 + 1) * (NN - m - n) /
                  (poch2(2 * m + a12) * poch2(2 * n + 2 * m + a123 + 2)) +
              m * (m + a2) * (n + 2 * m + a12 + 1) * (n + 2 * m + a123 + 1) * (NN + m + n + a123 + 2) /
                  (poch2(2 * m + a12) * poch2(2 * m + 2 * n + a123 + 1)) +
              (m + a1 + 1) * (m + a12 + 1) * (n + 2 * m + a12 + 2) * (n + 2 * m + a123 + 2) * (NN - m - n) /
                  (poch2(2 * m + a12 + 1) * poch2(2 * n + 2 * m + a123 + 2));
  return {a_sq, c_sq, b_sq, b_br, d_sq, d_br, e};
}

}  // namespace hahn::coef
