#include "hahn/combinat.hpp"

#include <numeric>
#include <stdexcept>

namespace hahn {

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length");
  Rational r = 1;
  for (int j = 0; j < n; ++j) {
    r *= a + j;
    if (sgn(r) == 0) break;
  }
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational power(const Rational& a, long e) {
  if (e < 0) return 1 / power(a, -e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational multinomial(int N, const std::vector<int>& parts) {
  long total = std::accumulate(parts.begin(), parts.end(), 0L);
  if (N < 0 || total > N) throw std::domain_error("multinomial: parts exceed N");
  Integer den = factorial(N - static_cast<int>(total));
  for (int p : parts) {
    if (p < 0) throw std::domain_error("multinomial: negative part");
    den *= factorial(p);
  }
  Rational r(factorial(N), den);
  r.canonicalize();
  return r;
}

}  // namespace hahn
