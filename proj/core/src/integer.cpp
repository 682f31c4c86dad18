#include "capitula/integer.hpp"

#include <stdexcept>

namespace capitula {

namespace {

constexpr unsigned long kSmallPrimes[] = {2,  3,  5,  7,  11, 13,
                                          17, 19, 23, 29, 31, 37};

// Strong-pseudoprime test to base a for odd n > 2, n - 1 = m * 2^s.
bool strong_probable_prime(const Integer& n, const Integer& a,
                           const Integer& m, unsigned long s) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : kSmallPrimes) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
  }
  if (n < 41 * 41) return true;

  // The 12-witness set is a proven deterministic test below 3.317e24.
  static const Integer kWitnessBound("3317044064679887385961980");
  if (n < kWitnessBound) {
    Integer m = n - 1;
    unsigned long s = mpz_scan1(m.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), s);
    for (unsigned long p : kSmallPrimes) {
      if (!strong_probable_prime(n, Integer(p), m, s)) return false;
    }
    return true;
  }

  Integer f = 41;
  while (f * f <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) return false;
    f += 2;
  }
  return true;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square_rational(const Integer& num, const Integer& den) {
  if (den <= 0) throw std::invalid_argument("is_square_rational: den <= 0");
  if (num < 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return is_square(num / g) && is_square(den / g);
}

int jacobi(const Integer& a, const Integer& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("jacobi: modulus must be odd and >= 3");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

bool is_squarefree(const Integer& n) {
  if (n <= 0) return false;
  if (n <= 3) return true;
  Integer m = n;
  // After removing every prime p <= cbrt(n), the cofactor is 1, p, p^2
  // or p*q, so only a perfect-square cofactor can hide a square factor.
  Integer f = 2;
  while (f * f * f <= m) {
    if (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) {
      m /= f;
      if (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) return false;
    }
    f += (f == 2) ? 1 : 2;
  }
  return !is_square(m);
}

std::vector<Integer> prime_factors(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("prime_factors: n must be positive");
  std::vector<Integer> out;
  Integer m = n;
  Integer f = 2;
  while (f * f <= m) {
    if (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) {
      out.push_back(f);
      while (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) m /= f;
    }
    f += (f == 2) ? 1 : 2;
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace capitula
