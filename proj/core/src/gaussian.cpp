#include "capitula/gaussian.hpp"

#include <stdexcept>

namespace capitula {

std::string GaussianInt::str() const {
  std::string s = re.get_str();
  if (im >= 0) s += "+";
  s += im.get_str() + "i";
  return s;
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b) {
  const Integer n = b.norm();
  if (n == 0) throw std::invalid_argument("exact_div: division by zero");
  Integer xr = a.re * b.re + a.im * b.im;
  Integer xi = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(xr.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(xi.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GaussianInt{xr / n, xi / n};
}

unsigned ord(const GaussianInt& pi, GaussianInt z) {
  if (z.re == 0 && z.im == 0) throw std::invalid_argument("ord: z = 0");
  unsigned count = 0;
  while (auto w = exact_div(z, pi)) {
    z = *w;
    ++count;
  }
  return count;
}

std::optional<GaussianInt> gaussian_sqrt(const GaussianInt& z) {
  // g = a+bi with a^2 - b^2 = re(z), 2ab = im(z); then with
  // n = |g|^2 = sqrt(N(z)): a^2 = (n + re)/2, b^2 = (n - re)/2.
  const Integer N = z.norm();
  if (!is_square(N)) return std::nullopt;
  const Integer n = isqrt(N);
  Integer a2 = n + z.re;
  Integer b2 = n - z.re;
  if (mpz_odd_p(a2.get_mpz_t()) || mpz_odd_p(b2.get_mpz_t())) return std::nullopt;
  a2 /= 2;
  b2 /= 2;
  if (!is_square(a2) || !is_square(b2)) return std::nullopt;
  Integer a = isqrt(a2);
  Integer b = isqrt(b2);
  // fix signs: want 2ab = im(z), preferring a > 0
  for (const auto& [sa, sb] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
    GaussianInt g{sa * a, sb * b};
    if ((g * g) == z) {
      if (g.re < 0 || (g.re == 0 && g.im < 0)) g = {-g.re, -g.im};
      return g;
    }
  }
  return std::nullopt;
}

GaussianInt canonical_prime_over(const Integer& p) {
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
    throw std::invalid_argument("canonical_prime_over: p must be 1 mod 4");
  for (Integer f = 1; 4 * f * f < p; ++f) {
    Integer e2 = p - 4 * f * f;
    if (is_square(e2)) return {isqrt(e2), 2 * f};
  }
  throw std::domain_error("canonical_prime_over: no decomposition found");
}

}  // namespace capitula
