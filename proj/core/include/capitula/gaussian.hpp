#pragma once

#include <optional>
#include <string>

#include "capitula/integer.hpp"

namespace capitula {

// Exact arithmetic in Z[i], just enough for the capitulation witnesses:
// multiplication, exact division, prime orders and perfect squares.
struct GaussianInt {
  Integer re;
  Integer im;

  GaussianInt() = default;
  GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  GaussianInt conj() const { return {re, -im}; }
  Integer norm() const { return re * re + im * im; }
  bool operator==(const GaussianInt&) const = default;
  std::string str() const;
};

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

// b | a exactly: returns a/b, or nullopt. b must be nonzero.
std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b);

// Multiplicity of the Gaussian prime pi in z (z nonzero).
unsigned ord(const GaussianInt& pi, GaussianInt z);

// If z = g^2 for some g in Z[i], returns g (normalized: re > 0, or
// re == 0 and im >= 0).
std::optional<GaussianInt> gaussian_sqrt(const GaussianInt& z);

// The canonical Gaussian prime e + 2fi (e, f > 0) over a prime
// p = e^2 + 4f^2 = 1 (mod 4).
GaussianInt canonical_prime_over(const Integer& p);

}  // namespace capitula
