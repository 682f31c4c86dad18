#pragma once

#include <gmpxx.h>

#include <vector>

namespace capitula {

// Exact arbitrary-precision integer. All arithmetic in the library is
// integral; there is no floating point anywhere.
using Integer = mpz_class;

// Deterministic primality test. Exact for every n below 3.3e24
// (fixed Miller-Rabin witness set); larger inputs fall back to trial
// division, which stays exact but slow. Never probabilistic.
bool is_prime(const Integer& n);

// floor(sqrt(n)). Throws std::invalid_argument for n < 0.
Integer isqrt(const Integer& n);

// True iff n is a perfect square (n >= 0).
bool is_square(const Integer& n);

// True iff num/den (den > 0) is the square of a rational.
bool is_square_rational(const Integer& num, const Integer& den);

// Jacobi symbol (a/n) for odd n >= 3; equals the Legendre symbol for
// prime n. Returns 0 when gcd(a, n) > 1. Throws for even or small n.
int jacobi(const Integer& a, const Integer& n);

// Exact squarefreeness test by trial division plus a square test on the
// remaining cofactor.
bool is_squarefree(const Integer& n);

// Distinct prime factors of n > 0 in increasing order, by trial division.
std::vector<Integer> prime_factors(const Integer& n);

}  // namespace capitula
