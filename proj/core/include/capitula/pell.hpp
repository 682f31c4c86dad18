#pragma once

#include <cstdint>

#include "capitula/integer.hpp"

namespace capitula {

// Fundamental unit (x + y*sqrt(d))/denom of the maximal order of
// Q(sqrt(d)). denom = 2 can only occur for d = 1 (mod 4), and then
// x, y are both odd. Invariant: x^2 - d*y^2 = denom^2 * norm.
struct QuadraticUnit {
  Integer d;
  Integer x;
  Integer y;
  int denom = 1;  // 1 or 2
  int norm = 1;   // +1 or -1
};

// Safety cap on continued-fraction steps; exceeding it raises
// std::runtime_error instead of looping.
std::uint64_t period_cap();
void set_period_cap(std::uint64_t cap);

// Computes the fundamental unit via the continued-fraction expansion of
// sqrt(d) (resp. (1+sqrt(d))/2 for d = 1 mod 4), exact integers only.
// Throws std::invalid_argument unless d > 1 is squarefree.
QuadraticUnit fundamental_unit(const Integer& d);

// (x^2 - d*y^2) / denom^2; always +1 or -1 for a valid unit.
int unit_norm(const QuadraticUnit& u);

}  // namespace capitula
