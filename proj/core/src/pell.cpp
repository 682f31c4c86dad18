#include "capitula/pell.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace capitula {

namespace {
std::atomic<std::uint64_t> g_period_cap{1'000'000};
}

std::uint64_t period_cap() { return g_period_cap.load(); }

void set_period_cap(std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("period cap must be positive");
  g_period_cap.store(cap);
}

QuadraticUnit fundamental_unit(const Integer& d) {
  if (d <= 1 || !is_squarefree(d))
    throw std::invalid_argument("fundamental_unit: d must be squarefree and > 1");

  // Expand alpha_0 = (P0 + sqrt(D))/Q0 where D is the field discriminant.
  // Every state (P, Q) satisfies Q | D - P^2; the expansion enters a cycle
  // of reduced forms, and the matrix product over one cycle yields the
  // fundamental automorph, i.e. the fundamental unit of the maximal order.
  const bool one_mod4 = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
  const Integer D = one_mod4 ? d : 4 * d;
  const Integer u = isqrt(D);

  Integer P = one_mod4 ? 1 : 0;
  Integer Q = 2;

  struct Step {
    Integer p, q, a;
  };
  std::vector<Step> steps;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;

  const std::uint64_t cap = period_cap();
  std::size_t cycle_start = 0;
  while (true) {
    auto [it, fresh] = seen.try_emplace({P, Q}, steps.size());
    if (!fresh) {
      cycle_start = it->second;
      break;
    }
    Integer a = (P + u) / Q;
    steps.push_back({P, Q, a});
    P = a * Q - P;
    Q = (D - P * P) / Q;
    if (steps.size() > cap)
      throw std::runtime_error("fundamental_unit: period cap exceeded");
  }

  // (A B; C E) = product of (a_i 1; 1 0) over the cycle.
  Integer A = 1, B = 0, C = 0, E = 1;
  for (std::size_t i = cycle_start; i < steps.size(); ++i) {
    const Integer& a = steps[i].a;
    Integer nA = A * a + B;
    Integer nC = C * a + E;
    B = std::move(A);
    E = std::move(C);
    A = std::move(nA);
    C = std::move(nC);
  }

  // eps = C*alpha_j + E with alpha_j = (Pj + sqrt(D))/Qj.
  const Integer& Pj = steps[cycle_start].p;
  const Integer& Qj = steps[cycle_start].q;
  Integer xn = C * Pj + E * Qj;
  Integer yn = one_mod4 ? C : 2 * C;
  Integer den = Qj;

  Integer g;
  mpz_gcd(g.get_mpz_t(), xn.get_mpz_t(), yn.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  xn /= g;
  yn /= g;
  den /= g;
  if (den == 2 && mpz_even_p(xn.get_mpz_t()) && mpz_even_p(yn.get_mpz_t())) {
    xn /= 2;
    yn /= 2;
    den = 1;
  }
  if (den != 1 && den != 2)
    throw std::runtime_error("fundamental_unit: unexpected denominator");

  QuadraticUnit unit;
  unit.d = d;
  unit.x = std::move(xn);
  unit.y = std::move(yn);
  unit.denom = static_cast<int>(den.get_si());

  const std::size_t ell = steps.size() - cycle_start;
  unit.norm = (ell % 2 == 0) ? 1 : -1;
  Integer check = unit.x * unit.x - d * unit.y * unit.y;
  if (check != Integer(unit.norm) * unit.denom * unit.denom)
    throw std::runtime_error("fundamental_unit: norm identity failed");
  return unit;
}

int unit_norm(const QuadraticUnit& u) {
  Integer n = (u.x * u.x - u.d * u.y * u.y) / (u.denom * u.denom);
  if (n != 1 && n != -1)
    throw std::invalid_argument("unit_norm: not a unit");
  return static_cast<int>(n.get_si());
}

}  // namespace capitula
