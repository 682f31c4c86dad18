#include "capitula/square_class.hpp"

#include <stdexcept>

namespace capitula {

namespace {

// Splits M = c * s^2 with c squarefree, given that every prime occurring
// to an odd power in M lies in `basis`. The cofactor after stripping the
// basis primes must be a perfect square.
void split_square(const Integer& M, const std::vector<Integer>& basis,
                  Integer& c, Integer& s) {
  Integer m = M;
  c = 1;
  s = 1;
  for (const Integer& p : basis) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e & 1u) c *= p;
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
  }
  if (!is_square(m))
    throw std::domain_error("square_class_pair: cofactor is not a square");
  s *= isqrt(m);
}

std::vector<Integer> basis_of(const Integer& d) {
  std::vector<Integer> basis = prime_factors(d);
  if (basis.empty() || basis.front() != 2) basis.insert(basis.begin(), 2);
  return basis;
}

}  // namespace

SquareClassPair square_class_pair(const QuadraticUnit& u) {
  if (u.norm != 1)
    throw std::invalid_argument("square_class_pair: unit must have norm +1");
  if (u.denom != 1)
    throw std::invalid_argument("square_class_pair: unit must be integral");
  const std::vector<Integer> basis = basis_of(u.d);
  SquareClassPair sc;
  split_square(u.x + 1, basis, sc.c_plus, sc.s);
  split_square(u.x - 1, basis, sc.c_minus, sc.t);
  return sc;
}

SquareClassPair scaled_square_class_pair(const QuadraticUnit& u) {
  if (u.norm != 1 || u.denom != 2)
    throw std::invalid_argument(
        "scaled_square_class_pair: requires a half-integral norm +1 unit");
  const std::vector<Integer> basis = basis_of(u.d);
  SquareClassPair sc;
  split_square(u.x + 2, basis, sc.c_plus, sc.s);
  split_square(u.x - 2, basis, sc.c_minus, sc.t);
  sc.c_plus *= 2;
  sc.c_minus *= 2;
  return sc;
}

bool multiplier_is_square(const QuadraticUnit& u, const Integer& c) {
  if (c <= 0 || !is_squarefree(c) ||
      !mpz_divisible_p(Integer(2 * u.d).get_mpz_t(), c.get_mpz_t()))
    throw std::invalid_argument(
        "multiplier_is_square: c must be squarefree and divide 2d");
  SquareClassPair sc = square_class_pair(u);
  return c == sc.c_plus || c == sc.c_minus;
}

DPattern classify_d_pattern(const SquareClassPair& sc, const Integer& p1,
                            const Integer& p2, const Integer& q) {
  Integer a = sc.c_plus, b = sc.c_minus;
  const bool doubled = mpz_even_p(a.get_mpz_t());
  if (doubled != (mpz_even_p(b.get_mpz_t()) != 0))
    throw std::domain_error("classify_d_pattern: mixed parity multipliers");
  if (doubled) {
    a /= 2;
    b /= 2;
  }
  if (a == 1 || b == 1) {
    if (doubled)
      throw std::domain_error("classify_d_pattern: {2,2d} is excluded");
    return DPattern::OneD;
  }
  if (a == p1 || b == p1) return doubled ? DPattern::TwoP1 : DPattern::P1;
  if (a == p2 || b == p2) return doubled ? DPattern::TwoP2 : DPattern::P2;
  if (a == q || b == q) return doubled ? DPattern::TwoQ : DPattern::Q;
  throw std::domain_error("classify_d_pattern: unrecognized pattern");
}

SubPattern classify_sub_pattern(const SquareClassPair& sc, const Integer& p,
                                const Integer& q) {
  Integer a = sc.c_plus, b = sc.c_minus;
  if (a == 1 || b == 1) return SubPattern::Unit;
  if (a == p || b == p) {
    if (!(a == q || b == q))
      throw std::domain_error("classify_sub_pattern: unrecognized pattern");
    return SubPattern::POdd;
  }
  if (a == 2 * p || b == 2 * p) return SubPattern::TwoP;
  throw std::domain_error("classify_sub_pattern: unrecognized pattern");
}

const char* to_string(DPattern p) {
  switch (p) {
    case DPattern::OneD: return "{1,d}";
    case DPattern::P1: return "{p1,p2q}";
    case DPattern::TwoP1: return "{2p1,2p2q}";
    case DPattern::P2: return "{p2,p1q}";
    case DPattern::TwoP2: return "{2p2,2p1q}";
    case DPattern::Q: return "{q,p1p2}";
    case DPattern::TwoQ: return "{2q,2p1p2}";
  }
  return "?";
}

std::string sub_pattern_name(SubPattern s, const std::string& p_name,
                             const std::string& q_name) {
  switch (s) {
    case SubPattern::Unit: return "{1," + p_name + q_name + "}";
    case SubPattern::POdd: return "{" + p_name + "," + q_name + "}";
    case SubPattern::TwoP: return "{2" + p_name + ",2" + q_name + "}";
  }
  return "?";
}

namespace {

std::vector<bool> squarefree_sieve(unsigned long bound) {
  std::vector<bool> sf(bound, true);
  if (bound > 0) sf[0] = false;
  if (bound > 1) sf[1] = false;
  for (unsigned long p = 2; p * p < bound; ++p)
    for (unsigned long m = p * p; m < bound; m += p * p) sf[m] = false;
  return sf;
}

std::string unit_str(const QuadraticUnit& u) {
  std::string s = "(" + u.x.get_str() + "+" + u.y.get_str() + "*sqrt(" +
                  u.d.get_str() + "))";
  if (u.denom == 2) s += "/2";
  return s;
}

// Rational square test of m*(x/denom + sign), cleared of denominators.
bool multiplier_square_rational(const QuadraticUnit& u, const Integer& m,
                                int sign) {
  return is_square_rational(m * (u.x + sign * u.denom), Integer(u.denom));
}

}  // namespace

std::vector<LemmaViolation> validate_lemma(LemmaId id, const Integer& bound) {
  std::vector<LemmaViolation> out;
  if (bound < 3) return out;
  const unsigned long B = bound.get_ui();
  const std::vector<bool> sf = squarefree_sieve(B);

  auto add = [&](const Integer& d, const std::string& detail) {
    out.push_back({id, d, detail});
  };

  switch (id) {
    case LemmaId::L2_2:
      // N(eps_d) = +1 implies none of 2(x+-1), 2d(x+-1) is a square.
      for (unsigned long dv = 2; dv < B; ++dv) {
        if (!sf[dv]) continue;
        const Integer d(dv);
        QuadraticUnit u = fundamental_unit(d);
        if (u.norm != 1) continue;
        for (int sign : {1, -1}) {
          if (multiplier_square_rational(u, 2, sign))
            add(d, std::string("2(x") + (sign > 0 ? "+" : "-") +
                       "1) is a square for eps = " + unit_str(u));
          if (multiplier_square_rational(u, 2 * d, sign))
            add(d, std::string("2d(x") + (sign > 0 ? "+" : "-") +
                       "1) is a square for eps = " + unit_str(u));
        }
      }
      break;

    case LemmaId::L2_3:
      // Prime q = 3 (mod 4): x even and exactly one of x+-1 a square.
      for (unsigned long qv = 3; qv < B; qv += 4) {
        const Integer q(qv);
        if (!is_prime(q)) continue;
        QuadraticUnit u = fundamental_unit(q);
        if (u.denom != 1 || u.norm != 1) {
          add(q, "unexpected unit shape " + unit_str(u));
          continue;
        }
        if (mpz_odd_p(u.x.get_mpz_t())) add(q, "x odd for eps = " + unit_str(u));
        int squares = (is_square(u.x + 1) ? 1 : 0) + (is_square(u.x - 1) ? 1 : 0);
        if (squares != 1)
          add(q, "expected exactly one square among x+-1 for eps = " + unit_str(u));
      }
      break;

    case LemmaId::L2_4:
      // d = 2p with p an odd prime, N(eps) = +1: one of x+-1 a square.
      for (unsigned long pv = 3; 2 * pv < B; pv += 2) {
        if (!is_prime(Integer(pv))) continue;
        const Integer d(2 * pv);
        QuadraticUnit u = fundamental_unit(d);
        if (u.norm != 1) continue;
        if (!is_square(u.x + 1) && !is_square(u.x - 1))
          add(d, "x+-1 not squares for eps = " + unit_str(u));
      }
      break;

    case LemmaId::L2_6:
      // Squarefree d = 1 (mod 4), N(eps_d) = +1: x+-1 not squares, and
      // p(x+-1) not squares for every prime p | d.
      for (unsigned long dv = 5; dv < B; dv += 4) {
        if (!sf[dv]) continue;
        const Integer d(dv);
        QuadraticUnit u = fundamental_unit(d);
        if (u.norm != 1) continue;
        for (int sign : {1, -1}) {
          if (multiplier_square_rational(u, 1, sign))
            add(d, std::string("x") + (sign > 0 ? "+" : "-") +
                       "1 is a square for eps = " + unit_str(u));
          for (const Integer& p : prime_factors(d)) {
            if (multiplier_square_rational(u, p, sign))
              add(d, p.get_str() + "(x" + (sign > 0 ? "+" : "-") +
                         "1) is a square for eps = " + unit_str(u));
          }
        }
      }
      break;
  }
  return out;
}

}  // namespace capitula
