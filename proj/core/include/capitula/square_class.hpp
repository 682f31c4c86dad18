#pragma once

#include <string>
#include <vector>

#include "capitula/pell.hpp"

namespace capitula {

// For a norm +1 integral unit x + y*sqrt(d): the unique squarefree
// multipliers with x+1 = c_plus*s^2 and x-1 = c_minus*t^2. Uniqueness
// holds because gcd(x+1, x-1) divides 2, so c_plus*c_minus is d or 4d.
struct SquareClassPair {
  Integer c_plus;
  Integer c_minus;
  Integer s;
  Integer t;
};

// Throws std::invalid_argument for norm -1 or half-integral units
// (those have no such decomposition over Z).
SquareClassPair square_class_pair(const QuadraticUnit& u);

// Decomposition for half-integral norm +1 units (x odd, denom 2):
// x+2 = c*s^2 and x-2 = c'*t^2 with c*c' = d; the reported multipliers
// are 2c, 2c' so that "m*(x/2 +- 1) is a rational square" reads the same
// way as in the integral case.
SquareClassPair scaled_square_class_pair(const QuadraticUnit& u);

// True iff c*(x+1) or c*(x-1) is a perfect square. Requires a norm +1
// integral unit and squarefree c dividing 2d.
bool multiplier_is_square(const QuadraticUnit& u, const Integer& c);

// The seven possible unordered multiplier patterns of eps_{p1*p2*q}.
enum class DPattern { OneD, P1, TwoP1, P2, TwoP2, Q, TwoQ };

// The three possible patterns of eps_{p*q} for the subfield units
// (and, scaled, of eps_{p1*p2}): {1, pq}, {p, q}, {2p, 2q}.
enum class SubPattern { Unit, POdd, TwoP };

DPattern classify_d_pattern(const SquareClassPair& sc, const Integer& p1,
                            const Integer& p2, const Integer& q);
SubPattern classify_sub_pattern(const SquareClassPair& sc, const Integer& p,
                                const Integer& q);

const char* to_string(DPattern p);                      // e.g. "{p2,p1q}"
std::string sub_pattern_name(SubPattern s, const std::string& p_name,
                             const std::string& q_name);

// Validators for the unit lemmas driving the case analysis. Each
// enumerates all qualifying radicands below `bound` and returns the
// (expected empty) list of counterexamples.
enum class LemmaId { L2_2, L2_3, L2_4, L2_6 };

struct LemmaViolation {
  LemmaId lemma;
  Integer d;
  std::string detail;
};

std::vector<LemmaViolation> validate_lemma(LemmaId id, const Integer& bound);

}  // namespace capitula
