#pragma once

#include <optional>
#include <string>

#include "capitula/capitulation.hpp"

namespace capitula {

enum class Family { None, I, II, III };

// Subcase labels as far as the square class of eps_{p2 q} pins them
// down; AorB marks the two labels that share the same condition.
enum class Subcase { A, B, C, AorB, Unknown };

struct TypeLabel {
  Family family = Family::None;
  Subcase subcase = Subcase::Unknown;
  bool cl222 = false;

  std::string str() const;  // "II(b)", "III(a|b)", "none"
};

// Cl_2(k) is of type (2,2,2) iff p1 or p2 is 5 mod 8 and at least two of
// the Legendre symbols (p1/p2), (p1/q), (p2/q) equal -1.
bool is_cl222(const PrimeTriple& t);

// Family from the pattern of eps_d (p1-type -> I, p2 -> II, q -> III),
// subcase from the pattern of eps_{p2 q}. Throws unless is_cl222.
TypeLabel classify_type(const PrimeTriple& t, DPattern dpat, SubPattern apat);
TypeLabel classify_type(const PrimeTriple& t, const SquareClassPair& scp_d,
                        const SquareClassPair& scp_a);

// Specialized kernels of the (2,2,2) case.
struct Kappa222 {
  WordList k1, k2, k3;
};

Kappa222 kappa_222(const TypeLabel& label, SubPattern apat, int norm_p1p2,
                   std::optional<Pairing> pairing);

// The generators of Cl_2(k) in the (2,2,2) case: <H1,H3,H4> for type I,
// <H1,H2,H3> for types II and III.
WordList cl2_generators(Family family);

// The span test behind full_capitulation_check, on precomputed parts.
bool full_capitulation_spans(const Kappa222& k, Family family,
                             const RelationSet& rel);

// True iff the three specialized kernels span all of Cl_2(k) modulo the
// relations and that span equals the strongly ambiguous classes.
bool full_capitulation_check(const PrimeTriple& t);

}  // namespace capitula
