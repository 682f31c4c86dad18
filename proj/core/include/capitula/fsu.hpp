#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capitula/genus.hpp"
#include "capitula/square_class.hpp"

namespace capitula {

// Symbolic base units; D stands for eps_{p1 p2 q}.
enum class BaseUnit { P1, P2, Q, P2Q, P1Q, P1P2, D };

// A fundamental-system member: an optional i coefficient under an
// optional square root over a product of base units. The radicals are
// exactly the ones whose existence the square-class analysis certifies;
// nothing here is evaluated numerically.
struct UnitExpr {
  bool i_coeff = false;
  std::vector<BaseUnit> bases;
  bool sqrt = false;

  std::string str() const;
  auto operator<=>(const UnitExpr&) const = default;
};

enum class FieldId { k, K1, K2, K3, K1plus, K2plus, K3plus };

struct FsuDescriptor {
  FieldId field = FieldId::k;
  std::vector<UnitExpr> units;
  std::optional<int> hasse_q;  // CM fields only
  int case_id = 0;             // matched case of the decision table
  char subcase = 0;            // 'i' / 'ii' where the table splits
};

// Real subfield system plus CM-field system of the same extension.
struct FsuPair {
  FsuDescriptor plus;
  FsuDescriptor cm;
};

const char* to_string(FieldId f);

// Unit group of k itself: {sqrt(i*eps_d)} exactly for pattern {1,d}.
FsuDescriptor fsu_k(DPattern pattern, int norm_d = 1);

// Decision tables for the three unramified quadratic extensions.
// K2 is generated from the K1 table by the p1 <-> p2 substitution.
FsuPair fsu_K1(DPattern dpat, SubPattern apat);
FsuPair fsu_K2(DPattern dpat, SubPattern apat2);
FsuPair fsu_K3(DPattern dpat, int norm_p1p2);

// Convenience overloads classifying the square-class pairs first.
FsuPair fsu_K1(const PrimeTriple& t, const SquareClassPair& scp_d,
               const SquareClassPair& scp_a);
FsuPair fsu_K2(const PrimeTriple& t, const SquareClassPair& scp_d,
               const SquareClassPair& scp_a2);
FsuPair fsu_K3(const PrimeTriple& t, const SquareClassPair& scp_d,
               const QuadraticUnit& eps_p1p2);

// Cell-by-cell diff of the mirrored K1 table against the directly
// tabulated K2 reference; expected empty. Kept as a standing check
// against transcription slips in either table.
std::vector<std::string> k2_table_transcription_diff();

}  // namespace capitula
