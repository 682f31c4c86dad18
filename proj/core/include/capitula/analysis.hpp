#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "capitula/app222.hpp"
#include "capitula/fsu.hpp"

namespace capitula {

// Memoizes fundamental units across triples; the subfield radicands
// repeat heavily during scans. Thread safe.
class UnitCache {
 public:
  QuadraticUnit get(const Integer& d);

 private:
  std::mutex mu_;
  std::map<Integer, QuadraticUnit> units_;
};

// Everything the pipeline derives for one triple. Pure function of the
// input, so identical inputs give identical reports.
struct TripleAnalysis {
  PrimeTriple triple;

  QuadraticUnit eps_d, eps_p2q, eps_p1q, eps_p1p2, eps_q;
  SquareClassPair scp_d, scp_p2q, scp_p1q;
  // Square class of eps_p1p2 for norm +1 (scaled when half-integral).
  std::optional<SquareClassPair> scp_p1p2;
  bool scp_p1p2_scaled = false;

  DPattern dpat = DPattern::OneD;
  SubPattern apat = SubPattern::Unit;   // eps_{p2 q}
  SubPattern apat2 = SubPattern::Unit;  // eps_{p1 q}

  FsuDescriptor fsu_field_k;
  FsuPair fsu1, fsu2, fsu3;

  RelationSet relations;
  GenusReport genus;

  std::array<CapitulationEntry, 3> kappa;
  std::optional<Pairing> pairing;

  WordList bound;
  MainTheoremVerdict main;

  TypeLabel label;
  std::optional<Kappa222> specialized;
  std::optional<bool> full_cap;

  std::vector<std::string> flags;
};

TripleAnalysis analyze_triple(const PrimeTriple& t, UnitCache* cache = nullptr);

// All valid (p1, p2, q) with p1 < p2 <= pmax and q <= qmax, sorted.
std::vector<PrimeTriple> enumerate_triples(const Integer& pmax,
                                           const Integer& qmax);

}  // namespace capitula
