#pragma once

#include "capitula/class_words.hpp"
#include "capitula/integer.hpp"
#include "capitula/square_class.hpp"

namespace capitula {

// Validated input (p1, p2, q) with p1 = p2 = 1 (mod 4), q = 3 (mod 4),
// all prime and distinct, d = p1*p2*q, together with the Gaussian
// decompositions p1 = e^2 + 4f^2 and p2 = g^2 + 4h^2 (e, f, g, h > 0).
// The canonical Gaussian primes are pi1 = e + 2fi and pi3 = g + 2hi,
// with pi2, pi4 their conjugates.
struct PrimeTriple {
  Integer p1, p2, q, d;
  Integer e, f, g, h;
};

// Throws std::invalid_argument on any violated constraint.
PrimeTriple make_triple(const Integer& p1, const Integer& p2, const Integer& q);

// i is a norm in k/Q(i) iff p1 = p2 = 1 (mod 8).
bool i_is_norm(const PrimeTriple& t);

// Ambiguous-class data of k/Q(i). t = 5 ramified places always; the
// 2-rank is r = t - e - 1 with 2^e the norm-obstruction index of i.
// Generator sets come in the alternatives the case analysis leaves open;
// consumers quantify existentially over them.
struct GenusReport {
  int t = 5;
  int e_exp = 0;
  int r = 0;
  unsigned am_order = 0;
  unsigned ams_order = 0;
  bool i_norm = false;
  std::vector<WordList> ams_generators;
  std::vector<WordList> am_generators;
  // Set when no generator alternative attains ams_order in the quotient
  // by the relations, i.e. the relation model is inconsistent with the
  // rank; never expected for a valid triple.
  bool model_degenerate = false;
};

GenusReport genus_report(const PrimeTriple& t, DPattern pattern);
GenusReport genus_report(const PrimeTriple& t, const SquareClassPair& scp_d);

}  // namespace capitula
