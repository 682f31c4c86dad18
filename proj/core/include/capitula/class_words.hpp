#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "capitula/square_class.hpp"

namespace capitula {

// GF(2) word over the ideal-class generators (H1, H2, H3, H4, I).
// Every generator has order 2, so subgroups are F2 subspaces. Q is not a
// basis element: [Q] = [H1 H2 H3 H4].
class ClassWord {
 public:
  static constexpr unsigned kDim = 5;

  constexpr ClassWord() = default;

  static ClassWord H(int j);     // j in 1..4
  static ClassWord ideal_I();
  static ClassWord Q_word();     // H1+H2+H3+H4

  friend ClassWord operator+(ClassWord a, ClassWord b) {
    return ClassWord(a.bits_ ^ b.bits_);
  }
  ClassWord& operator+=(ClassWord o) {
    bits_ ^= o.bits_;
    return *this;
  }

  bool is_zero() const { return bits_ == 0; }
  std::uint8_t bits() const { return bits_; }
  auto operator<=>(const ClassWord&) const = default;

  std::string str() const;  // "H1+H3", "I", "0"

 private:
  explicit constexpr ClassWord(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

using WordList = std::vector<ClassWord>;

// Relations among the H-classes implied by the square-class pattern of
// eps_{p1 p2 q}; the word for I never enters a relation.
struct RelationSet {
  WordList relations;
  DPattern source = DPattern::OneD;
};

RelationSet relations_for(DPattern pattern);
RelationSet relations_for(const SquareClassPair& scp, const Integer& p1,
                          const Integer& p2, const Integer& q);

// 2^rank of the image of `words` in F2^5 / <relations>.
unsigned span_order(std::span<const ClassWord> words, const RelationSet& rel);

// True iff w lies in the subspace generated by `words` and the relations.
bool in_span(ClassWord w, std::span<const ClassWord> words,
             const RelationSet& rel);

// Subgroup equality modulo the relations.
bool span_equal(std::span<const ClassWord> a, std::span<const ClassWord> b,
                const RelationSet& rel);

// Canonical serialization: generators sorted by bit pattern, e.g.
// "H1,H3+H4". Empty list renders as "-".
std::string words_str(const WordList& words);

}  // namespace capitula
