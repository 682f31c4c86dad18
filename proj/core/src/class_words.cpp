#include "capitula/class_words.hpp"

#include <algorithm>
#include <stdexcept>

namespace capitula {

ClassWord ClassWord::H(int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("ClassWord::H: j in 1..4");
  return ClassWord(static_cast<std::uint8_t>(1u << (j - 1)));
}

ClassWord ClassWord::ideal_I() { return ClassWord(0x10); }

ClassWord ClassWord::Q_word() { return ClassWord(0x0f); }

std::string ClassWord::str() const {
  if (bits_ == 0) return "0";
  std::string s;
  for (unsigned j = 0; j < 4; ++j) {
    if (bits_ & (1u << j)) {
      if (!s.empty()) s += '+';
      s += 'H';
      s += static_cast<char>('1' + j);
    }
  }
  if (bits_ & 0x10) {
    if (!s.empty()) s += '+';
    s += 'I';
  }
  return s;
}

RelationSet relations_for(DPattern pattern) {
  RelationSet rel;
  rel.source = pattern;
  switch (pattern) {
    case DPattern::OneD:
      break;
    case DPattern::P1:
    case DPattern::TwoP1:
      rel.relations = {ClassWord::H(1) + ClassWord::H(2)};
      break;
    case DPattern::P2:
    case DPattern::TwoP2:
      rel.relations = {ClassWord::H(3) + ClassWord::H(4)};
      break;
    case DPattern::Q:
    case DPattern::TwoQ:
      rel.relations = {ClassWord::Q_word()};
      break;
  }
  return rel;
}

RelationSet relations_for(const SquareClassPair& scp, const Integer& p1,
                          const Integer& p2, const Integer& q) {
  return relations_for(classify_d_pattern(scp, p1, p2, q));
}

namespace {

unsigned rank(std::vector<std::uint8_t> rows) {
  unsigned r = 0;
  for (unsigned bit = 0; bit < ClassWord::kDim; ++bit) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << bit);
    auto pivot = std::find_if(rows.begin() + r, rows.end(),
                              [mask](std::uint8_t v) { return v & mask; });
    if (pivot == rows.end()) continue;
    std::swap(rows[r], *pivot);
    for (unsigned i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & mask)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

std::vector<std::uint8_t> collect(std::span<const ClassWord> words,
                                  const RelationSet& rel) {
  std::vector<std::uint8_t> rows;
  rows.reserve(words.size() + rel.relations.size());
  for (ClassWord w : words) rows.push_back(w.bits());
  for (ClassWord w : rel.relations) rows.push_back(w.bits());
  return rows;
}

}  // namespace

unsigned span_order(std::span<const ClassWord> words, const RelationSet& rel) {
  std::vector<std::uint8_t> rel_rows;
  for (ClassWord w : rel.relations) rel_rows.push_back(w.bits());
  return 1u << (rank(collect(words, rel)) - rank(rel_rows));
}

bool in_span(ClassWord w, std::span<const ClassWord> words,
             const RelationSet& rel) {
  std::vector<std::uint8_t> rows = collect(words, rel);
  const unsigned base = rank(rows);
  rows.push_back(w.bits());
  return rank(rows) == base;
}

bool span_equal(std::span<const ClassWord> a, std::span<const ClassWord> b,
                const RelationSet& rel) {
  return std::all_of(a.begin(), a.end(),
                     [&](ClassWord w) { return in_span(w, b, rel); }) &&
         std::all_of(b.begin(), b.end(),
                     [&](ClassWord w) { return in_span(w, a, rel); });
}

std::string words_str(const WordList& words) {
  if (words.empty()) return "-";
  WordList sorted = words;
  std::sort(sorted.begin(), sorted.end());
  std::string s;
  for (const ClassWord& w : sorted) {
    if (!s.empty()) s += ',';
    s += w.str();
  }
  return s;
}

}  // namespace capitula
