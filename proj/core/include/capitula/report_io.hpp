#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "capitula/analysis.hpp"

namespace capitula {

// Machine-readable report; schema versioned, keys in fixed order, all
// big integers rendered in decimal strings. Byte-identical for
// identical inputs.
std::string to_json_string(const TripleAnalysis& a);

// Human-readable report; also deterministic.
std::string to_text(const TripleAnalysis& a);

std::string csv_header();
std::string csv_row(const TripleAnalysis& a);

struct ScanSummary {
  std::uint64_t triples = 0;
  std::uint64_t cl222 = 0;
  std::uint64_t flagged = 0;
  std::uint64_t main_failures = 0;
};

// Analyzes every triple with p1 < p2 <= pmax, q <= qmax (optionally only
// the (2,2,2) ones) and streams CSV rows in (p1, p2, q) order. Rows are
// computed concurrently; ordering and bytes do not depend on the number
// of jobs (0 = hardware concurrency).
ScanSummary scan_triples(const Integer& pmax, const Integer& qmax,
                         bool only_222, std::ostream& out, unsigned jobs = 0);

}  // namespace capitula
