#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capitula/integer.hpp"

namespace capitula {

// Named verification campaigns behind `verify --property <id>`:
//   lemma2.2 lemma2.3 lemma2.4 lemma2.6  unit lemma validators
//   classifier    square-class totality for every triple with d < bound
//   fsu-cases     table coverage and unit-shape invariants, primes < bound
//   main-theorem  the three main-theorem assertions, primes < bound
//   app222        (2,2,2) specialization consistency, primes < bound
struct CampaignResult {
  std::string property;
  Integer bound;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;  // reported-but-expected observations
};

bool is_known_property(const std::string& property_id);

// Throws std::invalid_argument for an unknown property id.
CampaignResult run_campaign(const std::string& property_id,
                            const Integer& bound);

}  // namespace capitula
