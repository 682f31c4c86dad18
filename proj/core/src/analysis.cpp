#include "capitula/analysis.hpp"

#include <string>

namespace capitula {

QuadraticUnit UnitCache::get(const Integer& d) {
  {
    std::lock_guard lock(mu_);
    auto it = units_.find(d);
    if (it != units_.end()) return it->second;
  }
  QuadraticUnit u = fundamental_unit(d);
  std::lock_guard lock(mu_);
  return units_.try_emplace(d, std::move(u)).first->second;
}

namespace {

QuadraticUnit get_unit(UnitCache* cache, const Integer& d) {
  return cache ? cache->get(d) : fundamental_unit(d);
}

void flag_size_divergence(TripleAnalysis& a, int j) {
  const SizeReadings& r = a.kappa[j - 1].readings;
  if (r.table_verbatim == r.derived && r.table_mirrored == r.derived) return;
  std::string f = "K" + std::to_string(j) + "-size-table-diverges:verbatim=" +
                  std::to_string(r.table_verbatim);
  if (j == 2) f += ",mirrored=" + std::to_string(r.table_mirrored);
  f += ",derived=" + std::to_string(r.derived);
  a.flags.push_back(std::move(f));
}

}  // namespace

TripleAnalysis analyze_triple(const PrimeTriple& t, UnitCache* cache) {
  TripleAnalysis a;
  a.triple = t;

  a.eps_d = get_unit(cache, t.d);
  a.eps_p2q = get_unit(cache, t.p2 * t.q);
  a.eps_p1q = get_unit(cache, t.p1 * t.q);
  a.eps_p1p2 = get_unit(cache, t.p1 * t.p2);
  a.eps_q = get_unit(cache, t.q);

  a.scp_d = square_class_pair(a.eps_d);
  a.scp_p2q = square_class_pair(a.eps_p2q);
  a.scp_p1q = square_class_pair(a.eps_p1q);

  a.dpat = classify_d_pattern(a.scp_d, t.p1, t.p2, t.q);
  a.apat = classify_sub_pattern(a.scp_p2q, t.p2, t.q);
  a.apat2 = classify_sub_pattern(a.scp_p1q, t.p1, t.q);

  if (a.eps_p1p2.norm == 1) {
    a.scp_p1p2_scaled = a.eps_p1p2.denom == 2;
    a.scp_p1p2 = a.scp_p1p2_scaled ? scaled_square_class_pair(a.eps_p1p2)
                                   : square_class_pair(a.eps_p1p2);
    if (classify_sub_pattern(*a.scp_p1p2, t.p1, t.p2) != SubPattern::TwoP)
      a.flags.push_back("eps-p1p2-square-class-unexpected");
  } else {
    a.pairing = resolve_K3_pairing(a.eps_p1p2, t);
  }

  if (mpz_odd_p(a.eps_q.x.get_mpz_t()) ||
      (is_square(a.eps_q.x + 1) == is_square(a.eps_q.x - 1)))
    a.flags.push_back("eps-q-shape-unexpected");

  a.fsu_field_k = fsu_k(a.dpat, a.eps_d.norm);
  a.fsu1 = fsu_K1(a.dpat, a.apat);
  a.fsu2 = fsu_K2(a.dpat, a.apat2);
  a.fsu3 = fsu_K3(a.dpat, a.eps_p1p2.norm);

  a.relations = relations_for(a.dpat);
  a.genus = genus_report(t, a.dpat);
  if (a.genus.model_degenerate) a.flags.push_back("genus-model-degenerate");

  a.kappa[0] = {kappa_size_readings(1, a.dpat, a.apat), kappa_K1(a.dpat, a.apat)};
  a.kappa[1] = {kappa_size_readings(2, a.dpat, a.apat2),
                kappa_K2(a.dpat, a.apat2)};
  a.kappa[2] = {kappa_size_readings_K3(a.eps_p1p2.norm, a.dpat),
                kappa_K3(a.dpat, a.eps_p1p2.norm, a.pairing)};
  for (int j = 1; j <= 3; ++j) flag_size_divergence(a, j);

  a.bound = genus_kernel_bound(a.dpat);
  a.main = evaluate_main_theorem(a.genus, a.kappa, a.bound, a.relations);
  if (!a.main.genus_bound_matches_union)
    a.flags.push_back("genus-bound-union-mismatch");

  if (is_cl222(t)) {
    a.label = classify_type(t, a.dpat, a.apat);
    a.specialized =
        kappa_222(a.label, a.apat, a.eps_p1p2.norm, a.pairing);
    a.full_cap = full_capitulation_spans(*a.specialized, a.label.family,
                                         a.relations);
    // Cross-check of the specialized kernels against the general ones.
    const std::array<const WordList*, 3> spec = {
        &a.specialized->k1, &a.specialized->k2, &a.specialized->k3};
    for (int j = 1; j <= 3; ++j) {
      bool match = false;
      for (const WordList& alt : a.kappa[j - 1].kernels)
        if (span_equal(*spec[j - 1], alt, a.relations)) match = true;
      if (!match)
        a.flags.push_back("K" + std::to_string(j) + "-kernels-56-mismatch");
    }
  }
  return a;
}

std::vector<PrimeTriple> enumerate_triples(const Integer& pmax,
                                           const Integer& qmax) {
  std::vector<Integer> ps, qs;
  for (Integer p = 5; p <= pmax; p += 4)
    if (is_prime(p)) ps.push_back(p);
  for (Integer q = 3; q <= qmax; q += 4)
    if (is_prime(q)) qs.push_back(q);

  std::vector<PrimeTriple> out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      for (const Integer& q : qs) out.push_back(make_triple(ps[i], ps[j], q));
  return out;
}

}  // namespace capitula
