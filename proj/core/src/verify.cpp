#include "capitula/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "capitula/analysis.hpp"
#include "capitula/fsu.hpp"

namespace capitula {

namespace {

std::string triple_str(const PrimeTriple& t) {
  return "(" + t.p1.get_str() + "," + t.p2.get_str() + "," + t.q.get_str() +
         ")";
}

CampaignResult lemma_campaign(const std::string& id, LemmaId lemma,
                              const Integer& bound) {
  CampaignResult res;
  res.property = id;
  res.bound = bound;
  for (const LemmaViolation& v : validate_lemma(lemma, bound))
    res.violations.push_back("d=" + v.d.get_str() + ": " + v.detail);
  return res;
}

// All valid triples with both orderings of (p1, p2); the statements are
// not symmetric in p1 and p2, so both directions get exercised.
std::vector<PrimeTriple> ordered_triples_below(const Integer& prime_bound) {
  std::vector<PrimeTriple> out;
  for (const PrimeTriple& t : enumerate_triples(prime_bound - 1, prime_bound - 1)) {
    out.push_back(t);
    out.push_back(make_triple(t.p2, t.p1, t.q));
  }
  return out;
}

CampaignResult classifier_campaign(const Integer& bound) {
  CampaignResult res;
  res.property = "classifier";
  res.bound = bound;
  std::vector<Integer> ps, qs;
  for (Integer p = 5; 15 * p < bound; p += 4)
    if (is_prime(p)) ps.push_back(p);
  for (Integer q = 3; 65 * q < bound; q += 4)
    if (is_prime(q)) qs.push_back(q);

  UnitCache cache;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i] * ps[j] * 3 >= bound) break;
      for (const Integer& q : qs) {
        const Integer d = ps[i] * ps[j] * q;
        if (d >= bound) break;
        ++res.checked;
        try {
          QuadraticUnit u = cache.get(d);
          SquareClassPair sc = square_class_pair(u);
          DPattern pat = classify_d_pattern(sc, ps[i], ps[j], q);
          const bool mod8_5 = mpz_fdiv_ui(ps[i].get_mpz_t(), 8) == 5 ||
                              mpz_fdiv_ui(ps[j].get_mpz_t(), 8) == 5;
          if (pat == DPattern::OneD && mod8_5)
            res.violations.push_back(
                "d=" + d.get_str() + ": pattern {1,d} despite p = 5 mod 8");
          if (sc.c_plus * sc.c_minus != d && sc.c_plus * sc.c_minus != 4 * d)
            res.violations.push_back("d=" + d.get_str() +
                                     ": c_plus*c_minus not in {d,4d}");
        } catch (const std::exception& e) {
          res.violations.push_back("d=" + d.get_str() + ": " + e.what());
        }
      }
    }
  }
  return res;
}

CampaignResult fsu_campaign(const Integer& bound) {
  CampaignResult res;
  res.property = "fsu-cases";
  res.bound = bound;
  for (const std::string& diff : k2_table_transcription_diff())
    res.violations.push_back("K2 table transcription: " + diff);

  // 2*eps_q square in Q(sqrt q), i.e. one of x +- 1 a perfect square.
  for (Integer q = 3; q < bound; q += 4) {
    if (!is_prime(q)) continue;
    ++res.checked;
    QuadraticUnit u = fundamental_unit(q);
    if (mpz_odd_p(u.x.get_mpz_t()) ||
        (is_square(u.x + 1) == is_square(u.x - 1)))
      res.violations.push_back("q=" + q.get_str() + ": eps_q shape unexpected");
  }

  UnitCache cache;
  for (const PrimeTriple& t : ordered_triples_below(bound)) {
    ++res.checked;
    try {
      TripleAnalysis a = analyze_triple(t, &cache);
      for (const FsuDescriptor* f :
           {&a.fsu1.cm, &a.fsu2.cm, &a.fsu3.cm}) {
        if (f->case_id < 1 ||
            (f->field != FieldId::K3 && f->case_id > 7) ||
            (f->field == FieldId::K3 && f->case_id > 4))
          res.violations.push_back(triple_str(t) + ": case id out of range");
        if (!f->hasse_q || (*f->hasse_q != 1 && *f->hasse_q != 2))
          res.violations.push_back(triple_str(t) + ": bad Hasse index");
      }
      if (a.fsu3.cm.hasse_q != 2)
        res.violations.push_back(triple_str(t) + ": Q_K3 must be 2");
      for (const std::string& f : a.flags) {
        if (f == "eps-p1p2-square-class-unexpected" ||
            f == "eps-q-shape-unexpected")
          res.violations.push_back(triple_str(t) + ": " + f);
      }
    } catch (const std::exception& e) {
      res.violations.push_back(triple_str(t) + ": " + e.what());
    }
  }
  return res;
}

CampaignResult main_theorem_campaign(const Integer& bound) {
  CampaignResult res;
  res.property = "main-theorem";
  res.bound = bound;
  UnitCache cache;
  for (const PrimeTriple& t : ordered_triples_below(bound)) {
    ++res.checked;
    try {
      TripleAnalysis a = analyze_triple(t, &cache);
      if (!a.main.sizes_in_range)
        res.violations.push_back(triple_str(t) + ": kernel size not in {2,4,8}");
      if (!a.main.kernels_in_ams)
        res.violations.push_back(triple_str(t) + ": kappa not inside Am_s");
      if (!a.main.ams_in_genus_bound)
        res.violations.push_back(triple_str(t) +
                                 ": Am_s not inside genus kernel bound");
      if (!a.main.genus_bound_matches_union)
        res.violations.push_back(triple_str(t) +
                                 ": genus bound != span of kernel union");
      if (a.genus.model_degenerate)
        res.violations.push_back(triple_str(t) + ": degenerate relation model");
    } catch (const std::exception& e) {
      res.violations.push_back(triple_str(t) + ": " + e.what());
    }
  }
  return res;
}

CampaignResult app222_campaign(const Integer& bound) {
  CampaignResult res;
  res.property = "app222";
  res.bound = bound;
  UnitCache cache;
  for (const PrimeTriple& t : ordered_triples_below(bound)) {
    if (!is_cl222(t)) continue;
    ++res.checked;
    try {
      TripleAnalysis a = analyze_triple(t, &cache);
      if (!a.full_cap.value_or(false))
        res.violations.push_back(triple_str(t) + ": full capitulation fails");
      if (a.genus.r != 3 || a.genus.am_order != 8 || a.genus.ams_order != 8)
        res.violations.push_back(triple_str(t) + ": genus data not (r,am,ams)=(3,8,8)");

      // Size must match the span of the specialized kernel.
      const std::array<const WordList*, 3> spec = {
          &a.specialized->k1, &a.specialized->k2, &a.specialized->k3};
      for (int j = 1; j <= 3; ++j) {
        if (span_order(*spec[j - 1], a.relations) != a.kappa[j - 1].size())
          res.violations.push_back(triple_str(t) + ": K" + std::to_string(j) +
                                   " size != specialized kernel span");
      }

      // Specialized kernels must agree with the general ones; any
      // disagreement must stay in the flagged K2 branch and be reported.
      for (const std::string& f : a.flags) {
        if (f == "K1-kernels-56-mismatch" || f == "K3-kernels-56-mismatch")
          res.violations.push_back(triple_str(t) + ": " + f);
        else if (f == "K2-kernels-56-mismatch")
          res.notes.push_back(triple_str(t) + ": " + f);
      }
    } catch (const std::exception& e) {
      res.violations.push_back(triple_str(t) + ": " + e.what());
    }
  }
  return res;
}

}  // namespace

bool is_known_property(const std::string& id) {
  static const char* kIds[] = {"lemma2.2", "lemma2.3",  "lemma2.4",
                               "lemma2.6", "classifier", "fsu-cases",
                               "main-theorem", "app222"};
  return std::find(std::begin(kIds), std::end(kIds), id) != std::end(kIds);
}

CampaignResult run_campaign(const std::string& id, const Integer& bound) {
  if (id == "lemma2.2") return lemma_campaign(id, LemmaId::L2_2, bound);
  if (id == "lemma2.3") return lemma_campaign(id, LemmaId::L2_3, bound);
  if (id == "lemma2.4") return lemma_campaign(id, LemmaId::L2_4, bound);
  if (id == "lemma2.6") return lemma_campaign(id, LemmaId::L2_6, bound);
  if (id == "classifier") return classifier_campaign(bound);
  if (id == "fsu-cases") return fsu_campaign(bound);
  if (id == "main-theorem") return main_theorem_campaign(bound);
  if (id == "app222") return app222_campaign(bound);
  throw std::invalid_argument("run_campaign: unknown property '" + id + "'");
}

}  // namespace capitula
