#include "capitula/report_io.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace capitula {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json unit_json(const QuadraticUnit& u) {
  return ordered_json{{"x", u.x.get_str()},
                      {"y", u.y.get_str()},
                      {"denom", u.denom},
                      {"norm", u.norm}};
}

ordered_json scp_json(const SquareClassPair& sc, const std::string& pattern) {
  return ordered_json{{"c_plus", sc.c_plus.get_str()},
                      {"c_minus", sc.c_minus.get_str()},
                      {"s", sc.s.get_str()},
                      {"t", sc.t.get_str()},
                      {"pattern", pattern}};
}

ordered_json fsu_json(const FsuDescriptor& f) {
  ordered_json units = ordered_json::array();
  for (const UnitExpr& e : f.units) units.push_back(e.str());
  ordered_json out{{"units", std::move(units)}};
  if (f.hasse_q) out["Q"] = *f.hasse_q;
  out["case"] = f.case_id;
  if (f.subcase) out["subcase"] = f.subcase == 'I' ? "ii" : "i";
  return out;
}

ordered_json words_json(const WordList& words) {
  WordList sorted = words;
  std::sort(sorted.begin(), sorted.end());
  ordered_json out = ordered_json::array();
  for (const ClassWord& w : sorted) out.push_back(w.str());
  return out;
}

ordered_json alternatives_json(const std::vector<WordList>& alts) {
  ordered_json out = ordered_json::array();
  for (const WordList& alt : alts) out.push_back(words_json(alt));
  return out;
}

ordered_json kappa_json(const CapitulationEntry& e) {
  return ordered_json{
      {"size", e.size()},
      {"size_table",
       {{"verbatim", e.readings.table_verbatim},
        {"mirrored", e.readings.table_mirrored}}},
      {"kernels", alternatives_json(e.kernels)}};
}

const char* pairing_str(Pairing p) {
  return p == Pairing::P13 ? "pi1*pi3" : "pi1*pi4";
}

const char* family_str(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    default: return "none";
  }
}

std::string subcase_str(Subcase s) {
  switch (s) {
    case Subcase::A: return "a";
    case Subcase::B: return "b";
    case Subcase::C: return "c";
    case Subcase::AorB: return "a|b";
    default: return "unknown";
  }
}

std::string sub_name(SubPattern s, const char* p, const char* q) {
  return sub_pattern_name(s, p, q);
}

}  // namespace

std::string to_json_string(const TripleAnalysis& a) {
  const PrimeTriple& t = a.triple;
  ordered_json j;
  j["schema"] = 1;
  j["triple"] = {{"p1", t.p1.get_str()},
                 {"p2", t.p2.get_str()},
                 {"q", t.q.get_str()},
                 {"d", t.d.get_str()},
                 {"gaussian",
                  {{"e", t.e.get_str()},
                   {"f", t.f.get_str()},
                   {"g", t.g.get_str()},
                   {"h", t.h.get_str()}}}};
  j["units"] = {{"d", unit_json(a.eps_d)},
                {"p2q", unit_json(a.eps_p2q)},
                {"p1q", unit_json(a.eps_p1q)},
                {"p1p2", unit_json(a.eps_p1p2)},
                {"q", unit_json(a.eps_q)}};

  ordered_json sc;
  sc["d"] = scp_json(a.scp_d, to_string(a.dpat));
  sc["p2q"] = scp_json(a.scp_p2q, sub_name(a.apat, "p2", "q"));
  sc["p1q"] = scp_json(a.scp_p1q, sub_name(a.apat2, "p1", "q"));
  if (a.scp_p1p2) {
    sc["p1p2"] = scp_json(*a.scp_p1p2, "{2p1,2p2}");
    sc["p1p2"]["scaled"] = a.scp_p1p2_scaled;
  } else {
    sc["p1p2"] = nullptr;
  }
  j["square_classes"] = std::move(sc);

  j["fsu"] = {{"k", fsu_json(a.fsu_field_k)},   {"K1+", fsu_json(a.fsu1.plus)},
              {"K1", fsu_json(a.fsu1.cm)},      {"K2+", fsu_json(a.fsu2.plus)},
              {"K2", fsu_json(a.fsu2.cm)},      {"K3+", fsu_json(a.fsu3.plus)},
              {"K3", fsu_json(a.fsu3.cm)}};

  j["relations"] = words_json(a.relations.relations);
  j["genus"] = {{"t", a.genus.t},
                {"e", a.genus.e_exp},
                {"r", a.genus.r},
                {"i_is_norm", a.genus.i_norm},
                {"am", a.genus.am_order},
                {"ams", a.genus.ams_order},
                {"ams_generators", alternatives_json(a.genus.ams_generators)},
                {"am_generators", alternatives_json(a.genus.am_generators)},
                {"model_degenerate", a.genus.model_degenerate}};

  ordered_json cap;
  cap["K1"] = kappa_json(a.kappa[0]);
  cap["K2"] = kappa_json(a.kappa[1]);
  cap["K3"] = kappa_json(a.kappa[2]);
  cap["K3"]["pairing"] =
      a.pairing ? ordered_json(pairing_str(*a.pairing)) : ordered_json(nullptr);
  j["capitulation"] = std::move(cap);

  j["genus_kernel_bound"] = {
      {"generators", words_json(a.bound)},
      {"matches_kernel_union", a.main.genus_bound_matches_union}};
  j["main_theorem"] = {{"sizes_in_range", a.main.sizes_in_range},
                       {"kernels_in_ams", a.main.kernels_in_ams},
                       {"ams_in_genus_bound", a.main.ams_in_genus_bound},
                       {"pass", a.main.pass}};

  ordered_json app;
  app["cl222"] = a.label.cl222;
  app["type"] = a.label.str();
  if (a.specialized) {
    app["family"] = family_str(a.label.family);
    app["subcase"] = subcase_str(a.label.subcase);
    app["kernels"] = {{"K1", words_json(a.specialized->k1)},
                      {"K2", words_json(a.specialized->k2)},
                      {"K3", words_json(a.specialized->k3)}};
    app["full_capitulation_check"] = *a.full_cap;
  }
  j["app222"] = std::move(app);

  ordered_json flags = ordered_json::array();
  for (const std::string& f : a.flags) flags.push_back(f);
  j["flags"] = std::move(flags);

  return j.dump(2) + "\n";
}

namespace {

std::string unit_text(const QuadraticUnit& u) {
  std::string s = "(" + u.x.get_str() + " + " + u.y.get_str() + "*sqrt(" +
                  u.d.get_str() + "))";
  if (u.denom == 2) s += "/2";
  s += ", norm ";
  s += u.norm > 0 ? "+1" : "-1";
  return s;
}

std::string units_line(const FsuDescriptor& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.units.size(); ++i) {
    if (i) s += ", ";
    s += f.units[i].str();
  }
  s += "}";
  if (f.hasse_q) s += " Q=" + std::to_string(*f.hasse_q);
  if (f.case_id) {
    s += " [case " + std::to_string(f.case_id);
    if (f.subcase) s += f.subcase == 'I' ? ".ii" : ".i";
    s += "]";
  }
  return s;
}

std::string gens_text(const std::vector<WordList>& alts) {
  std::string s;
  for (std::size_t i = 0; i < alts.size(); ++i) {
    if (i) s += " or ";
    s += "<" + words_str(alts[i]) + ">";
  }
  return s;
}

std::string join_flags(const std::vector<std::string>& flags) {
  if (flags.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) s += ";";
    s += flags[i];
  }
  return s;
}

}  // namespace

std::string to_text(const TripleAnalysis& a) {
  const PrimeTriple& t = a.triple;
  std::ostringstream o;
  o << "triple: p1=" << t.p1 << " p2=" << t.p2 << " q=" << t.q
    << " d=" << t.d << "\n";
  o << "gaussian: pi1 = " << t.e << "+" << 2 * t.f << "i, pi3 = " << t.g
    << "+" << 2 * t.h << "i\n";
  o << "units:\n";
  o << "  eps_d    = " << unit_text(a.eps_d) << "\n";
  o << "  eps_p2q  = " << unit_text(a.eps_p2q) << "\n";
  o << "  eps_p1q  = " << unit_text(a.eps_p1q) << "\n";
  o << "  eps_p1p2 = " << unit_text(a.eps_p1p2) << "\n";
  o << "  eps_q    = " << unit_text(a.eps_q) << "\n";
  o << "square classes:\n";
  o << "  eps_d:    c+ = " << a.scp_d.c_plus << ", c- = " << a.scp_d.c_minus
    << ", pattern " << to_string(a.dpat) << "\n";
  o << "  eps_p2q:  c+ = " << a.scp_p2q.c_plus
    << ", c- = " << a.scp_p2q.c_minus << ", pattern "
    << sub_pattern_name(a.apat, "p2", "q") << "\n";
  o << "  eps_p1q:  c+ = " << a.scp_p1q.c_plus
    << ", c- = " << a.scp_p1q.c_minus << ", pattern "
    << sub_pattern_name(a.apat2, "p1", "q") << "\n";
  if (a.scp_p1p2)
    o << "  eps_p1p2: c+ = " << a.scp_p1p2->c_plus
      << ", c- = " << a.scp_p1p2->c_minus << ", pattern {2p1,2p2}"
      << (a.scp_p1p2_scaled ? " (scaled)" : "") << "\n";
  o << "fsu:\n";
  o << "  k:   " << units_line(a.fsu_field_k) << "\n";
  o << "  K1+: " << units_line(a.fsu1.plus) << "\n";
  o << "  K1:  " << units_line(a.fsu1.cm) << "\n";
  o << "  K2+: " << units_line(a.fsu2.plus) << "\n";
  o << "  K2:  " << units_line(a.fsu2.cm) << "\n";
  o << "  K3+: " << units_line(a.fsu3.plus) << "\n";
  o << "  K3:  " << units_line(a.fsu3.cm) << "\n";
  o << "relations: " << words_str(a.relations.relations) << "\n";
  o << "genus: t=" << a.genus.t << " e=" << a.genus.e_exp
    << " r=" << a.genus.r << " |Am|=" << a.genus.am_order
    << " |Am_s|=" << a.genus.ams_order << " i_is_norm="
    << (a.genus.i_norm ? "true" : "false") << "\n";
  o << "  Am_s = " << gens_text(a.genus.ams_generators) << "\n";
  o << "  Am   = " << gens_text(a.genus.am_generators) << "\n";
  o << "capitulation:\n";
  for (int j = 0; j < 3; ++j) {
    o << "  K" << j + 1 << ": |kappa| = " << a.kappa[j].size() << ", kernel "
      << gens_text(a.kappa[j].kernels);
    if (j == 2 && a.pairing) o << " (pairing " << pairing_str(*a.pairing) << ")";
    o << "\n";
  }
  o << "genus field bound: <" << words_str(a.bound) << ">"
    << (a.main.genus_bound_matches_union ? " = " : " != ")
    << "span of kernel union\n";
  o << "main theorem: " << (a.main.pass ? "PASS" : "FAIL")
    << " (sizes=" << (a.main.sizes_in_range ? "ok" : "FAIL")
    << ", kappa<=Am_s=" << (a.main.kernels_in_ams ? "ok" : "FAIL")
    << ", Am_s<=genus-kernel=" << (a.main.ams_in_genus_bound ? "ok" : "FAIL")
    << ")\n";
  o << "type: " << a.label.str();
  if (a.specialized) {
    o << "\n  kernels(2,2,2): K1 <" << words_str(a.specialized->k1) << ">, K2 <"
      << words_str(a.specialized->k2) << ">, K3 <"
      << words_str(a.specialized->k3) << ">";
    o << "\n  full capitulation: " << (*a.full_cap ? "true" : "false");
  }
  o << "\nflags: " << join_flags(a.flags) << "\n";
  return o.str();
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string csv_header() {
  return "p1,p2,q,d,x,y,pattern,QK1,QK2,QK3,r,am,ams,size1,size2,size3,"
         "kernel1,kernel2,kernel3,type,cl222,main_ok,full_cap,flags";
}

std::string csv_row(const TripleAnalysis& a) {
  std::ostringstream o;
  o << a.triple.p1 << ',' << a.triple.p2 << ',' << a.triple.q << ','
    << a.triple.d << ',' << a.eps_d.x << ',' << a.eps_d.y << ','
    << csv_escape(to_string(a.dpat)) << ',' << *a.fsu1.cm.hasse_q << ','
    << *a.fsu2.cm.hasse_q << ',' << *a.fsu3.cm.hasse_q << ',' << a.genus.r
    << ',' << a.genus.am_order << ',' << a.genus.ams_order << ','
    << a.kappa[0].size() << ',' << a.kappa[1].size() << ','
    << a.kappa[2].size() << ','
    << csv_escape(words_str(a.kappa[0].kernels.front())) << ','
    << csv_escape(words_str(a.kappa[1].kernels.front())) << ','
    << csv_escape(words_str(a.kappa[2].kernels.front())) << ','
    << a.label.str() << ',' << (a.label.cl222 ? "true" : "false") << ','
    << (a.main.pass ? "true" : "false") << ','
    << (a.full_cap ? (*a.full_cap ? "true" : "false") : "n/a") << ','
    << csv_escape(join_flags(a.flags));
  return o.str();
}

ScanSummary scan_triples(const Integer& pmax, const Integer& qmax,
                         bool only_222, std::ostream& out, unsigned jobs) {
  std::vector<PrimeTriple> triples = enumerate_triples(pmax, qmax);
  if (only_222) {
    std::erase_if(triples, [](const PrimeTriple& t) { return !is_cl222(t); });
  }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(triples.size(), 1));

  struct Row {
    std::string csv;
    bool cl222 = false, flagged = false, main_ok = true;
  };
  std::vector<Row> rows(triples.size());
  UnitCache cache;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < triples.size();
         i = next.fetch_add(1)) {
      TripleAnalysis a = analyze_triple(triples[i], &cache);
      rows[i] = {csv_row(a), a.label.cl222, !a.flags.empty(), a.main.pass};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  ScanSummary sum;
  out << csv_header() << '\n';
  for (const Row& r : rows) {
    out << r.csv << '\n';
    ++sum.triples;
    if (r.cl222) ++sum.cl222;
    if (r.flagged) ++sum.flagged;
    if (!r.main_ok) ++sum.main_failures;
  }
  return sum;
}

}  // namespace capitula
