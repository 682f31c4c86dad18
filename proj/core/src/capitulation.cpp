#include "capitula/capitulation.hpp"

#include <stdexcept>

namespace capitula {

namespace {

bool own_type(int j, DPattern d) {
  return j == 1 ? (d == DPattern::P1 || d == DPattern::TwoP1)
                : (d == DPattern::P2 || d == DPattern::TwoP2);
}

GaussianInt pi1_of(const PrimeTriple& t) { return {t.e, 2 * t.f}; }
GaussianInt pi3_of(const PrimeTriple& t) { return {t.g, 2 * t.h}; }

}  // namespace

SizeReadings kappa_size_readings(int j, DPattern dpat, SubPattern apat) {
  if (j != 1 && j != 2)
    throw std::invalid_argument("kappa_size_readings: j must be 1 or 2");
  SizeReadings r;
  const bool a_unit = apat == SubPattern::Unit;
  auto table = [&](DPattern two_own, DPattern other_odd) -> unsigned {
    if (dpat == DPattern::OneD && !a_unit) return 8;
    if (a_unit && (dpat == two_own || dpat == other_odd)) return 2;
    return 4;
  };
  if (dpat == DPattern::OneD && !a_unit) {
    r.derived = 8;
  } else if (a_unit && own_type(j, dpat)) {
    r.derived = 2;
  } else {
    r.derived = 4;
  }
  // Literal table: "2p1(x+-1) or p2(x+-1)" in both the K1 and the K2
  // statement; the mirrored reading swaps p1 and p2 for K2.
  r.table_verbatim = table(DPattern::TwoP1, DPattern::P2);
  r.table_mirrored =
      j == 1 ? r.table_verbatim : table(DPattern::TwoP2, DPattern::P1);
  return r;
}

SizeReadings kappa_size_readings_K3(int norm_p1p2, DPattern dpat) {
  SizeReadings r;
  if (norm_p1p2 == 1) {
    r.derived = dpat == DPattern::OneD ? 4 : 2;
  } else {
    r.derived = (dpat == DPattern::Q || dpat == DPattern::TwoQ) ? 2 : 4;
  }
  r.table_verbatim = r.table_mirrored = r.derived;
  return r;
}

unsigned kappa_size(int j, DPattern dpat, SubPattern apat) {
  return kappa_size_readings(j, dpat, apat).derived;
}

unsigned kappa_size_K3(int norm_p1p2, DPattern dpat) {
  return kappa_size_readings_K3(norm_p1p2, dpat).derived;
}

std::vector<WordList> kappa_K1(DPattern dpat, SubPattern apat) {
  const ClassWord H1 = ClassWord::H(1), H2 = ClassWord::H(2);
  const ClassWord H34 = ClassWord::H(3) + ClassWord::H(4);
  const bool a_unit = apat == SubPattern::Unit;
  if (dpat == DPattern::OneD && !a_unit) return {{H1, H2, H34}};
  if (own_type(1, dpat)) return a_unit ? std::vector<WordList>{{H1}}
                                       : std::vector<WordList>{{H1, H34}};
  return {{H1, H2}};
}

std::vector<WordList> kappa_K2(DPattern dpat, SubPattern apat2) {
  const ClassWord H3 = ClassWord::H(3), H4 = ClassWord::H(4);
  const ClassWord H12 = ClassWord::H(1) + ClassWord::H(2);
  const bool a_unit = apat2 == SubPattern::Unit;
  if (dpat == DPattern::OneD && !a_unit) return {{H3, H4, H12}};
  if (own_type(2, dpat)) return a_unit ? std::vector<WordList>{{H3}}
                                       : std::vector<WordList>{{H3, H12}};
  return {{H3, H4}};
}

std::vector<WordList> kappa_K3(DPattern dpat, int norm_p1p2,
                               std::optional<Pairing> pairing) {
  const ClassWord H12 = ClassWord::H(1) + ClassWord::H(2);
  const ClassWord H34 = ClassWord::H(3) + ClassWord::H(4);
  const ClassWord H13 = ClassWord::H(1) + ClassWord::H(3);
  const ClassWord H14 = ClassWord::H(1) + ClassWord::H(4);
  const ClassWord H23 = ClassWord::H(2) + ClassWord::H(3);
  const ClassWord H24 = ClassWord::H(2) + ClassWord::H(4);

  if (norm_p1p2 == 1) {
    if (dpat == DPattern::OneD) return {{H12, H34}};
    if (own_type(1, dpat)) return {{H34}};
    return {{H12}};  // p2-type; q-type: <H1H2> = <H3H4> mod relations
  }

  if (dpat == DPattern::Q || dpat == DPattern::TwoQ) {
    if (!pairing) return {{H13}, {H14}};
    return {*pairing == Pairing::P13 ? WordList{H13} : WordList{H14}};
  }
  if (dpat == DPattern::OneD) {
    if (!pairing) return {{H13, H24}, {H14, H23}};
    return {*pairing == Pairing::P13 ? WordList{H13, H24}
                                     : WordList{H14, H23}};
  }
  if (own_type(1, dpat)) return {{H13, H14}};
  return {{H13, H23}};
}

WordList genus_kernel_bound(DPattern dpat) {
  const ClassWord H1 = ClassWord::H(1), H2 = ClassWord::H(2),
                  H3 = ClassWord::H(3), H4 = ClassWord::H(4);
  switch (dpat) {
    case DPattern::OneD: return {H1, H2, H3, H4};
    case DPattern::P1:
    case DPattern::TwoP1: return {H1, H3, H4};
    default: return {H1, H2, H3};  // p2-type and q-type
  }
}

MainTheoremVerdict evaluate_main_theorem(
    const GenusReport& genus, const std::array<CapitulationEntry, 3>& kappa,
    const WordList& bound, const RelationSet& rel) {
  MainTheoremVerdict v;
  v.sizes_in_range = true;
  for (const auto& entry : kappa) {
    unsigned s = entry.size();
    if (s != 2 && s != 4 && s != 8) v.sizes_in_range = false;
  }

  // Existential over the generator alternatives: some Am_s candidate of
  // the right order must absorb every kernel and sit inside the bound.
  for (const WordList& ams : genus.ams_generators) {
    if (span_order(ams, rel) != genus.ams_order) continue;
    bool kernels_ok = true;
    for (const auto& entry : kappa) {
      bool any = false;
      for (const WordList& alt : entry.kernels) {
        bool inside = true;
        for (ClassWord w : alt)
          if (!in_span(w, ams, rel)) inside = false;
        if (inside) any = true;
      }
      if (!any) kernels_ok = false;
    }
    bool bound_ok = true;
    for (ClassWord w : ams)
      if (!in_span(w, bound, rel)) bound_ok = false;
    if (kernels_ok) v.kernels_in_ams = true;
    if (kernels_ok && bound_ok) {
      v.ams_in_genus_bound = true;
      break;
    }
  }

  WordList all;
  for (const auto& entry : kappa)
    if (!entry.kernels.empty())
      all.insert(all.end(), entry.kernels.front().begin(),
                 entry.kernels.front().end());
  v.genus_bound_matches_union = span_equal(bound, all, rel);

  v.pass = v.sizes_in_range && v.kernels_in_ams && v.ams_in_genus_bound;
  return v;
}

Pairing resolve_K3_pairing(const QuadraticUnit& eps_p1p2,
                           const PrimeTriple& t) {
  if (eps_p1p2.norm != -1)
    throw std::invalid_argument("resolve_K3_pairing: N(eps_p1p2) must be -1");
  if (eps_p1p2.d != t.p1 * t.p2)
    throw std::invalid_argument("resolve_K3_pairing: unit does not match triple");

  // x^2 + denom^2 = y^2 p1 p2, so N(x + denom*i) = y^2 p1 p2; exactly one
  // of z, conj(z) carries pi1 to an odd power, and with it exactly one of
  // pi3, pi4.
  GaussianInt z{eps_p1p2.x, Integer(eps_p1p2.denom)};
  const GaussianInt pi1 = pi1_of(t);
  const GaussianInt pi3 = pi3_of(t);
  if (ord(pi1, z) % 2 == 0) {
    z = z.conj();
    if (ord(pi1, z) % 2 == 0)
      throw std::runtime_error("resolve_K3_pairing: pi1 does not divide a +- i");
  }
  if (ord(pi3, z) % 2 == 1) return Pairing::P13;
  if (ord(pi3.conj(), z) % 2 == 1) return Pairing::P14;
  throw std::runtime_error("resolve_K3_pairing: decomposition premise violated");
}

MainTheoremVerdict check_main_theorem(const PrimeTriple& t) {
  const QuadraticUnit ud = fundamental_unit(t.d);
  const DPattern dpat =
      classify_d_pattern(square_class_pair(ud), t.p1, t.p2, t.q);
  const SubPattern apat = classify_sub_pattern(
      square_class_pair(fundamental_unit(t.p2 * t.q)), t.p2, t.q);
  const SubPattern apat2 = classify_sub_pattern(
      square_class_pair(fundamental_unit(t.p1 * t.q)), t.p1, t.q);
  const QuadraticUnit u12 = fundamental_unit(t.p1 * t.p2);
  std::optional<Pairing> pairing;
  if (u12.norm == -1) pairing = resolve_K3_pairing(u12, t);

  std::array<CapitulationEntry, 3> kappa;
  kappa[0] = {kappa_size_readings(1, dpat, apat), kappa_K1(dpat, apat)};
  kappa[1] = {kappa_size_readings(2, dpat, apat2), kappa_K2(dpat, apat2)};
  kappa[2] = {kappa_size_readings_K3(u12.norm, dpat),
              kappa_K3(dpat, u12.norm, pairing)};

  return evaluate_main_theorem(genus_report(t, dpat), kappa,
                               genus_kernel_bound(dpat), relations_for(dpat));
}

CapitulationWitness capitulation_witness(const Integer& p) {
  if (!is_prime(p) || mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
    throw std::invalid_argument("capitulation_witness: p must be prime, 1 mod 4");
  QuadraticUnit u = fundamental_unit(p);
  if (u.norm != -1)
    throw std::runtime_error("capitulation_witness: expected norm -1");

  CapitulationWitness w;
  w.p = p;
  // Normalize to the (x + y sqrt p)/2 shape: x^2 + 4 = y^2 p.
  w.x = u.denom == 2 ? u.x : 2 * u.x;
  w.y = u.denom == 2 ? u.y : 2 * u.y;

  w.pi = canonical_prime_over(p);

  for (int sign : {1, -1}) {
    GaussianInt z{w.x, Integer(2 * sign)};
    if (ord(w.pi, z) % 2 == 0) continue;
    GaussianInt c = *exact_div(z, w.pi);
    if (auto root = gaussian_sqrt(c)) {
      w.sign = sign;
      w.system = 1;
      w.y1 = *root;
      return w;
    }
    // c = i*y1^2  <=>  -i*c is a square
    if (auto root = gaussian_sqrt(GaussianInt{c.im, -c.re})) {
      w.sign = sign;
      w.system = 2;
      w.y1 = *root;
      return w;
    }
    throw std::runtime_error("capitulation_witness: no system matched");
  }
  throw std::runtime_error("capitulation_witness: pi divides neither x +- 2i");
}

}  // namespace capitula
