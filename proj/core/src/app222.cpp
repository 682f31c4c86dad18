#include "capitula/app222.hpp"

#include <stdexcept>

namespace capitula {

std::string TypeLabel::str() const {
  if (family == Family::None) return "none";
  std::string s = family == Family::I ? "I" : family == Family::II ? "II" : "III";
  switch (subcase) {
    case Subcase::A: return s + "(a)";
    case Subcase::B: return s + "(b)";
    case Subcase::C: return s + "(c)";
    case Subcase::AorB: return s + "(a|b)";
    case Subcase::Unknown: return s;
  }
  return s;
}

bool is_cl222(const PrimeTriple& t) {
  if (mpz_fdiv_ui(t.p1.get_mpz_t(), 8) != 5 &&
      mpz_fdiv_ui(t.p2.get_mpz_t(), 8) != 5)
    return false;
  int minus = 0;
  if (jacobi(t.p1, t.p2) == -1) ++minus;
  if (jacobi(t.p1, t.q) == -1) ++minus;
  if (jacobi(t.p2, t.q) == -1) ++minus;
  return minus >= 2;
}

TypeLabel classify_type(const PrimeTriple& t, DPattern dpat, SubPattern apat) {
  if (!is_cl222(t))
    throw std::invalid_argument("classify_type: Cl_2(k) is not of type (2,2,2)");

  TypeLabel label;
  label.cl222 = true;
  switch (dpat) {
    case DPattern::P1:
    case DPattern::TwoP1: label.family = Family::I; break;
    case DPattern::P2:
    case DPattern::TwoP2: label.family = Family::II; break;
    case DPattern::Q:
    case DPattern::TwoQ: label.family = Family::III; break;
    case DPattern::OneD:
      throw std::domain_error("classify_type: pattern {1,d} cannot be (2,2,2)");
  }

  // Subcase from the condition table on eps_{p2 q}:
  //   I:   a+-1 -> c, p2(a+-1) -> b, 2p2(a+-1) -> a
  //   II:  a+-1 -> a, 2p2(a+-1) -> b, p2(a+-1) -> c
  //   III: p2(a+-1) -> a or b (not separated), 2p2(a+-1) -> c
  switch (label.family) {
    case Family::I:
      label.subcase = apat == SubPattern::Unit ? Subcase::C
                      : apat == SubPattern::POdd ? Subcase::B
                                                 : Subcase::A;
      break;
    case Family::II:
      label.subcase = apat == SubPattern::Unit ? Subcase::A
                      : apat == SubPattern::TwoP ? Subcase::B
                                                 : Subcase::C;
      break;
    case Family::III:
      label.subcase = apat == SubPattern::POdd ? Subcase::AorB
                      : apat == SubPattern::TwoP ? Subcase::C
                                                 : Subcase::Unknown;
      break;
    default: break;
  }
  return label;
}

TypeLabel classify_type(const PrimeTriple& t, const SquareClassPair& scp_d,
                        const SquareClassPair& scp_a) {
  return classify_type(t, classify_d_pattern(scp_d, t.p1, t.p2, t.q),
                       classify_sub_pattern(scp_a, t.p2, t.q));
}

Kappa222 kappa_222(const TypeLabel& label, SubPattern apat, int norm_p1p2,
                   std::optional<Pairing> pairing) {
  if (!label.cl222)
    throw std::invalid_argument("kappa_222: requires a (2,2,2) triple");
  const ClassWord H1 = ClassWord::H(1), H2 = ClassWord::H(2),
                  H3 = ClassWord::H(3), H4 = ClassWord::H(4);

  Kappa222 k;
  switch (label.family) {
    case Family::I:
      k.k1 = apat == SubPattern::Unit ? WordList{H1} : WordList{H1, H3 + H4};
      k.k2 = {H3, H4};
      k.k3 = norm_p1p2 == 1 ? WordList{H3 + H4} : WordList{H1 + H3, H1 + H4};
      break;
    case Family::II:
      k.k1 = {H1, H2};
      k.k2 = apat == SubPattern::POdd ? WordList{H3} : WordList{H3, H1 + H2};
      k.k3 = norm_p1p2 == 1 ? WordList{H1 + H2} : WordList{H1 + H3, H2 + H3};
      break;
    case Family::III:
      k.k1 = {H1, H2};
      k.k2 = {H3, H1 + H2};
      if (norm_p1p2 == 1) {
        k.k3 = {H1 + H2};
      } else if (pairing.has_value()) {
        k.k3 = *pairing == Pairing::P13 ? WordList{H1 + H3}
                                        : WordList{H2 + H3};
      } else {
        throw std::invalid_argument(
            "kappa_222: type III with N(eps_p1p2) = -1 needs the pairing");
      }
      break;
    default:
      throw std::invalid_argument("kappa_222: family is none");
  }
  return k;
}

WordList cl2_generators(Family family) {
  const ClassWord H1 = ClassWord::H(1), H2 = ClassWord::H(2),
                  H3 = ClassWord::H(3), H4 = ClassWord::H(4);
  switch (family) {
    case Family::I: return {H1, H3, H4};
    case Family::II:
    case Family::III: return {H1, H2, H3};
    default:
      throw std::invalid_argument("cl2_generators: family is none");
  }
}

bool full_capitulation_spans(const Kappa222& k, Family family,
                             const RelationSet& rel) {
  WordList all = k.k1;
  all.insert(all.end(), k.k2.begin(), k.k2.end());
  all.insert(all.end(), k.k3.begin(), k.k3.end());
  return span_order(all, rel) == 8 &&
         span_equal(all, cl2_generators(family), rel);
}

bool full_capitulation_check(const PrimeTriple& t) {
  if (!is_cl222(t))
    throw std::invalid_argument("full_capitulation_check: not a (2,2,2) triple");

  const QuadraticUnit ud = fundamental_unit(t.d);
  const DPattern dpat =
      classify_d_pattern(square_class_pair(ud), t.p1, t.p2, t.q);
  const SubPattern apat = classify_sub_pattern(
      square_class_pair(fundamental_unit(t.p2 * t.q)), t.p2, t.q);
  const QuadraticUnit u12 = fundamental_unit(t.p1 * t.p2);
  std::optional<Pairing> pairing;
  if (u12.norm == -1) pairing = resolve_K3_pairing(u12, t);

  const TypeLabel label = classify_type(t, dpat, apat);
  return full_capitulation_spans(kappa_222(label, apat, u12.norm, pairing),
                                 label.family, relations_for(dpat));
}

}  // namespace capitula
