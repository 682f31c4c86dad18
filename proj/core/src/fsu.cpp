#include "capitula/fsu.hpp"

#include <array>
#include <stdexcept>

namespace capitula {

std::string UnitExpr::str() const {
  auto base_name = [](BaseUnit b) -> const char* {
    switch (b) {
      case BaseUnit::P1: return "eps_p1";
      case BaseUnit::P2: return "eps_p2";
      case BaseUnit::Q: return "eps_q";
      case BaseUnit::P2Q: return "eps_p2q";
      case BaseUnit::P1Q: return "eps_p1q";
      case BaseUnit::P1P2: return "eps_p1p2";
      case BaseUnit::D: return "eps_d";
    }
    return "?";
  };
  std::string inner = i_coeff ? "i" : "";
  for (BaseUnit b : bases) {
    if (!inner.empty()) inner += '*';
    inner += base_name(b);
  }
  return sqrt ? "sqrt(" + inner + ")" : inner;
}

const char* to_string(FieldId f) {
  switch (f) {
    case FieldId::k: return "k";
    case FieldId::K1: return "K1";
    case FieldId::K2: return "K2";
    case FieldId::K3: return "K3";
    case FieldId::K1plus: return "K1+";
    case FieldId::K2plus: return "K2+";
    case FieldId::K3plus: return "K3+";
  }
  return "?";
}

namespace {

UnitExpr plain(BaseUnit b) { return {false, {b}, false}; }
UnitExpr root(std::vector<BaseUnit> bs) { return {false, std::move(bs), true}; }
UnitExpr iroot(std::vector<BaseUnit> bs) { return {true, std::move(bs), true}; }

// One row of the K1/K2 decision table, written with role symbols:
// P = eps_{pj}, Sub = eps_{p_other * q}... no: Sub is the unit of the
// real quadratic subfield paired with pj (eps_{p2q} for K1).
struct TableRow {
  int case_id;
  char subcase;
  std::vector<UnitExpr> plus_units;
  std::vector<UnitExpr> cm_units;
  int hasse_q;
};

// Case dispatch for K1 (and, under p1 <-> p2, K2). `own` refers to the
// pj of the extension Kj = k(sqrt(pj)), `other` to the remaining p.
TableRow k1_row(DPattern dpat, SubPattern apat, DPattern own_odd,
                DPattern own_two, DPattern other_odd, DPattern other_two,
                BaseUnit P, BaseUnit Sub) {
  const bool a_unit = apat == SubPattern::Unit;
  const bool d_own_odd = dpat == DPattern::OneD || dpat == own_odd;

  if (a_unit && d_own_odd)
    return {1, 0,
            {plain(P), plain(Sub), root({Sub, BaseUnit::D})},
            {plain(P), iroot({Sub}), root({Sub, BaseUnit::D})},
            2};
  if (!a_unit && d_own_odd)
    return {2, 0,
            {plain(P), plain(Sub), plain(BaseUnit::D)},
            {plain(P), plain(Sub), iroot({BaseUnit::D})},
            2};
  if (a_unit && dpat == own_two)
    return {3, 0,
            {plain(P), plain(Sub), root({BaseUnit::D})},
            {plain(P), iroot({Sub}), root({BaseUnit::D})},
            2};
  if (!a_unit && dpat == own_two)
    return {4, 0,
            {plain(P), plain(Sub), root({BaseUnit::D})},
            {plain(P), plain(Sub), root({BaseUnit::D})},
            1};

  const bool d_other = dpat == other_odd || dpat == other_two;
  const bool d_q = dpat == DPattern::Q || dpat == DPattern::TwoQ;
  if (!d_other && !d_q)
    throw std::domain_error("fsu table: case not covered");

  if (a_unit)
    return {5, d_other ? 'i' : 'x',
            {plain(P), plain(Sub), plain(BaseUnit::D)},
            {plain(P), iroot({Sub}), plain(BaseUnit::D)},
            2};

  const bool d_plain = dpat == other_odd || dpat == DPattern::Q;
  const bool matched = (apat == SubPattern::POdd) == d_plain;
  if (matched)
    return {6, apat == SubPattern::POdd ? 'i' : 'x',
            {plain(P), plain(Sub), root({Sub, BaseUnit::D})},
            {plain(P), plain(Sub), root({Sub, BaseUnit::D})},
            1};
  return {7, apat == SubPattern::POdd ? 'i' : 'x',
          {plain(P), plain(Sub), plain(BaseUnit::D)},
          {plain(P), plain(Sub), iroot({Sub, BaseUnit::D})},
          2};
}

FsuPair pack(const TableRow& row, FieldId plus_id, FieldId cm_id) {
  // subcase markers: 0 none, 'i' subcase i, 'I' subcase ii
  const char sub = row.subcase == 'x' ? 'I' : row.subcase;
  FsuPair out;
  out.plus.field = plus_id;
  out.plus.units = row.plus_units;
  out.plus.case_id = row.case_id;
  out.plus.subcase = sub;
  out.cm.field = cm_id;
  out.cm.units = row.cm_units;
  out.cm.hasse_q = row.hasse_q;
  out.cm.case_id = row.case_id;
  out.cm.subcase = sub;
  return out;
}

}  // namespace

FsuDescriptor fsu_k(DPattern pattern, int norm_d) {
  FsuDescriptor out;
  out.field = FieldId::k;
  if (norm_d == -1) {
    out.units = {plain(BaseUnit::D)};
    out.hasse_q = 1;
    out.case_id = 0;
    return out;
  }
  if (pattern == DPattern::OneD) {
    out.units = {iroot({BaseUnit::D})};
    out.hasse_q = 2;
    out.case_id = 1;
  } else {
    out.units = {plain(BaseUnit::D)};
    out.hasse_q = 1;
    out.case_id = 2;
  }
  return out;
}

FsuPair fsu_K1(DPattern dpat, SubPattern apat) {
  TableRow row = k1_row(dpat, apat, DPattern::P1, DPattern::TwoP1,
                        DPattern::P2, DPattern::TwoP2, BaseUnit::P1,
                        BaseUnit::P2Q);
  return pack(row, FieldId::K1plus, FieldId::K1);
}

FsuPair fsu_K2(DPattern dpat, SubPattern apat2) {
  TableRow row = k1_row(dpat, apat2, DPattern::P2, DPattern::TwoP2,
                        DPattern::P1, DPattern::TwoP1, BaseUnit::P2,
                        BaseUnit::P1Q);
  return pack(row, FieldId::K2plus, FieldId::K2);
}

FsuPair fsu_K3(DPattern dpat, int norm_p1p2) {
  FsuPair out;
  const UnitExpr eq = plain(BaseUnit::Q);
  const UnitExpr e12 = plain(BaseUnit::P1P2);
  const UnitExpr ed = plain(BaseUnit::D);
  std::vector<UnitExpr> plus, cm;
  int case_id;

  if (norm_p1p2 == 1) {
    switch (dpat) {
      case DPattern::TwoQ:
        case_id = 1;
        plus = {eq, e12, root({BaseUnit::D})};
        break;
      case DPattern::OneD:
      case DPattern::Q:
        case_id = 2;
        plus = {eq, e12, root({BaseUnit::Q, BaseUnit::D})};
        break;
      case DPattern::P1:
      case DPattern::P2:
        case_id = 3;
        plus = {eq, e12, root({BaseUnit::Q, BaseUnit::P1P2, BaseUnit::D})};
        break;
      case DPattern::TwoP1:
      case DPattern::TwoP2:
        case_id = 4;
        plus = {eq, e12, root({BaseUnit::P1P2, BaseUnit::D})};
        break;
      default:
        throw std::domain_error("fsu_K3: case not covered");
    }
  } else {
    switch (dpat) {
      case DPattern::TwoQ:
        case_id = 1;
        plus = {eq, e12, root({BaseUnit::D})};
        break;
      case DPattern::OneD:
      case DPattern::Q:
        case_id = 2;
        plus = {eq, e12, root({BaseUnit::Q, BaseUnit::D})};
        break;
      default:
        case_id = 3;
        plus = {eq, e12, ed};
        break;
    }
  }

  // The CM system replaces eps_q by sqrt(i*eps_q).
  cm = {e12, plus[2], iroot({BaseUnit::Q})};

  out.plus.field = FieldId::K3plus;
  out.plus.units = plus;
  out.plus.case_id = case_id;
  out.cm.field = FieldId::K3;
  out.cm.units = cm;
  out.cm.hasse_q = 2;
  out.cm.case_id = case_id;
  return out;
}

FsuPair fsu_K1(const PrimeTriple& t, const SquareClassPair& scp_d,
               const SquareClassPair& scp_a) {
  return fsu_K1(classify_d_pattern(scp_d, t.p1, t.p2, t.q),
                classify_sub_pattern(scp_a, t.p2, t.q));
}

FsuPair fsu_K2(const PrimeTriple& t, const SquareClassPair& scp_d,
               const SquareClassPair& scp_a2) {
  return fsu_K2(classify_d_pattern(scp_d, t.p1, t.p2, t.q),
                classify_sub_pattern(scp_a2, t.p1, t.q));
}

FsuPair fsu_K3(const PrimeTriple& t, const SquareClassPair& scp_d,
               const QuadraticUnit& eps_p1p2) {
  return fsu_K3(classify_d_pattern(scp_d, t.p1, t.p2, t.q), eps_p1p2.norm);
}

namespace {

// Direct transcription of the K2 reference table, one cell per
// (sub-pattern, d-pattern) pair, for the cross-check below. Cells hold
// (case_id, Q, CM system) with role symbols already specialized to K2.
struct K2Cell {
  int case_id;
  int hasse_q;
  std::vector<UnitExpr> cm_units;
};

K2Cell k2_direct(DPattern dpat, SubPattern apat) {
  const BaseUnit P = BaseUnit::P2;
  const BaseUnit S = BaseUnit::P1Q;
  const bool a1 = apat == SubPattern::Unit;
  switch (dpat) {
    case DPattern::OneD:
    case DPattern::P2:
      if (a1) return {1, 2, {plain(P), iroot({S}), root({S, BaseUnit::D})}};
      return {2, 2, {plain(P), plain(S), iroot({BaseUnit::D})}};
    case DPattern::TwoP2:
      if (a1) return {3, 2, {plain(P), iroot({S}), root({BaseUnit::D})}};
      return {4, 1, {plain(P), plain(S), root({BaseUnit::D})}};
    case DPattern::P1:
    case DPattern::Q:
      if (a1) return {5, 2, {plain(P), iroot({S}), plain(BaseUnit::D)}};
      if (apat == SubPattern::POdd)
        return {6, 1, {plain(P), plain(S), root({S, BaseUnit::D})}};
      return {7, 2, {plain(P), plain(S), iroot({S, BaseUnit::D})}};
    case DPattern::TwoP1:
    case DPattern::TwoQ:
      if (a1) return {5, 2, {plain(P), iroot({S}), plain(BaseUnit::D)}};
      if (apat == SubPattern::TwoP)
        return {6, 1, {plain(P), plain(S), root({S, BaseUnit::D})}};
      return {7, 2, {plain(P), plain(S), iroot({S, BaseUnit::D})}};
  }
  throw std::domain_error("k2_direct: unreachable");
}

}  // namespace

std::vector<std::string> k2_table_transcription_diff() {
  std::vector<std::string> diffs;
  for (DPattern dpat :
       {DPattern::OneD, DPattern::P1, DPattern::TwoP1, DPattern::P2,
        DPattern::TwoP2, DPattern::Q, DPattern::TwoQ}) {
    for (SubPattern apat :
         {SubPattern::Unit, SubPattern::POdd, SubPattern::TwoP}) {
      FsuPair mirrored = fsu_K2(dpat, apat);
      K2Cell direct = k2_direct(dpat, apat);
      std::string cell = std::string(to_string(dpat)) + "/" +
                         sub_pattern_name(apat, "p1", "q");
      if (mirrored.cm.case_id != direct.case_id)
        diffs.push_back(cell + ": case " +
                        std::to_string(mirrored.cm.case_id) + " vs " +
                        std::to_string(direct.case_id));
      if (mirrored.cm.hasse_q != direct.hasse_q)
        diffs.push_back(cell + ": Q mismatch");
      if (mirrored.cm.units != direct.cm_units) {
        std::string lhs, rhs;
        for (const UnitExpr& e : mirrored.cm.units) lhs += e.str() + " ";
        for (const UnitExpr& e : direct.cm_units) rhs += e.str() + " ";
        diffs.push_back(cell + ": " + lhs + "vs " + rhs);
      }
    }
  }
  return diffs;
}

}  // namespace capitula
