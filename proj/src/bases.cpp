#include "onsager/bases.hpp"

#include <stdexcept>

namespace onsager {

std::string_view arrow_code(BasisId b) {
  switch (b) {
    case BasisId::uu: return "uu";
    case BasisId::dd: return "dd";
    case BasisId::du: return "du";
    case BasisId::ud: return "ud";
  }
  return "?";
}

std::string_view bracket_label(BasisId b) {
  switch (b) {
    case BasisId::uu: return "[0312]";
    case BasisId::dd: return "[3021]";
    case BasisId::du: return "[0321]";
    case BasisId::ud: return "[3012]";
  }
  return "?";
}

PathLabel path_label(BasisId b) { return PathLabel::parse(bracket_label(b)); }

BasisId parse_basis(std::string_view text) {
  for (BasisId b : kAllBases) {
    const std::string_view label = bracket_label(b);
    if (text == arrow_code(b) || text == label || text == label.substr(1, 4)) return b;
  }
  throw std::invalid_argument("unknown basis '" + std::string(text) +
                              "' (expected uu, dd, du, ud or 0312, 3021, 0321, 3012)");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::Psi: return "psi";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "psi" || text == "Psi" || text == "PSI" || text == "ψ") return Family::Psi;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected A, B or psi)");
}

BasisVector::BasisVector(BasisId b, Family f, unsigned i) : basis(b), family(f), index(i) {
  if (f == Family::Psi && i == 0) {
    throw std::invalid_argument("psi_0 is not in O; psi indices start at 1");
  }
}

std::string BasisVector::str() const {
  return std::string(family_name(family)) + "^" + std::string(arrow_code(basis)) + "_" +
         std::to_string(index);
}

Rational OCoords::at(Family f, unsigned index) const {
  const auto it = terms_.find({f, index});
  return it == terms_.end() ? Rational(0) : it->second;
}

void OCoords::add(const BasisVector& v, const Rational& c) {
  if (v.basis != basis_) throw std::invalid_argument("OCoords: basis mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({v.family, v.index}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void OCoords::add(const OCoords& other, const Rational& c) {
  if (other.basis_ != basis_) throw std::invalid_argument("OCoords: basis mismatch");
  for (const auto& [key, value] : other.terms_) add(BasisVector(basis_, key.first, key.second), value * c);
}

std::string OCoords::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    const std::string name = BasisVector(basis_, key.first, key.second).str();
    if (out.empty()) {
      out += c.is_one() ? name : c.str() + " " + name;
    } else {
      const Rational mag = abs(c);
      out += c.sign() < 0 ? " - " : " + ";
      out += mag.is_one() ? name : mag.str() + " " + name;
    }
  }
  return out;
}

ShiftCenter basis_center(BasisId b) {
  return (b == BasisId::uu || b == BasisId::dd) ? ShiftCenter::t_minus_1 : ShiftCenter::neg_t;
}

std::pair<int, int> seed_signs(BasisId b) {
  switch (b) {
    case BasisId::uu: return {1, 1};
    case BasisId::dd: return {-1, -1};
    case BasisId::du: return {-1, 1};
    case BasisId::ud: return {1, -1};
  }
  throw std::invalid_argument("seed_signs: unknown basis");
}

std::pair<LoopElem, LoopElem> basis_seeds(BasisId b) {
  const auto [sa, sb] = seed_signs(b);
  return {Rational(sa) * gen_a(), Rational(sb) * gen_b()};
}

LoopElem family_unit(BasisId b, Family f) {
  const RingElem t = RingElem::t();
  const RingElem one(1);
  const auto [sa, sb] = seed_signs(b);
  switch (f) {
    case Family::A: return Rational(sa) * gen_a();
    case Family::B: return Rational(sb) * gen_b();
    case Family::Psi:
      switch (b) {
        case BasisId::uu: return LoopElem::z(t - one);
        case BasisId::dd: return LoopElem{-one, -t, {}};
        case BasisId::du: return LoopElem::y(t);
        case BasisId::ud: return LoopElem{one, {}, one - t};
      }
  }
  throw std::invalid_argument("family_unit: bad arguments");
}

GenLabel slot_label(BasisId b, Family f) {
  const PathLabel label = path_label(b);
  switch (f) {
    case Family::B: return label.kh();
    case Family::Psi: return label.hi();
    case Family::A: return label.ij();
  }
  throw std::invalid_argument("slot_label: unknown family");
}

namespace {

RingElem center_pow(BasisId b, unsigned k) {
  return RingElem(basis_center(b) == ShiftCenter::t_minus_1 ? Poly::t_minus_1_pow(k)
                                                            : Poly::neg_t_pow(k));
}

unsigned center_exponent(const BasisVector& v) {
  return v.family == Family::Psi ? v.index - 1 : v.index;
}

using Component = RingElem LoopElem::*;

struct Step {
  Family family;
  Component component;
};

// Each step reads a component that, among the families not yet removed,
// only the stepped family touches.
std::array<Step, 3> extraction_order(BasisId b) {
  switch (b) {
    case BasisId::uu:
      return {{{Family::A, &LoopElem::px}, {Family::B, &LoopElem::py}, {Family::Psi, &LoopElem::pz}}};
    case BasisId::dd:
      return {{{Family::B, &LoopElem::pz}, {Family::Psi, &LoopElem::py}, {Family::A, &LoopElem::px}}};
    case BasisId::du:
      return {{{Family::A, &LoopElem::px}, {Family::B, &LoopElem::pz}, {Family::Psi, &LoopElem::py}}};
    case BasisId::ud:
      return {{{Family::B, &LoopElem::py}, {Family::Psi, &LoopElem::pz}, {Family::A, &LoopElem::px}}};
  }
  throw std::invalid_argument("extraction_order: unknown basis");
}

}  // namespace

LoopElem basis_elem(const BasisVector& v) {
  return scale(family_unit(v.basis, v.family), center_pow(v.basis, center_exponent(v)));
}

LoopElem reassemble(const OCoords& c) {
  LoopElem acc;
  for (const auto& [key, value] : c.terms()) {
    acc += value * basis_elem(BasisVector(c.basis(), key.first, key.second));
  }
  return acc;
}

OCoords coords(const LoopElem& u, BasisId b) {
  if (!in_onsager(u)) throw std::invalid_argument("coords: element is not in O");
  OCoords out(b);
  LoopElem residual = u;
  for (const Step& step : extraction_order(b)) {
    const LoopElem unit = family_unit(b, step.family);
    const RingElem divisor_inv = *(unit.*step.component).inverse();
    const RingElem quotient = residual.*step.component * divisor_inv;
    const auto q = quotient.as_poly();
    if (!q) throw std::invalid_argument("coords: element is not in O");
    residual -= scale(unit, quotient);
    const auto c = shift_coords(*q, basis_center(b));
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto idx = static_cast<unsigned>(step.family == Family::Psi ? k + 1 : k);
      out.add(BasisVector(b, step.family, idx), c[k]);
    }
  }
  if (!residual.is_zero()) throw std::invalid_argument("coords: element is not in O");
  return out;
}

OCoords bracket_coords(const BasisVector& v1, const BasisVector& v2) {
  if (v1.basis != v2.basis) throw std::invalid_argument("bracket_coords: mixed bases");
  const BasisId b = v1.basis;
  OCoords out(b);
  if (v1.family == v2.family) return out;

  const unsigned n = v1.index + v2.index;
  auto set = [&](const BasisVector& lhs, const BasisVector& rhs, int sign) {
    // [psi_i, A_j] = 2 psi_{i+j} + 2 A_{i+j}
    // [B_i, psi_j] = 2 B_{i+j} + 2 psi_{i+j}
    // [A_i, B_j]   = 2 A_{i+j} + 2 B_{i+j} - 4 psi_{i+j+1}
    const Rational two(2 * sign);
    if (lhs.family == Family::Psi && rhs.family == Family::A) {
      out.add(BasisVector(b, Family::Psi, n), two);
      out.add(BasisVector(b, Family::A, n), two);
    } else if (lhs.family == Family::B && rhs.family == Family::Psi) {
      out.add(BasisVector(b, Family::B, n), two);
      out.add(BasisVector(b, Family::Psi, n), two);
    } else {
      out.add(BasisVector(b, Family::A, n), two);
      out.add(BasisVector(b, Family::B, n), two);
      out.add(BasisVector(b, Family::Psi, n + 1), Rational(-4 * sign));
    }
  };
  const auto ordered = [](Family l, Family r) {
    return (l == Family::Psi && r == Family::A) || (l == Family::B && r == Family::Psi) ||
           (l == Family::A && r == Family::B);
  };
  if (ordered(v1.family, v2.family)) {
    set(v1, v2, 1);
  } else {
    set(v2, v1, -1);
  }
  return out;
}

}  // namespace onsager
