#include "onsager/tables.hpp"

#include <algorithm>
#include <sstream>

namespace onsager {

namespace {

std::string formula_text(BasisId b, Family f) {
  switch (b) {
    case BasisId::uu:
      switch (f) {
        case Family::B: return "B^uu_i = (y ⊗ t + z ⊗ (t-1)) (t-1)^i";
        case Family::Psi: return "psi^uu_{i+1} = z ⊗ (t-1)^{i+1}";
        case Family::A: return "A^uu_i = x ⊗ (t-1)^i";
      }
      break;
    case BasisId::dd:
      switch (f) {
        case Family::B: return "B^dd_i = (-y ⊗ t - z ⊗ (t-1)) (t-1)^i";
        case Family::Psi: return "psi^dd_{i+1} = (-x ⊗ 1 - y ⊗ t) (t-1)^i";
        case Family::A: return "A^dd_i = -x ⊗ (t-1)^i";
      }
      break;
    case BasisId::du:
      switch (f) {
        case Family::B: return "B^du_i = (y ⊗ t + z ⊗ (t-1)) (-t)^i";
        case Family::Psi: return "psi^du_{i+1} = -y ⊗ (-t)^{i+1}";
        case Family::A: return "A^du_i = -x ⊗ (-t)^i";
      }
      break;
    case BasisId::ud:
      switch (f) {
        case Family::B: return "B^ud_i = (-y ⊗ t - z ⊗ (t-1)) (-t)^i";
        case Family::Psi: return "psi^ud_{i+1} = (x ⊗ 1 - z ⊗ (t-1)) (-t)^i";
        case Family::A: return "A^ud_i = x ⊗ (-t)^i";
      }
      break;
  }
  return {};
}

std::string asciify(std::string s) {
  for (const auto& [from, to] : {std::pair<std::string, std::string>{"⊗", "(x)"}, {"∩", "cap"}}) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
      s.replace(pos, from.size(), to);
    }
  }
  return s;
}

std::string_view center_name(ShiftCenter c) { return c == ShiftCenter::t_minus_1 ? "t-1" : "-t"; }

std::string signed_vector(int sign, Family f, BasisId b) {
  return (sign < 0 ? "-" : "") + BasisVector(b, f, 0).str();
}

}  // namespace

std::vector<BasisTableRow> basis_table() {
  std::vector<BasisTableRow> rows;
  for (BasisId b : kAllBases) {
    for (Family f : {Family::B, Family::Psi, Family::A}) {
      rows.push_back({b, f, f == Family::Psi ? 1U : 0U, formula_text(b, f), slot_label(b, f),
                      family_unit(b, f), basis_center(b)});
    }
  }
  return rows;
}

std::vector<GeneratorTableRow> generator_table() {
  std::vector<GeneratorTableRow> rows;
  for (BasisId b : kAllBases) {
    const auto [sa, sb] = seed_signs(b);
    rows.push_back({b, sa, sb});
  }
  return rows;
}

std::string render_basis_table(bool ascii) {
  std::ostringstream out;
  BasisId current = BasisId::uu;
  bool first = true;
  for (const BasisTableRow& row : basis_table()) {
    if (first || row.basis != current) {
      if (!first) out << '\n';
      out << bracket_label(row.basis) << " (" << arrow_code(row.basis) << ")\n";
      current = row.basis;
      first = false;
    }
    const std::string formula = ascii ? asciify(row.formula) : row.formula;
    const auto width = std::count_if(formula.begin(), formula.end(),
                                     [](char c) { return (c & 0xC0) != 0x80; });
    out << "  " << formula << std::string(width < 46 ? 46 - width : 0, ' ') << "  X_"
        << row.slot.str() << (ascii ? " cap O\n" : " ∩ O\n");
  }
  return out.str();
}

std::string render_generator_table() {
  std::ostringstream out;
  for (const GeneratorTableRow& row : generator_table()) {
    out << bracket_label(row.basis) << " (" << arrow_code(row.basis)
        << "): A = " << signed_vector(row.sign_a, Family::A, row.basis)
        << ", B = " << signed_vector(row.sign_b, Family::B, row.basis) << '\n';
  }
  return out.str();
}

json basis_table_json() {
  json rows = json::array();
  for (const BasisTableRow& row : basis_table()) {
    rows.push_back({{"basis", std::string(arrow_code(row.basis))},
                    {"label", std::string(bracket_label(row.basis))},
                    {"family", std::string(family_name(row.family))},
                    {"offset", row.offset},
                    {"formula", row.formula},
                    {"slot", row.slot.str()},
                    {"center", std::string(center_name(row.center))},
                    {"unit", to_json(row.unit)}});
  }
  return {{"rows", rows}};
}

json generator_table_json() {
  json rows = json::array();
  for (const GeneratorTableRow& row : generator_table()) {
    rows.push_back({{"basis", std::string(arrow_code(row.basis))},
                    {"label", std::string(bracket_label(row.basis))},
                    {"A", {{"sign", row.sign_a}, {"vector", BasisVector(row.basis, Family::A, 0).str()}}},
                    {"B", {{"sign", row.sign_b}, {"vector", BasisVector(row.basis, Family::B, 0).str()}}}});
  }
  return {{"rows", rows}};
}

LoopElem row_element(const json& row, unsigned i) {
  const std::string center = row.at("center").get<std::string>();
  Poly p;
  if (center == "t-1") {
    p = Poly::t_minus_1_pow(i);
  } else if (center == "-t") {
    p = Poly::neg_t_pow(i);
  } else {
    throw std::invalid_argument("json: unknown center '" + center + "'");
  }
  return scale(loop_from_json(row.at("unit")), RingElem(p));
}

}  // namespace onsager
