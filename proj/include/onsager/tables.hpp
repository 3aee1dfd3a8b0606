#pragma once

#include <string>
#include <vector>

#include "onsager/bases.hpp"
#include "onsager/json_io.hpp"

namespace onsager {

/// One row of the basis summary: the vectors unit * center^i (i >= 0) with
/// indices offset + i, spanning slot ∩ O.
struct BasisTableRow {
  BasisId basis;
  Family family;
  unsigned offset;      // 1 for psi, 0 otherwise
  std::string formula;  // e.g. "psi^uu_{i+1} = z ⊗ (t-1)^{i+1}"
  GenLabel slot;
  LoopElem unit;
  ShiftCenter center;
};

std::vector<BasisTableRow> basis_table();

/// A = sign_a * A^b_0 and B = sign_b * B^b_0.
struct GeneratorTableRow {
  BasisId basis;
  int sign_a;
  int sign_b;
};

std::vector<GeneratorTableRow> generator_table();

std::string render_basis_table(bool ascii);
std::string render_generator_table();

/// {"rows": [{"basis", "label", "family", "offset", "formula", "slot",
///            "center": "t-1" | "-t", "unit": LoopElem}, ...]}
json basis_table_json();
/// {"rows": [{"basis", "label", "A": {"sign", "vector"}, "B": {...}}, ...]}
json generator_table_json();

/// unit * center^i for a row; the basis vector with index offset + i.
LoopElem row_element(const json& row, unsigned i);

}  // namespace onsager
