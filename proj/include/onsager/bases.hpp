#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "onsager/likeness.hpp"
#include "onsager/loop.hpp"
#include "onsager/poly.hpp"

namespace onsager {

/// The four bases of O. Arrow codes: uu = [0312], dd = [3021], du = [0321], ud = [3012].
enum class BasisId { uu, dd, du, ud };

inline constexpr std::array<BasisId, 4> kAllBases = {BasisId::uu, BasisId::dd, BasisId::du,
                                                     BasisId::ud};

std::string_view arrow_code(BasisId b);
/// "[0312]" etc.
std::string_view bracket_label(BasisId b);
PathLabel path_label(BasisId b);
/// Accepts arrow codes ("uu") or labels ("0312", "[0312]").
BasisId parse_basis(std::string_view text);

enum class Family { A, B, Psi };

inline constexpr std::array<Family, 3> kAllFamilies = {Family::A, Family::B, Family::Psi};

std::string_view family_name(Family f);
/// "A", "B", "psi" (case-insensitive; "ψ" also accepted).
Family parse_family(std::string_view text);

/// A_i, B_i or psi_i of one basis; psi requires i >= 1.
struct BasisVector {
  BasisId basis;
  Family family;
  unsigned index;

  BasisVector(BasisId b, Family f, unsigned i);
  /// "A^uu_3", "psi^du_2"
  [[nodiscard]] std::string str() const;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

/// Finitely supported rational coordinates over one basis; zero entries are never stored.
class OCoords {
 public:
  explicit OCoords(BasisId basis) : basis_(basis) {}

  [[nodiscard]] BasisId basis() const { return basis_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Coefficient of (family, index); zero when absent.
  [[nodiscard]] Rational at(Family f, unsigned index) const;
  /// Adds c to the coefficient of v. Throws on a basis mismatch.
  void add(const BasisVector& v, const Rational& c);
  void add(const OCoords& other, const Rational& c = Rational(1));

  /// Terms ordered by family (A, B, psi) then index.
  [[nodiscard]] const std::map<std::pair<Family, unsigned>, Rational>& terms() const {
    return terms_;
  }

  /// Signed sum, e.g. "A^uu_0 + A^uu_1", "-1 A^uu_3"; "0" when empty.
  [[nodiscard]] std::string str() const;
  friend bool operator==(const OCoords&, const OCoords&) = default;

 private:
  BasisId basis_;
  std::map<std::pair<Family, unsigned>, Rational> terms_;
};

/// Closed form of a basis vector; always lies in O.
LoopElem basis_elem(const BasisVector& v);

/// Sum of c_v basis_elem(v).
LoopElem reassemble(const OCoords& c);

/// (A-seed, B-seed): A_0 and B_0 of basis b, each equal to +-A or +-B.
std::pair<LoopElem, LoopElem> basis_seeds(BasisId b);
/// Signs s with A_0 = s.first A and B_0 = s.second B.
std::pair<int, int> seed_signs(BasisId b);

/// The generator directions: A_0, B_0 and psi_1, with A_i = A_0 s^i,
/// B_i = B_0 s^i, psi_{i+1} = psi_1 s^i for the basis center s.
LoopElem family_unit(BasisId b, Family f);
/// t - 1 for uu/dd, -t for du/ud.
ShiftCenter basis_center(BasisId b);

/// Path slot occupied by a family: B -> kh, Psi -> hi, A -> ij.
GenLabel slot_label(BasisId b, Family f);

/// Coordinates of u in basis b. Throws std::invalid_argument when u is not in O.
OCoords coords(const LoopElem& u, BasisId b);

/// Structure constants [v1, v2] expanded in the same basis.
OCoords bracket_coords(const BasisVector& v1, const BasisVector& v2);

}  // namespace onsager
