#pragma once

#include <array>
#include <string>

#include "onsager/loop.hpp"

namespace onsager {

/// Path label [khij]: four mutually distinct indices.
class PathLabel {
 public:
  PathLabel(int k, int h, int i, int j);
  /// "0312" or "[0312]".
  static PathLabel parse(std::string_view text);
  static PathLabel canonical() { return {0, 3, 1, 2}; }

  [[nodiscard]] const std::array<int, 4>& indices() const { return idx_; }
  [[nodiscard]] GenLabel kh() const { return {idx_[0], idx_[1]}; }
  [[nodiscard]] GenLabel hi() const { return {idx_[1], idx_[2]}; }
  [[nodiscard]] GenLabel ij() const { return {idx_[2], idx_[3]}; }
  [[nodiscard]] std::string str() const;
  friend bool operator==(const PathLabel&, const PathLabel&) = default;

 private:
  std::array<int, 4> idx_;
};

/// Components of an element in X_kh + X_hi + X_ij.
struct PathParts {
  LoopElem kh;
  LoopElem hi;
  LoopElem ij;

  [[nodiscard]] LoopElem sum() const { return kh + hi + ij; }
  friend bool operator==(const PathParts&, const PathParts&) = default;
};

/// [x_ij, u] = 0 and [x_kh,[x_kh,[x_kh,u]]] = 4[x_kh,u] with {k,h} the complement of {i,j}.
bool is_like(GenLabel g, const LoopElem& u);
/// The same test with the opposite generator taken as x_hk.
bool is_like_reversed_opposite(GenLabel g, const LoopElem& u);

enum class LikeKind { one, t_pow, tp_pow, tpp_pow };

/// x_ij, x_ij t^n, x_ij (t')^n or x_ij (t'')^n. Powered kinds need n >= 1.
LoopElem like_basis_elem(GenLabel g, LikeKind kind, unsigned n);

/// Decomposition along X_03 + X_31 + X_12 (kh = 03, hi = 31, ij = 12).
PathParts decompose_canonical(const LoopElem& u);

/// Decomposition along X_kh + X_hi + X_ij for any path label, by conjugating
/// the canonical one with the permutation carrying [0312] to the label.
PathParts decompose_path(const PathLabel& label, const LoopElem& u);

/// Decomposition of u in O along (X_kh cap O) + (X_hi cap O) + (X_ij cap O),
/// for the four labels [0312], [3021], [0321], [3012]. Throws
/// std::invalid_argument for u outside O or any other label.
PathParts decompose_onsager(const PathLabel& label, const LoopElem& u);

}  // namespace onsager
