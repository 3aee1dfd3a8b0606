#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "onsager/loop.hpp"

namespace onsager {

/// Generators of S4 acting on the loop algebra: rho = (12)(30), tau = (12),
/// mu = (23)(10), phi = (123). Declaration order is the tie-break order for
/// shortest words.
enum class BasicAut { rho, tau, mu, phi };

std::string_view name(BasicAut g);

/// A bijection of {0,1,2,3}; images[i] is the image of i.
class Perm {
 public:
  Perm() : images_{0, 1, 2, 3} {}
  explicit Perm(std::array<int, 4> images);

  static Perm identity() { return {}; }
  static Perm of(BasicAut g);
  /// Cycle notation, e.g. "(12)(30)", "(123)"; "e" or "" is the identity.
  static Perm parse(std::string_view text);
  /// All 24 permutations in lexicographic order of images.
  static std::vector<Perm> all();

  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const std::array<int, 4>& images() const { return images_; }
  [[nodiscard]] Perm inverse() const;
  [[nodiscard]] bool is_identity() const { return *this == Perm{}; }

  /// (p * q)(i) = p(q(i))
  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// Cycle notation with each cycle led by its smallest point; "e" for the identity.
  [[nodiscard]] std::string str() const;

 private:
  std::array<int, 4> images_;
};

using GenWord = std::vector<BasicAut>;

/// Product of a word, w[0] * w[1] * ... (rightmost letter acts first).
Perm evaluate(const GenWord& word);

/// Shortest word for p, lexicographically least among shortest
/// (rho < tau < mu < phi). The table over S4 is built once on first use.
const GenWord& word_for(const Perm& p);

LoopElem apply_basic(BasicAut g, const LoopElem& u);

/// Action of p as an automorphism; apply_perm(p, std_gen(i,j)) = std_gen(p(i), p(j)).
LoopElem apply_perm(const Perm& p, const LoopElem& u);

}  // namespace onsager
