#pragma once

#include <array>
#include <string>

#include "onsager/ring.hpp"

namespace onsager {

/// Element x(x)px + y(x)py + z(x)pz of the three-point sl2 loop algebra, in
/// equitable coordinates.
struct LoopElem {
  RingElem px;
  RingElem py;
  RingElem pz;

  static LoopElem x(const RingElem& a = RingElem(1)) { return {a, {}, {}}; }
  static LoopElem y(const RingElem& a = RingElem(1)) { return {{}, a, {}}; }
  static LoopElem z(const RingElem& a = RingElem(1)) { return {{}, {}, a}; }

  [[nodiscard]] bool is_zero() const { return px.is_zero() && py.is_zero() && pz.is_zero(); }

  LoopElem operator-() const { return {-px, -py, -pz}; }
  LoopElem& operator+=(const LoopElem& o);
  LoopElem& operator-=(const LoopElem& o);
  friend LoopElem operator+(LoopElem a, const LoopElem& b) { return a += b; }
  friend LoopElem operator-(LoopElem a, const LoopElem& b) { return a -= b; }
  friend LoopElem operator*(const Rational& c, const LoopElem& u);
  friend bool operator==(const LoopElem&, const LoopElem&) = default;
};

/// Lie bracket, [x,y] = 2x+2y, [y,z] = 2y+2z, [z,x] = 2z+2x extended
/// bilinearly with [u(x)a, v(x)b] = [u,v](x)ab.
LoopElem bracket(const LoopElem& u, const LoopElem& v);

/// Right module action u * a.
LoopElem scale(const LoopElem& u, const RingElem& a);

/// Label (i, j), i != j, of a standard generator.
struct GenLabel {
  int i;
  int j;

  GenLabel(int i_, int j_);
  friend bool operator==(const GenLabel&, const GenLabel&) = default;
  [[nodiscard]] GenLabel reversed() const { return {j, i}; }
  /// The complementary pair {k, h} in ascending order.
  [[nodiscard]] GenLabel opposite() const;
  /// The two indices, e.g. "03".
  [[nodiscard]] std::string str() const;
};

/// All twelve ordered labels.
std::array<GenLabel, 12> all_gen_labels();

/// Image of the standard generator x_ij under the isomorphism onto the loop algebra.
LoopElem std_gen(GenLabel g);

/// The Onsager generators A = x(x)1 and B = y(x)t + z(x)(t-1).
LoopElem gen_a();
LoopElem gen_b();

/// [u,[u,[u,v]]] == 4[u,v]
bool dolan_grady_holds(const LoopElem& u, const LoopElem& v);

/// px in Q[t], py in tQ[t], pz in (t-1)Q[t].
bool in_onsager(const LoopElem& u);

struct RenderOptions {
  bool ascii = false;
};

/// "x⊗2 + y⊗2t + z⊗(2 - 2t)"; "0" for zero.
std::string to_string(const LoopElem& u, RenderOptions opts = {});

}  // namespace onsager
