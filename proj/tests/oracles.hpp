#pragma once

// Reference implementations used by the tests. They share no code path with
// the production formulas beyond the ring arithmetic they are built on.

#include <array>
#include <random>
#include <vector>

#include "onsager/loop.hpp"

namespace onsager::testing {

/// Value of a at t = s, computed straight from the fraction num / (s^a (s-1)^b).
inline Rational value_at(const RingElem& a, const Rational& s) {
  Rational den(1);
  for (unsigned k = 0; k < a.tpow(); ++k) den *= s;
  for (unsigned k = 0; k < a.upow(); ++k) den *= s - Rational(1);
  return a.num().eval(s) / den;
}

inline const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts = {Rational(2),     Rational(3),    Rational(-1),
                                            Rational(1, 2),  Rational(5, 3), Rational(-7, 4),
                                            Rational(11, 5), Rational(9)};
  return pts;
}

/// Bracket by expanding the nine pairs of equitable basis vectors through the
/// table [x,y] = 2x+2y, [y,z] = 2y+2z, [z,x] = 2z+2x.
inline LoopElem brute_bracket(const LoopElem& u, const LoopElem& v) {
  // table[a][b] = [e_a, e_b] as coefficients on (x, y, z)
  const std::array<std::array<std::array<int, 3>, 3>, 3> table = {{
      {{{0, 0, 0}, {2, 2, 0}, {-2, 0, -2}}},
      {{{-2, -2, 0}, {0, 0, 0}, {0, 2, 2}}},
      {{{2, 0, 2}, {0, -2, -2}, {0, 0, 0}}},
  }};
  const std::array<const RingElem*, 3> cu = {&u.px, &u.py, &u.pz};
  const std::array<const RingElem*, 3> cv = {&v.px, &v.py, &v.pz};
  std::array<RingElem, 3> out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const RingElem prod = *cu[a] * *cv[b];
      for (int c = 0; c < 3; ++c) {
        if (table[a][b][c] != 0) out[c] += RingElem(table[a][b][c]) * prod;
      }
    }
  }
  return {out[0], out[1], out[2]};
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  Rational rational(long range = 6, long max_den = 4) {
    std::uniform_int_distribution<long> n(-range, range);
    std::uniform_int_distribution<long> d(1, max_den);
    return Rational(n(gen_), d(gen_));
  }

  Poly poly(unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<Rational> c(deg(gen_) + 1);
    for (Rational& r : c) r = rational();
    return Poly(std::move(c));
  }

  RingElem ring(unsigned max_degree = 6, unsigned max_exponent = 3) {
    std::uniform_int_distribution<unsigned> e(0, max_exponent);
    const unsigned a = e(gen_);
    const unsigned b = e(gen_);
    return RingElem::make(poly(max_degree), a, b);
  }

  LoopElem loop(unsigned max_degree = 5, unsigned max_exponent = 2) {
    return {ring(max_degree, max_exponent), ring(max_degree, max_exponent),
            ring(max_degree, max_exponent)};
  }

  /// Random element of O = x Q[t] + y tQ[t] + z (t-1)Q[t].
  LoopElem onsager(unsigned max_degree = 6) {
    const Poly t = Poly::t();
    const Poly tm1 = t - Poly::constant(Rational(1));
    return {RingElem(poly(max_degree)), RingElem(t * poly(max_degree)),
            RingElem(tm1 * poly(max_degree))};
  }

  unsigned index(unsigned max) { return std::uniform_int_distribution<unsigned>(0, max)(gen_); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace onsager::testing
