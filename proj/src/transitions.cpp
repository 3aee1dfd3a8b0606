#include "onsager/transitions.hpp"

#include <stdexcept>

namespace onsager {

namespace {

BasisId rho_partner(BasisId b) {
  switch (b) {
    case BasisId::uu: return BasisId::dd;
    case BasisId::dd: return BasisId::uu;
    case BasisId::du: return BasisId::ud;
    case BasisId::ud: return BasisId::du;
  }
  throw std::invalid_argument("rho_partner: unknown basis");
}

BasisId tau_partner(BasisId b) {
  switch (b) {
    case BasisId::uu: return BasisId::du;
    case BasisId::du: return BasisId::uu;
    case BasisId::dd: return BasisId::ud;
    case BasisId::ud: return BasisId::dd;
  }
  throw std::invalid_argument("tau_partner: unknown basis");
}

Rational alternating(unsigned i, bool odd_shift) {
  const bool negative = ((i + (odd_shift ? 1U : 0U)) % 2U) == 1U;
  return negative ? Rational(-1) : Rational(1);
}

// rho-edges: A' = -A, B' = -B, psi'_{i+1} = -A_i - B_i + psi_{i+1}.
OCoords horizontal(BasisId src, const BasisVector& v) {
  OCoords out(src);
  switch (v.family) {
    case Family::A: out.add(BasisVector(src, Family::A, v.index), Rational(-1)); break;
    case Family::B: out.add(BasisVector(src, Family::B, v.index), Rational(-1)); break;
    case Family::Psi:
      out.add(BasisVector(src, Family::A, v.index - 1), Rational(-1));
      out.add(BasisVector(src, Family::B, v.index - 1), Rational(-1));
      out.add(BasisVector(src, Family::Psi, v.index), Rational(1));
      break;
  }
  return out;
}

// tau-edges, alternating binomial sums:
//   A'_i       = (-1)^{i+1} sum_j C(i,j) A_j
//   B'_i       = (-1)^i     sum_j C(i,j) B_j
//   psi'_{i+1} = (-1)^i     sum_j C(i,j) B_j + (-1)^{i+1} sum_j C(i,j) psi_{j+1}
OCoords vertical(BasisId src, const BasisVector& v) {
  OCoords out(src);
  const unsigned i = v.family == Family::Psi ? v.index - 1 : v.index;
  for (unsigned j = 0; j <= i; ++j) {
    const Rational c = Rational::binomial(i, j);
    switch (v.family) {
      case Family::A: out.add(BasisVector(src, Family::A, j), alternating(i, true) * c); break;
      case Family::B: out.add(BasisVector(src, Family::B, j), alternating(i, false) * c); break;
      case Family::Psi:
        out.add(BasisVector(src, Family::B, j), alternating(i, false) * c);
        out.add(BasisVector(src, Family::Psi, j + 1), alternating(i, true) * c);
        break;
    }
  }
  return out;
}

}  // namespace

BasisVector aut_image(BasicAut g, const BasisVector& v) {
  switch (g) {
    case BasicAut::rho: return {rho_partner(v.basis), v.family, v.index};
    case BasicAut::tau: return {tau_partner(v.basis), v.family, v.index};
    default: break;
  }
  throw std::invalid_argument("aut_image: only rho and tau act on the four bases");
}

bool adjacent(BasisId src, BasisId dst) {
  return dst == rho_partner(src) || dst == tau_partner(src);
}

OCoords transition(BasisId src, BasisId dst, const BasisVector& v) {
  if (v.basis != src) throw std::invalid_argument("transition: vector does not belong to src");
  if (src == dst) {
    OCoords out(src);
    out.add(v, Rational(1));
    return out;
  }
  if (dst == rho_partner(src)) return horizontal(src, v);
  if (dst == tau_partner(src)) return vertical(src, v);
  return transition_via(src, rho_partner(src), dst, v);
}

OCoords transition_via(BasisId src, BasisId mid, BasisId dst, const BasisVector& v) {
  if (v.basis != src) throw std::invalid_argument("transition: vector does not belong to src");
  const OCoords over_mid = transition(mid, dst, BasisVector(mid, v.family, v.index));
  OCoords out(src);
  for (const auto& [key, c] : over_mid.terms()) {
    out.add(transition(src, mid, BasisVector(src, key.first, key.second)), c);
  }
  return out;
}

}  // namespace onsager
