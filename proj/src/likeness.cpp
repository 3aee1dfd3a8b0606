#include "onsager/likeness.hpp"

#include <cctype>
#include <stdexcept>

#include "onsager/bases.hpp"
#include "onsager/symmetry.hpp"

namespace onsager {

PathLabel::PathLabel(int k, int h, int i, int j) : idx_{k, h, i, j} {
  std::array<bool, 4> seen{};
  for (int v : idx_) {
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("PathLabel: need four distinct indices in {0,1,2,3}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PathLabel PathLabel::parse(std::string_view text) {
  if (text.size() == 6 && text.front() == '[' && text.back() == ']') text = text.substr(1, 4);
  if (text.size() != 4) throw std::invalid_argument("PathLabel: expected four digits, e.g. 0312");
  std::array<int, 4> v{};
  for (std::size_t n = 0; n < 4; ++n) {
    if (!std::isdigit(static_cast<unsigned char>(text[n]))) {
      throw std::invalid_argument("PathLabel: expected digits 0..3");
    }
    v[n] = text[n] - '0';
  }
  return {v[0], v[1], v[2], v[3]};
}

std::string PathLabel::str() const {
  std::string s = "[";
  for (int v : idx_) s += static_cast<char>('0' + v);
  return s + "]";
}

bool is_like(GenLabel g, const LoopElem& u) {
  if (!bracket(std_gen(g), u).is_zero()) return false;
  return dolan_grady_holds(std_gen(g.opposite()), u);
}

bool is_like_reversed_opposite(GenLabel g, const LoopElem& u) {
  if (!bracket(std_gen(g), u).is_zero()) return false;
  return dolan_grady_holds(std_gen(g.opposite().reversed()), u);
}

LoopElem like_basis_elem(GenLabel g, LikeKind kind, unsigned n) {
  if (kind != LikeKind::one && n == 0) {
    throw std::invalid_argument("like_basis_elem: powered kinds need n >= 1");
  }
  const LoopElem base = std_gen(g);
  switch (kind) {
    case LikeKind::one: return base;
    case LikeKind::t_pow: return scale(base, RingElem::t().pow(n));
    case LikeKind::tp_pow: return scale(base, RingElem::t_prime().pow(n));
    case LikeKind::tpp_pow: return scale(base, RingElem::t_dprime().pow(n));
  }
  throw std::invalid_argument("like_basis_elem: unknown kind");
}

PathParts decompose_canonical(const LoopElem& u) {
  const RingElem t_inv = RingElem::unit(-1, 0);
  const RingElem a = u.py * t_inv;
  PathParts parts;
  parts.kh = scale(gen_b(), a);
  parts.hi = LoopElem::z(u.pz - (RingElem::t() - RingElem(1)) * a);
  parts.ij = LoopElem::x(u.px);
  return parts;
}

PathParts decompose_path(const PathLabel& label, const LoopElem& u) {
  const auto& d = label.indices();
  // beta sends the canonical path (0,3,1,2) to (k,h,i,j).
  std::array<int, 4> img{};
  img[0] = d[0];
  img[3] = d[1];
  img[1] = d[2];
  img[2] = d[3];
  const Perm beta(img);
  if (beta.is_identity()) return decompose_canonical(u);
  const PathParts pre = decompose_canonical(apply_perm(beta.inverse(), u));
  return {apply_perm(beta, pre.kh), apply_perm(beta, pre.hi), apply_perm(beta, pre.ij)};
}

PathParts decompose_onsager(const PathLabel& label, const LoopElem& u) {
  for (BasisId b : kAllBases) {
    if (path_label(b) != label) continue;
    const OCoords c = coords(u, b);
    OCoords kh(b);
    OCoords hi(b);
    OCoords ij(b);
    for (const auto& [key, value] : c.terms()) {
      const BasisVector v(b, key.first, key.second);
      switch (key.first) {
        case Family::B: kh.add(v, value); break;
        case Family::Psi: hi.add(v, value); break;
        case Family::A: ij.add(v, value); break;
      }
    }
    return {reassemble(kh), reassemble(hi), reassemble(ij)};
  }
  throw std::invalid_argument("decompose_onsager: label " + label.str() +
                              " is not one of [0312], [3021], [0321], [3012]");
}

}  // namespace onsager
