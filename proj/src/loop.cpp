#include "onsager/loop.hpp"

#include <algorithm>
#include <stdexcept>

namespace onsager {

LoopElem& LoopElem::operator+=(const LoopElem& o) {
  px += o.px;
  py += o.py;
  pz += o.pz;
  return *this;
}

LoopElem& LoopElem::operator-=(const LoopElem& o) {
  px -= o.px;
  py -= o.py;
  pz -= o.pz;
  return *this;
}

LoopElem operator*(const Rational& c, const LoopElem& u) {
  const RingElem s(c);
  return {s * u.px, s * u.py, s * u.pz};
}

LoopElem bracket(const LoopElem& u, const LoopElem& v) {
  const RingElem p = u.px * v.py - v.px * u.py;
  const RingElem q = u.py * v.pz - v.py * u.pz;
  const RingElem r = u.pz * v.px - v.pz * u.px;
  const RingElem two(2);
  return {two * (p + r), two * (p + q), two * (q + r)};
}

LoopElem scale(const LoopElem& u, const RingElem& a) { return {u.px * a, u.py * a, u.pz * a}; }

GenLabel::GenLabel(int i_, int j_) : i(i_), j(j_) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) {
    throw std::invalid_argument("GenLabel: need distinct indices in {0,1,2,3}");
  }
}

GenLabel GenLabel::opposite() const {
  int rest[2];
  int n = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != i && k != j) rest[n++] = k;
  }
  return {rest[0], rest[1]};
}

std::string GenLabel::str() const { return std::to_string(i) + std::to_string(j); }

std::array<GenLabel, 12> all_gen_labels() {
  return {GenLabel{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3},
          {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 2}};
}

LoopElem std_gen(GenLabel g) {
  const RingElem t = RingElem::t();
  const RingElem one(1);
  auto base = [&](int i, int j) -> std::optional<LoopElem> {
    if (i == 1 && j == 2) return LoopElem::x();
    if (i == 2 && j == 3) return LoopElem::y();
    if (i == 3 && j == 1) return LoopElem::z();
    if (i == 0 && j == 3) return LoopElem{{}, t, t - one};
    if (i == 0 && j == 1) {
      const RingElem tp = RingElem::t_prime();
      return LoopElem{tp - one, {}, tp};
    }
    if (i == 0 && j == 2) {
      const RingElem tpp = RingElem::t_dprime();
      return LoopElem{tpp, tpp - one, {}};
    }
    return std::nullopt;
  };
  if (auto u = base(g.i, g.j)) return *u;
  return -*base(g.j, g.i);
}

LoopElem gen_a() { return std_gen({1, 2}); }
LoopElem gen_b() { return std_gen({0, 3}); }

bool dolan_grady_holds(const LoopElem& u, const LoopElem& v) {
  const LoopElem uv = bracket(u, v);
  return bracket(u, bracket(u, uv)) == Rational(4) * uv;
}

bool in_onsager(const LoopElem& u) {
  return in_subset(u.px, RingSubset::poly) && in_subset(u.py, RingSubset::t_poly) &&
         in_subset(u.pz, RingSubset::tm1_poly);
}

namespace {

bool single_positive_monomial(const RingElem& a) {
  if (!a.is_polynomial()) return false;
  const auto c = a.num().coeffs();
  return std::count_if(c.begin(), c.end(), [](const Rational& r) { return !r.is_zero(); }) == 1;
}

}  // namespace

std::string to_string(const LoopElem& u, RenderOptions opts) {
  const std::string tensor = opts.ascii ? "(x)" : "⊗";
  std::string out;
  const std::pair<char, const RingElem*> parts[] = {{'x', &u.px}, {'y', &u.py}, {'z', &u.pz}};
  for (const auto& [name, coef] : parts) {
    if (coef->is_zero()) continue;
    bool negative = false;
    std::string body;
    if (single_positive_monomial(*coef)) {
      negative = coef->num().coeffs().back().sign() < 0;
      body = (negative ? -*coef : *coef).str();
    } else {
      body = "(" + coef->str() + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += name + tensor + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace onsager
