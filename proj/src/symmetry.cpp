#include "onsager/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

namespace onsager {

std::string_view name(BasicAut g) {
  switch (g) {
    case BasicAut::rho: return "rho";
    case BasicAut::tau: return "tau";
    case BasicAut::mu: return "mu";
    case BasicAut::phi: return "phi";
  }
  return "?";
}

Perm::Perm(std::array<int, 4> images) : images_(images) {
  std::array<bool, 4> seen{};
  for (int v : images_) {
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Perm: images must be a permutation of 0..3");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::of(BasicAut g) {
  switch (g) {
    case BasicAut::rho: return Perm({3, 2, 1, 0});
    case BasicAut::tau: return Perm({0, 2, 1, 3});
    case BasicAut::mu: return Perm({1, 0, 3, 2});
    case BasicAut::phi: return Perm({0, 2, 3, 1});
  }
  throw std::invalid_argument("Perm::of: unknown generator");
}

Perm Perm::parse(std::string_view text) {
  std::array<int, 4> img{0, 1, 2, 3};
  std::array<bool, 4> used{};
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip();
    if (pos != text.size()) throw std::invalid_argument("Perm::parse: trailing input after 'e'");
    return {};
  }
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("Perm::parse: expected '('");
    ++pos;
    std::vector<int> cycle;
    while (pos < text.size() && text[pos] != ')') {
      const char c = text[pos++];
      if (c == ' ' || c == ',') continue;
      if (c < '0' || c > '3') throw std::invalid_argument("Perm::parse: points must be 0..3");
      const int v = c - '0';
      if (used[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("Perm::parse: point repeated across cycles");
      }
      used[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    if (pos == text.size()) throw std::invalid_argument("Perm::parse: unterminated cycle");
    ++pos;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip();
  }
  return Perm(img);
}

std::vector<Perm> Perm::all() {
  std::array<int, 4> a{0, 1, 2, 3};
  std::vector<Perm> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

Perm Perm::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Perm(inv);
}

Perm operator*(const Perm& p, const Perm& q) {
  std::array<int, 4> r{};
  for (int i = 0; i < 4; ++i) r[static_cast<std::size_t>(i)] = p(q(i));
  return Perm(r);
}

std::string Perm::str() const {
  std::string out;
  std::array<bool, 4> done{};
  for (int start = 0; start < 4; ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += "(";
    int v = start;
    do {
      out += static_cast<char>('0' + v);
      done[static_cast<std::size_t>(v)] = true;
      v = (*this)(v);
    } while (v != start);
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Perm evaluate(const GenWord& word) {
  Perm p;
  for (BasicAut g : word) p = p * Perm::of(g);
  return p;
}

namespace {

std::map<Perm, GenWord> build_word_table() {
  constexpr BasicAut letters[] = {BasicAut::rho, BasicAut::tau, BasicAut::mu, BasicAut::phi};
  std::map<Perm, GenWord> table;
  std::deque<Perm> queue;
  table.emplace(Perm{}, GenWord{});
  queue.push_back(Perm{});
  // Words leave the queue in (length, lexicographic) order, so the first
  // word reaching each element is the least shortest one.
  while (!queue.empty()) {
    const Perm p = queue.front();
    queue.pop_front();
    const GenWord base = table.at(p);
    for (BasicAut g : letters) {
      const Perm next = p * Perm::of(g);
      if (table.contains(next)) continue;
      GenWord w = base;
      w.push_back(g);
      table.emplace(next, std::move(w));
      queue.push_back(next);
    }
  }
  return table;
}

}  // namespace

const GenWord& word_for(const Perm& p) {
  static const std::map<Perm, GenWord> table = build_word_table();
  return table.at(p);
}

LoopElem apply_basic(BasicAut g, const LoopElem& u) {
  const RingElem t = RingElem::t();
  const RingElem one(1);
  switch (g) {
    case BasicAut::rho: {
      // rho(x) = -x, rho(y) = (x + z(1-t)) t^-1, rho(z) = (x + y t)(1-t)^-1
      const LoopElem ry = scale(LoopElem{one, {}, one - t}, RingElem::unit(-1, 0));
      const LoopElem rz = scale(LoopElem{one, t, {}}, -RingElem::unit(0, -1));
      return scale(LoopElem::x(-1), u.px) + scale(ry, u.py) + scale(rz, u.pz);
    }
    case BasicAut::tau: {
      // x -> -x, y -> -z, z -> -y, twisted by t -> 1 - t
      return {-apply(RingAut::tauA, u.px), -apply(RingAut::tauA, u.pz),
              -apply(RingAut::tauA, u.py)};
    }
    case BasicAut::mu: {
      // mu(x) = y t + z(t-1), mu(y) = -y, mu(z) = (x + y t)(t-1)^-1
      const LoopElem mx{{}, t, t - one};
      const LoopElem mz = scale(LoopElem{one, t, {}}, RingElem::unit(0, -1));
      return scale(mx, u.px) + scale(LoopElem::y(-1), u.py) + scale(mz, u.pz);
    }
    case BasicAut::phi: {
      // x -> y -> z -> x, twisted by t -> 1 - t^-1
      return {apply(RingAut::phi, u.pz), apply(RingAut::phi, u.px), apply(RingAut::phi, u.py)};
    }
  }
  throw std::invalid_argument("apply_basic: unknown generator");
}

LoopElem apply_perm(const Perm& p, const LoopElem& u) {
  const GenWord& w = word_for(p);
  LoopElem r = u;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_basic(*it, r);
  return r;
}

}  // namespace onsager
