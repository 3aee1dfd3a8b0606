#include "onsager/kernels.hpp"

#include <optional>
#include <random>

#include "onsager/transitions.hpp"

namespace onsager {

namespace {

std::vector<std::pair<BasisVector, BasisVector>> bracket_pairs(BasisId b, unsigned max_sum) {
  std::vector<std::pair<BasisVector, BasisVector>> out;
  for (Family f1 : kAllFamilies) {
    for (Family f2 : kAllFamilies) {
      const unsigned lo1 = f1 == Family::Psi ? 1 : 0;
      const unsigned lo2 = f2 == Family::Psi ? 1 : 0;
      for (unsigned i = lo1; i <= max_sum; ++i) {
        for (unsigned j = lo2; i + j <= max_sum; ++j) {
          out.emplace_back(BasisVector(b, f1, i), BasisVector(b, f2, j));
        }
      }
    }
  }
  return out;
}

BracketEntry bracket_entry(const BasisVector& l, const BasisVector& r) {
  const LoopElem u = bracket(basis_elem(l), basis_elem(r));
  return {l, r, coords(u, l.basis), bracket_coords(l, r)};
}

std::vector<BasisVector> vectors_up_to(BasisId b, unsigned max_index) {
  std::vector<BasisVector> out;
  for (Family f : kAllFamilies) {
    for (unsigned i = f == Family::Psi ? 1 : 0; i <= max_index; ++i) out.emplace_back(b, f, i);
  }
  return out;
}

TransitionEntry transition_entry(BasisId src, BasisId dst, const BasisVector& target) {
  const BasisVector as_src(src, target.family, target.index);
  OCoords formula = transition(src, dst, as_src);
  OCoords semantic = coords(basis_elem(target), src);

  // Map the src expansion back into dst: each src vector w contributes
  // formula[w] * transition(dst, src, w as a dst vector).
  OCoords back(dst);
  for (const auto& [key, c] : formula.terms()) {
    back.add(transition(dst, src, BasisVector(dst, key.first, key.second)), c);
  }
  OCoords unit(dst);
  unit.add(target, Rational(1));
  return {target, std::move(formula), std::move(semantic), back == unit};
}

template <class In, class Out, class F>
std::vector<Out> map_batch(const std::vector<In>& in, Exec exec, F f) {
  std::vector<Out> out(in.size());
  const auto n = static_cast<long>(in.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) out[k] = f(in[k]);
  } else {
    for (long k = 0; k < n; ++k) out[k] = f(in[k]);
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng), den(rng));
}

RingElem random_ring_elem(std::mt19937_64& rng, unsigned max_degree, unsigned max_exponent) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<unsigned> ex(0, max_exponent);
  std::vector<Rational> c(deg(rng) + 1);
  for (Rational& r : c) r = random_rational(rng);
  const unsigned a = ex(rng);
  const unsigned b = ex(rng);
  return RingElem::make(Poly(std::move(c)), a, b);
}

}  // namespace

std::vector<BracketEntry> bracket_table(BasisId b, unsigned max_sum, Exec exec) {
  const auto pairs = bracket_pairs(b, max_sum);
  std::vector<std::optional<BracketEntry>> slots(pairs.size());
  const auto n = static_cast<long>(pairs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) slots[k] = bracket_entry(pairs[k].first, pairs[k].second);
  } else {
    for (long k = 0; k < n; ++k) slots[k] = bracket_entry(pairs[k].first, pairs[k].second);
  }
  std::vector<BracketEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<TransitionEntry> transition_table(BasisId src, BasisId dst, unsigned max_index,
                                              Exec exec) {
  const auto targets = vectors_up_to(dst, max_index);
  std::vector<std::optional<TransitionEntry>> slots(targets.size());
  const auto n = static_cast<long>(targets.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) slots[k] = transition_entry(src, dst, targets[k]);
  } else {
    for (long k = 0; k < n; ++k) slots[k] = transition_entry(src, dst, targets[k]);
  }
  std::vector<TransitionEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<LoopElem> random_loop_elems(std::size_t count, std::uint64_t seed,
                                        unsigned max_degree, unsigned max_exponent) {
  std::mt19937_64 rng(seed);
  std::vector<LoopElem> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    LoopElem u;
    u.px = random_ring_elem(rng, max_degree, max_exponent);
    u.py = random_ring_elem(rng, max_degree, max_exponent);
    u.pz = random_ring_elem(rng, max_degree, max_exponent);
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<LoopElem> random_onsager_elems(std::size_t count, std::uint64_t seed,
                                           unsigned max_index, unsigned max_terms) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_basis(0, kAllBases.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_family(0, kAllFamilies.size() - 1);
  std::uniform_int_distribution<unsigned> pick_index(0, max_index);
  std::uniform_int_distribution<unsigned> pick_terms(1, max_terms);
  std::vector<LoopElem> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const BasisId b = kAllBases[pick_basis(rng)];
    OCoords c(b);
    const unsigned terms = pick_terms(rng);
    for (unsigned m = 0; m < terms; ++m) {
      const Family f = kAllFamilies[pick_family(rng)];
      unsigned i = pick_index(rng);
      if (f == Family::Psi && i == 0) i = 1;
      c.add(BasisVector(b, f, i), random_rational(rng));
    }
    out.push_back(reassemble(c));
  }
  return out;
}

std::vector<PathParts> decompose_batch(const PathLabel& label, const std::vector<LoopElem>& elems,
                                       Exec exec) {
  return map_batch<LoopElem, PathParts>(
      elems, exec, [&label](const LoopElem& u) { return decompose_path(label, u); });
}

std::vector<PathParts> decompose_onsager_batch(const PathLabel& label,
                                               const std::vector<LoopElem>& elems, Exec exec) {
  return map_batch<LoopElem, PathParts>(
      elems, exec, [&label](const LoopElem& u) { return decompose_onsager(label, u); });
}

bool parts_valid(const PathLabel& label, const LoopElem& u, const PathParts& parts) {
  return parts.sum() == u && is_like(label.kh(), parts.kh) && is_like(label.hi(), parts.hi) &&
         is_like(label.ij(), parts.ij);
}

}  // namespace onsager
