#pragma once

// Batch kernels behind `verify` and the acceptance checks. Each kernel has a
// serial reference and an OpenMP version that produce identical output
// vectors; entries are written by index, so the order does not depend on
// the schedule.

#include <cstdint>
#include <vector>

#include "onsager/bases.hpp"
#include "onsager/likeness.hpp"
#include "onsager/loop.hpp"

namespace onsager {

enum class Exec { serial, parallel };

struct BracketEntry {
  BasisVector lhs;
  BasisVector rhs;
  OCoords actual;    // coords(bracket(basis_elem(lhs), basis_elem(rhs)))
  OCoords expected;  // bracket_coords(lhs, rhs)

  [[nodiscard]] bool ok() const { return actual == expected; }
};

/// All ordered family pairs of basis b with index sum <= max_sum.
std::vector<BracketEntry> bracket_table(BasisId b, unsigned max_sum, Exec exec);

struct TransitionEntry {
  BasisVector target;  // vector of the dst basis
  OCoords formula;     // transition(src, dst, .)
  OCoords semantic;    // coords(basis_elem(target), src)
  bool round_trip;     // transition back to dst recovers {target: 1}

  [[nodiscard]] bool ok() const { return formula == semantic && round_trip; }
};

/// Every family and index <= max_index of dst expanded over src.
std::vector<TransitionEntry> transition_table(BasisId src, BasisId dst, unsigned max_index,
                                              Exec exec);

/// Random elements of the loop algebra: numerator degree <= max_degree and
/// denominator exponents <= max_exponent per component, small rational
/// coefficients. Generation is serial and fixed by the seed.
std::vector<LoopElem> random_loop_elems(std::size_t count, std::uint64_t seed,
                                        unsigned max_degree = 8, unsigned max_exponent = 3);

/// Random elements of O as combinations of up to max_terms vectors of a
/// random basis with index <= max_index.
std::vector<LoopElem> random_onsager_elems(std::size_t count, std::uint64_t seed,
                                           unsigned max_index = 6, unsigned max_terms = 6);

std::vector<PathParts> decompose_batch(const PathLabel& label, const std::vector<LoopElem>& elems,
                                       Exec exec);
std::vector<PathParts> decompose_onsager_batch(const PathLabel& label,
                                               const std::vector<LoopElem>& elems, Exec exec);

/// True when the parts recompose to u and each part is like its slot generator.
bool parts_valid(const PathLabel& label, const LoopElem& u, const PathParts& parts);

}  // namespace onsager
