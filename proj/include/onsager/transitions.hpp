#pragma once

#include "onsager/bases.hpp"
#include "onsager/symmetry.hpp"

namespace onsager {

/// The partner vector under rho (uu <-> dd, du <-> ud) or tau (uu <-> du,
/// dd <-> ud). Family and index are preserved. Only rho and tau are accepted.
BasisVector aut_image(BasicAut g, const BasisVector& v);

/// True when src and dst are joined by an edge of the square
/// uu -rho- dd, du -rho- ud, uu -tau- du, dd -tau- ud.
bool adjacent(BasisId src, BasisId dst);

/// Expands the dst-basis vector with v's family and index over the src basis.
///
/// Direction convention: transition(src, dst, v) answers "what is
/// basis_elem({dst, v.family, v.index}) in src coordinates". v must belong
/// to src; src == dst gives {v: 1}. The two diagonal pairs are composed
/// through the rho-partner of src.
OCoords transition(BasisId src, BasisId dst, const BasisVector& v);

/// The same map routed explicitly through an intermediate basis:
/// sum_w transition(mid, dst, v)[w] * transition(src, mid, w).
OCoords transition_via(BasisId src, BasisId mid, BasisId dst, const BasisVector& v);

}  // namespace onsager
