#pragma once

// JSON schemas:
//   Rational   "p/q" or "p"
//   RingElem   {"num": ["c0", "c1", ...], "tpow": a, "upow": b}
//   LoopElem   {"x": RingElem, "y": RingElem, "z": RingElem}
//   PathParts  {"label": "[khij]", "kh": LoopElem, "hi": LoopElem, "ij": LoopElem}
//   OCoords    {"basis": "uu", "terms": [{"family": "A", "index": 0, "coef": "1"}, ...]}
//   Expr       {"kind": "A"} | {"kind": "B"} | {"kind": "neg", "arg": Expr}
//            | {"kind": "scale", "coef": Rational, "arg": Expr}
//            | {"kind": "sum" | "bracket", "left": Expr, "right": Expr}
// Parsers throw std::invalid_argument on schema violations.

#include <json.hpp>

#include "onsager/bases.hpp"
#include "onsager/expr.hpp"
#include "onsager/likeness.hpp"
#include "onsager/loop.hpp"

namespace onsager {

using json = nlohmann::json;

json to_json(const Rational& r);
json to_json(const RingElem& a);
json to_json(const LoopElem& u);
json to_json(const PathParts& p, const PathLabel& label);
json to_json(const OCoords& c);
json to_json(const Expr& e);

Rational rational_from_json(const json& j);
RingElem ring_from_json(const json& j);
LoopElem loop_from_json(const json& j);
PathParts parts_from_json(const json& j);
OCoords coords_from_json(const json& j);
Expr expr_from_json(const json& j);

}  // namespace onsager
