#include "onsager/json_io.hpp"

#include <stdexcept>

namespace onsager {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("json: missing field '") + key + "'");
  }
  return j.at(key);
}

unsigned natural(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw std::invalid_argument(std::string("json: '") + what + "' must be a natural number");
  }
  return j.get<unsigned>();
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const RingElem& a) {
  json num = json::array();
  for (const Rational& c : a.num().coeffs()) num.push_back(to_json(c));
  return {{"num", num}, {"tpow", a.tpow()}, {"upow", a.upow()}};
}

json to_json(const LoopElem& u) {
  return {{"x", to_json(u.px)}, {"y", to_json(u.py)}, {"z", to_json(u.pz)}};
}

json to_json(const PathParts& p, const PathLabel& label) {
  return {{"label", label.str()}, {"kh", to_json(p.kh)}, {"hi", to_json(p.hi)}, {"ij", to_json(p.ij)}};
}

json to_json(const OCoords& c) {
  json terms = json::array();
  for (const auto& [key, value] : c.terms()) {
    terms.push_back({{"family", std::string(family_name(key.first))},
                     {"index", key.second},
                     {"coef", to_json(value)}});
  }
  return {{"basis", std::string(arrow_code(c.basis()))}, {"terms", terms}};
}

json to_json(const Expr& e) {
  switch (e->kind) {
    case ExprKind::gen_a: return {{"kind", "A"}};
    case ExprKind::gen_b: return {{"kind", "B"}};
    case ExprKind::neg: return {{"kind", "neg"}, {"arg", to_json(e->left)}};
    case ExprKind::scale:
      return {{"kind", "scale"}, {"coef", to_json(e->coef)}, {"arg", to_json(e->left)}};
    case ExprKind::sum:
      return {{"kind", "sum"}, {"left", to_json(e->left)}, {"right", to_json(e->right)}};
    case ExprKind::bracket:
      return {{"kind", "bracket"}, {"left", to_json(e->left)}, {"right", to_json(e->right)}};
  }
  return nullptr;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("json: rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

RingElem ring_from_json(const json& j) {
  const json& num = field(j, "num");
  if (!num.is_array()) throw std::invalid_argument("json: 'num' must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(num.size());
  for (const json& c : num) coeffs.push_back(rational_from_json(c));
  return RingElem::make(Poly(std::move(coeffs)), natural(field(j, "tpow"), "tpow"),
                        natural(field(j, "upow"), "upow"));
}

LoopElem loop_from_json(const json& j) {
  return {ring_from_json(field(j, "x")), ring_from_json(field(j, "y")),
          ring_from_json(field(j, "z"))};
}

PathParts parts_from_json(const json& j) {
  return {loop_from_json(field(j, "kh")), loop_from_json(field(j, "hi")),
          loop_from_json(field(j, "ij"))};
}

OCoords coords_from_json(const json& j) {
  const BasisId b = parse_basis(field(j, "basis").get<std::string>());
  OCoords out(b);
  for (const json& term : field(j, "terms")) {
    out.add(BasisVector(b, parse_family(field(term, "family").get<std::string>()),
                        natural(field(term, "index"), "index")),
            rational_from_json(field(term, "coef")));
  }
  return out;
}

Expr expr_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "A") return expr::a();
  if (kind == "B") return expr::b();
  if (kind == "neg") return expr::neg(expr_from_json(field(j, "arg")));
  if (kind == "scale") {
    return expr::scale(rational_from_json(field(j, "coef")), expr_from_json(field(j, "arg")));
  }
  if (kind == "sum") return expr::sum(expr_from_json(field(j, "left")), expr_from_json(field(j, "right")));
  if (kind == "bracket") {
    return expr::bracket(expr_from_json(field(j, "left")), expr_from_json(field(j, "right")));
  }
  throw std::invalid_argument("json: unknown expression kind '" + kind + "'");
}

}  // namespace onsager
