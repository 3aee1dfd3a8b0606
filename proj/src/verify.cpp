#include "onsager/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "onsager/expr.hpp"
#include "onsager/json_io.hpp"
#include "onsager/symmetry.hpp"
#include "onsager/transitions.hpp"

namespace onsager {

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Check {
  Suite suite;
  std::string name;
  std::function<void(CheckResult&)> body;
};

std::vector<BasisVector> vectors_up_to(BasisId b, unsigned max_index) {
  std::vector<BasisVector> out;
  for (Family f : kAllFamilies) {
    for (unsigned i = f == Family::Psi ? 1 : 0; i <= max_index; ++i) out.emplace_back(b, f, i);
  }
  return out;
}

std::vector<RingElem> random_ring_elems(std::size_t count, std::uint64_t seed) {
  std::vector<RingElem> out;
  for (const LoopElem& u : random_loop_elems((count + 2) / 3, seed, 4, 2)) {
    out.push_back(u.px);
    out.push_back(u.py);
    out.push_back(u.pz);
  }
  out.resize(count);
  return out;
}

std::vector<PathLabel> all_path_labels() {
  std::vector<PathLabel> out;
  for (const Perm& p : Perm::all()) {
    const auto& m = p.images();
    out.emplace_back(m[0], m[1], m[2], m[3]);
  }
  return out;
}

Expr random_expr(std::mt19937_64& rng, unsigned depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0: return expr::a();
    case 1: return expr::b();
    case 2: return expr::neg(random_expr(rng, depth - 1));
    case 3: {
      std::uniform_int_distribution<long> num(1, 7);
      std::uniform_int_distribution<long> den(1, 4);
      std::bernoulli_distribution negative(0.5);
      const long n = num(rng);
      return expr::scale(Rational(negative(rng) ? -n : n, den(rng)), random_expr(rng, depth - 1));
    }
    case 4:
    case 5: return expr::sum(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return expr::bracket(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

void add_ring_checks(std::vector<Check>& out, unsigned max_index) {
  out.push_back({Suite::ring, "ring axioms", [](CheckResult& r) {
    const auto s = random_ring_elems(60, kSeed);
    for (std::size_t k = 0; k + 2 < s.size(); k += 3) {
      const RingElem &a = s[k], &b = s[k + 1], &c = s[k + 2];
      r.record((a + b) + c == a + (b + c), "associativity of +");
      r.record((a * b) * c == a * (b * c), "associativity of *");
      r.record(a * (b + c) == a * b + a * c, "distributivity");
      r.record(a * b == b * a, "commutativity");
      r.record((a - a).is_zero(), "a - a = 0");
    }
  }});
  out.push_back({Suite::ring, "unit inverses", [](CheckResult& r) {
    for (long k = -3; k <= 3; ++k) {
      for (long m = -3; m <= 3; ++m) {
        const RingElem u = RingElem::unit(k, m);
        const auto inv = u.inverse();
        r.record(inv && u * *inv == RingElem(1), "inverse of " + u.str());
      }
    }
    r.record(!RingElem(Poly::t() + Poly::constant(Rational(1))).inverse(), "t + 1 is not a unit");
  }});
  out.push_back({Suite::ring, "substitution automorphisms", [](CheckResult& r) {
    const auto s = random_ring_elems(30, kSeed + 1);
    for (std::size_t k = 0; k + 1 < s.size(); k += 2) {
      const RingElem &a = s[k], &b = s[k + 1];
      for (RingAut g : {RingAut::phi, RingAut::phi2, RingAut::tauA}) {
        r.record(apply(g, a * b) == apply(g, a) * apply(g, b), "multiplicative");
        r.record(apply(g, a + b) == apply(g, a) + apply(g, b), "additive");
      }
      r.record(apply(RingAut::phi, apply(RingAut::phi, apply(RingAut::phi, a))) == a, "phi^3 = 1");
      r.record(apply(RingAut::tauA, apply(RingAut::tauA, a)) == a, "tauA^2 = 1");
      r.record(apply(RingAut::phi2, a) == apply(RingAut::phi, apply(RingAut::phi, a)), "phi2 = phi^2");
    }
  }});
  out.push_back({Suite::ring, "t' and t'' power identities", [max_index](CheckResult& r) {
    const RingElem t = RingElem::t();
    const RingElem tp = RingElem::t_prime();
    const RingElem tpp = RingElem::t_dprime();
    const long top = std::max<long>(1, max_index);
    for (long n = 1; n <= top; ++n) {
      RingElem partial;
      for (long j = 0; j < n; ++j) partial += tp.pow(j);
      r.record(t * tp.pow(n) == t - partial, "t(t')^" + std::to_string(n));
      r.record(t * tpp.pow(n) == tpp.pow(n) - tpp.pow(n - 1), "t(t'')^" + std::to_string(n));
    }
  }});
  out.push_back({Suite::ring, "text round trip", [](CheckResult& r) {
    for (const RingElem& a : random_ring_elems(40, kSeed + 2)) {
      r.record(RingElem::parse(a.str()) == a, "parse(str) of " + a.str());
    }
  }});
}

void add_loop_checks(std::vector<Check>& out) {
  out.push_back({Suite::loop, "antisymmetry and Jacobi", [](CheckResult& r) {
    const auto s = random_loop_elems(24, kSeed + 3, 3, 2);
    for (std::size_t k = 0; k + 2 < s.size(); k += 3) {
      const LoopElem &u = s[k], &v = s[k + 1], &w = s[k + 2];
      r.record(bracket(u, v) == -bracket(v, u), "antisymmetry");
      r.record(bracket(u, u).is_zero(), "[u, u] = 0");
      const LoopElem jac =
          bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v));
      r.record(jac.is_zero(), "Jacobi");
    }
  }});
  out.push_back({Suite::loop, "Dolan-Grady relations", [](CheckResult& r) {
    r.record(dolan_grady_holds(gen_a(), gen_b()), "A-side");
    r.record(dolan_grady_holds(gen_b(), gen_a()), "B-side");
    r.record(in_onsager(gen_a()) && in_onsager(gen_b()), "A, B in O");
  }});
  out.push_back({Suite::loop, "O is a subalgebra", [](CheckResult& r) {
    const auto s = random_onsager_elems(16, kSeed + 14);
    for (std::size_t k = 0; k + 1 < s.size(); k += 2) {
      r.record(in_onsager(bracket(s[k], s[k + 1])), "bracket of two elements of O");
    }
  }});
  out.push_back({Suite::loop, "tetrahedron relations", [](CheckResult& r) {
    for (GenLabel g : all_gen_labels()) {
      r.record(std_gen(g.reversed()) == -std_gen(g), "x_ji = -x_ij for ij = " + g.str());
      GenLabel o = g.opposite();
      r.record(dolan_grady_holds(std_gen(g), std_gen(o)), "Dolan-Grady x_" + g.str() + ", x_" + o.str());
      r.record(dolan_grady_holds(std_gen(g), std_gen(o.reversed())),
               "Dolan-Grady x_" + g.str() + ", x_" + o.reversed().str());
    }
    for (int h = 0; h < 4; ++h) {
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          if (h == i || i == j || h == j) continue;
          const LoopElem xhi = std_gen({h, i});
          const LoopElem xij = std_gen({i, j});
          r.record(bracket(xhi, xij) == Rational(2) * xhi + Rational(2) * xij,
                   "[x_hi, x_ij] for " + std::to_string(h) + std::to_string(i) + std::to_string(j));
        }
      }
    }
  }});
}

void add_symmetry_checks(std::vector<Check>& out, unsigned max_index) {
  out.push_back({Suite::symmetry, "orders and commutation", [](CheckResult& r) {
    for (const LoopElem& u : random_loop_elems(12, kSeed + 4, 4, 2)) {
      auto ap = [](BasicAut g, const LoopElem& v) { return apply_basic(g, v); };
      r.record(ap(BasicAut::rho, ap(BasicAut::rho, u)) == u, "rho^2 = 1");
      r.record(ap(BasicAut::tau, ap(BasicAut::tau, u)) == u, "tau^2 = 1");
      r.record(ap(BasicAut::mu, ap(BasicAut::mu, u)) == u, "mu^2 = 1");
      r.record(ap(BasicAut::phi, ap(BasicAut::phi, ap(BasicAut::phi, u))) == u, "phi^3 = 1");
      r.record(ap(BasicAut::rho, ap(BasicAut::tau, u)) == ap(BasicAut::tau, ap(BasicAut::rho, u)),
               "rho tau = tau rho");
    }
  }});
  out.push_back({Suite::symmetry, "word table", [](CheckResult& r) {
    for (const Perm& p : Perm::all()) r.record(evaluate(word_for(p)) == p, "word for " + p.str());
  }});
  out.push_back({Suite::symmetry, "generator permutation", [](CheckResult& r) {
    for (const Perm& p : Perm::all()) {
      for (GenLabel g : all_gen_labels()) {
        r.record(apply_perm(p, std_gen(g)) == std_gen({p(g.i), p(g.j)}),
                 p.str() + " on x_" + g.str());
      }
    }
  }});
  out.push_back({Suite::symmetry, "S4 homomorphism", [](CheckResult& r) {
    const LoopElem u = random_loop_elems(1, kSeed + 5, 3, 1).front();
    const auto perms = Perm::all();
    std::vector<LoopElem> image;
    for (const Perm& q : perms) image.push_back(apply_perm(q, u));
    for (const Perm& p : perms) {
      for (std::size_t k = 0; k < perms.size(); ++k) {
        r.record(apply_perm(p * perms[k], u) == apply_perm(p, image[k]),
                 p.str() + " * " + perms[k].str());
      }
    }
  }});
  out.push_back({Suite::symmetry, "Lie automorphisms", [](CheckResult& r) {
    const auto s = random_loop_elems(8, kSeed + 6, 3, 1);
    for (std::size_t k = 0; k + 1 < s.size(); k += 2) {
      for (BasicAut g : {BasicAut::rho, BasicAut::tau, BasicAut::mu, BasicAut::phi}) {
        r.record(apply_basic(g, bracket(s[k], s[k + 1])) ==
                     bracket(apply_basic(g, s[k]), apply_basic(g, s[k + 1])),
                 std::string(name(g)) + " preserves the bracket");
      }
    }
  }});
  out.push_back({Suite::symmetry, "G-invariance of O", [max_index](CheckResult& r) {
    for (BasisId b : kAllBases) {
      for (const BasisVector& v : vectors_up_to(b, max_index)) {
        const LoopElem u = basis_elem(v);
        r.record(in_onsager(apply_basic(BasicAut::rho, u)), "rho " + v.str());
        r.record(in_onsager(apply_basic(BasicAut::tau, u)), "tau " + v.str());
        r.record(in_onsager(apply_basic(BasicAut::rho, apply_basic(BasicAut::tau, u))),
                 "rho tau " + v.str());
      }
    }
  }});
}

void add_likeness_checks(std::vector<Check>& out, unsigned max_index) {
  out.push_back({Suite::likeness, "canonical decomposition", [](CheckResult& r) {
    const PathLabel canon = PathLabel::canonical();
    const auto s = random_loop_elems(40, kSeed + 7);
    const auto parts = decompose_batch(canon, s, Exec::serial);
    for (std::size_t k = 0; k < s.size(); ++k) {
      r.record(parts[k] == decompose_canonical(s[k]) && parts_valid(canon, s[k], parts[k]),
               "element " + std::to_string(k));
    }
  }});
  out.push_back({Suite::likeness, "all path labels", [](CheckResult& r) {
    const auto s = random_loop_elems(3, kSeed + 8, 4, 2);
    for (const PathLabel& label : all_path_labels()) {
      for (const LoopElem& u : s) {
        r.record(parts_valid(label, u, decompose_path(label, u)), "label " + label.str());
      }
    }
  }});
  out.push_back({Suite::likeness, "Onsager decompositions", [](CheckResult& r) {
    const auto s = random_onsager_elems(20, kSeed + 9);
    for (BasisId b : kAllBases) {
      const PathLabel label = path_label(b);
      const auto parts = decompose_onsager_batch(label, s, Exec::serial);
      for (std::size_t k = 0; k < s.size(); ++k) {
        const PathParts& p = parts[k];
        r.record(parts_valid(label, s[k], p) && in_onsager(p.kh) && in_onsager(p.hi) &&
                     in_onsager(p.ij),
                 label.str() + " element " + std::to_string(k));
      }
    }
  }});
  out.push_back({Suite::likeness, "slot spaces of O", [max_index](CheckResult& r) {
    const RingElem t = RingElem::t();
    for (unsigned n = 0; n <= max_index; ++n) {
      const RingElem tn = t.pow(n);
      const LoopElem b = scale(gen_b(), tn);
      const LoopElem psi = LoopElem::z((t - RingElem(1)) * tn);
      const LoopElem a = LoopElem::x(tn);
      r.record(is_like({0, 3}, b) && in_onsager(b), "B t^" + std::to_string(n));
      r.record(is_like({3, 1}, psi) && in_onsager(psi), "z (t-1) t^" + std::to_string(n));
      r.record(is_like({1, 2}, a) && in_onsager(a), "x t^" + std::to_string(n));
    }
    r.record(decompose_canonical(LoopElem{}) == PathParts{}, "zero decomposes to zero");
  }});
  out.push_back({Suite::likeness, "G-transport of decompositions", [](CheckResult& r) {
    const PathLabel canon = path_label(BasisId::uu);
    const std::vector<std::pair<std::vector<BasicAut>, BasisId>> moves = {
        {{BasicAut::rho}, BasisId::dd},
        {{BasicAut::tau}, BasisId::du},
        {{BasicAut::rho, BasicAut::tau}, BasisId::ud}};
    for (const LoopElem& u : random_onsager_elems(8, kSeed + 15)) {
      const PathParts p = decompose_onsager(canon, u);
      for (const auto& [word, target] : moves) {
        auto g = [&word](LoopElem v) {
          for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_basic(*it, v);
          return v;
        };
        const PathParts moved{g(p.kh), g(p.hi), g(p.ij)};
        r.record(moved == decompose_onsager(path_label(target), g(u)),
                 "transport to " + std::string(bracket_label(target)));
      }
    }
  }});
  out.push_back({Suite::likeness, "like-basis elements", [max_index](CheckResult& r) {
    const unsigned top = std::max(1U, max_index);
    for (GenLabel g : all_gen_labels()) {
      r.record(is_like(g, like_basis_elem(g, LikeKind::one, 0)), "x_" + g.str());
      for (LikeKind kind : {LikeKind::t_pow, LikeKind::tp_pow, LikeKind::tpp_pow}) {
        for (unsigned n = 1; n <= top; ++n) {
          const LoopElem u = like_basis_elem(g, kind, n);
          r.record(is_like(g, u), "x_" + g.str() + " power " + std::to_string(n));
          r.record(is_like(g, u) == is_like_reversed_opposite(g, u), "orderings agree");
        }
      }
    }
    for (const LoopElem& u : random_loop_elems(6, kSeed + 10, 3, 1)) {
      for (GenLabel g : all_gen_labels()) {
        r.record(is_like(g, u) == is_like_reversed_opposite(g, u), "orderings agree on random");
      }
    }
  }});
}

void add_bases_checks(std::vector<Check>& out, unsigned max_index) {
  for (BasisId b : kAllBases) {
    out.push_back({Suite::bases, "bracket table " + std::string(arrow_code(b)),
                   [b, max_index](CheckResult& r) {
      for (const BracketEntry& e : bracket_table(b, max_index, Exec::serial)) {
        r.record(e.ok(), "[" + e.lhs.str() + ", " + e.rhs.str() + "]");
      }
    }});
    out.push_back({Suite::bases, "coordinates " + std::string(arrow_code(b)),
                   [b, max_index](CheckResult& r) {
      for (const BasisVector& v : vectors_up_to(b, max_index)) {
        OCoords unit(b);
        unit.add(v, Rational(1));
        const LoopElem u = basis_elem(v);
        r.record(in_onsager(u), v.str() + " in O");
        r.record(coords(u, b) == unit, "coords of " + v.str());
      }
      for (const LoopElem& u : random_onsager_elems(10, kSeed + 11)) {
        r.record(reassemble(coords(u, b)) == u, "reassemble(coords)");
      }
      const auto [sa, sb] = seed_signs(b);
      const auto [a0, b0] = basis_seeds(b);
      r.record(a0 == Rational(sa) * gen_a() && b0 == Rational(sb) * gen_b(), "seeds");
    }});
    out.push_back({Suite::bases, "recursion " + std::string(arrow_code(b)),
                   [b, max_index](CheckResult& r) {
      RecursiveBasis rec(b);
      for (const BasisVector& v : vectors_up_to(b, max_index)) {
        r.record(evaluate(rec.get(v)) == basis_elem(v), v.str());
      }
    }});
  }
}

void add_transition_checks(std::vector<Check>& out, unsigned max_index) {
  for (BasisId src : kAllBases) {
    for (BasisId dst : kAllBases) {
      if (src == dst) continue;
      out.push_back({Suite::transitions,
                     "transition " + std::string(arrow_code(src)) + " -> " +
                         std::string(arrow_code(dst)),
                     [src, dst, max_index](CheckResult& r) {
        for (const TransitionEntry& e : transition_table(src, dst, max_index, Exec::serial)) {
          r.record(e.formula == e.semantic, "formula for " + e.target.str());
          r.record(e.round_trip, "round trip of " + e.target.str());
        }
      }});
    }
  }
  out.push_back({Suite::transitions, "composite routes", [max_index](CheckResult& r) {
    for (const BasisVector& v : vectors_up_to(BasisId::uu, max_index)) {
      const OCoords via_dd = transition_via(BasisId::uu, BasisId::dd, BasisId::ud, v);
      const OCoords via_du = transition_via(BasisId::uu, BasisId::du, BasisId::ud, v);
      r.record(via_dd == via_du, "routes agree for " + v.str());
      r.record(via_dd == transition(BasisId::uu, BasisId::ud, v), "direct for " + v.str());
    }
  }});
  out.push_back({Suite::transitions, "automorphism images", [max_index](CheckResult& r) {
    for (BasisId b : kAllBases) {
      for (const BasisVector& v : vectors_up_to(b, max_index)) {
        const LoopElem u = basis_elem(v);
        for (BasicAut g : {BasicAut::rho, BasicAut::tau}) {
          r.record(apply_basic(g, u) == basis_elem(aut_image(g, v)),
                   std::string(name(g)) + " on " + v.str());
        }
        r.record(aut_image(BasicAut::rho, aut_image(BasicAut::tau, v)) ==
                     aut_image(BasicAut::tau, aut_image(BasicAut::rho, v)),
                 "square commutes at " + v.str());
      }
    }
  }});
}

void add_expr_checks(std::vector<Check>& out, unsigned max_index) {
  out.push_back({Suite::expr, "render/parse round trip", [](CheckResult& r) {
    std::mt19937_64 rng(kSeed + 12);
    for (int k = 0; k < 40; ++k) {
      const Expr e = random_expr(rng, 1 + k % 8);
      const LoopElem u = evaluate(e);
      r.record(evaluate(parse_expr(render(e))) == u, "text: " + render(e));
      r.record(evaluate(expr_from_json(to_json(e))) == u, "json: " + render(e));
      r.record(in_onsager(u), "in O: " + render(e));
    }
  }});
  out.push_back({Suite::expr, "evaluation is a homomorphism", [](CheckResult& r) {
    std::mt19937_64 rng(kSeed + 13);
    for (int k = 0; k < 20; ++k) {
      const Expr e1 = random_expr(rng, 3);
      const Expr e2 = random_expr(rng, 3);
      r.record(evaluate(expr::bracket(e1, e2)) == bracket(evaluate(e1), evaluate(e2)), "bracket");
      r.record(evaluate(expr::sum(e1, e2)) == evaluate(e1) + evaluate(e2), "sum");
    }
  }});
  out.push_back({Suite::expr, "expanded recursion", [max_index](CheckResult& r) {
    const unsigned top = std::min(max_index, 4U);
    for (BasisId b : kAllBases) {
      RecursiveBasis rec(b);
      for (const BasisVector& v : vectors_up_to(b, top)) {
        r.record(evaluate(to_expr(rec.expanded(v))) == basis_elem(v), v.str());
      }
    }
  }});
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::ring: return "ring";
    case Suite::loop: return "loop";
    case Suite::symmetry: return "symmetry";
    case Suite::likeness: return "likeness";
    case Suite::bases: return "bases";
    case Suite::transitions: return "transitions";
    case Suite::expr: return "expr";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::all, Suite::ring, Suite::loop, Suite::symmetry, Suite::likeness,
                  Suite::bases, Suite::transitions, Suite::expr}) {
    if (text == suite_name(s)) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

void CheckResult::record(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
  } else {
    if (failed == 0) first_failure = what;
    ++failed;
  }
}

std::size_t VerifyReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed;
  return n;
}

std::size_t VerifyReport::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

VerifyReport run_verify(unsigned max_index, Suite suite, Exec exec) {
  std::vector<Check> all;
  add_ring_checks(all, max_index);
  add_loop_checks(all);
  add_symmetry_checks(all, max_index);
  add_likeness_checks(all, max_index);
  add_bases_checks(all, max_index);
  add_transition_checks(all, max_index);
  add_expr_checks(all, max_index);

  std::vector<Check> selected;
  for (auto& c : all) {
    if (suite == Suite::all || c.suite == suite) selected.push_back(std::move(c));
  }

  VerifyReport report;
  report.checks.resize(selected.size());
  const auto n = static_cast<long>(selected.size());
  auto run_one = [&](long k) {
    CheckResult& r = report.checks[k];
    r.suite = selected[k].suite;
    r.name = selected[k].name;
    try {
      selected[k].body(r);
    } catch (const std::exception& ex) {
      r.record(false, std::string("exception: ") + ex.what());
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) run_one(k);
  } else {
    for (long k = 0; k < n; ++k) run_one(k);
  }
  return report;
}

}  // namespace onsager
