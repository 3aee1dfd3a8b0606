#include "onsager/expr.hpp"

#include <cctype>
#include <optional>
#include <unordered_map>

namespace onsager {

namespace expr {

Expr a() {
  static const Expr node = std::make_shared<const ExprNode>(ExprNode{ExprKind::gen_a, {}, {}, {}});
  return node;
}

Expr b() {
  static const Expr node = std::make_shared<const ExprNode>(ExprNode{ExprKind::gen_b, {}, {}, {}});
  return node;
}

Expr neg(Expr e) {
  return std::make_shared<const ExprNode>(ExprNode{ExprKind::neg, {}, std::move(e), {}});
}

Expr scale(const Rational& c, Expr e) {
  if (c.is_zero()) throw std::invalid_argument("expr::scale: zero coefficient");
  return std::make_shared<const ExprNode>(ExprNode{ExprKind::scale, c, std::move(e), {}});
}

Expr sum(Expr l, Expr r) {
  return std::make_shared<const ExprNode>(ExprNode{ExprKind::sum, {}, std::move(l), std::move(r)});
}

Expr difference(Expr l, Expr r) { return sum(std::move(l), neg(std::move(r))); }

Expr bracket(Expr l, Expr r) {
  return std::make_shared<const ExprNode>(
      ExprNode{ExprKind::bracket, {}, std::move(l), std::move(r)});
}

}  // namespace expr

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t n = 0; n < expected.size(); ++n) {
    if (n > 0) out += ", ";
    out += expected[n];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": expected one of " + join_expected(expected) + "; found " + found),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Expr run() {
    Expr e = expression();
    skip_ws();
    if (!at_end()) fail({"'+'", "'-'", "end of input"});
    return e;
  }

 private:
  Expr expression() {
    skip_ws();
    int sign = 1;
    if (take_sign(sign)) skip_ws();
    Expr acc = term();
    if (sign < 0) acc = expr::neg(acc);
    while (true) {
      skip_ws();
      int op = 1;
      if (!take_sign(op)) break;
      Expr rhs = term();
      acc = op > 0 ? expr::sum(acc, rhs) : expr::difference(acc, rhs);
    }
    return acc;
  }

  Expr term() {
    skip_ws();
    std::optional<Rational> coef;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    Expr f = factor(coef.has_value());
    while (true) {
      skip_ws();
      if (peek() != '/') break;
      ++pos_;
      skip_ws();
      const Rational d = integer();
      if (d.is_zero()) fail_at(pos_ - 1, {"nonzero integer"});
      f = expr::scale(Rational(1) / d, f);
    }
    if (coef) {
      if (coef->is_zero()) return expr::difference(f, f);
      f = expr::scale(*coef, f);
    }
    return f;
  }

  Expr factor(bool after_coef) {
    skip_ws();
    const char c = peek();
    if (c == 'A') {
      ++pos_;
      return expr::a();
    }
    if (c == 'B') {
      ++pos_;
      return expr::b();
    }
    if (c == '[') {
      ++pos_;
      Expr l = expression();
      skip_ws();
      expect(',');
      Expr r = expression();
      skip_ws();
      expect(']');
      return expr::bracket(l, r);
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expression();
      skip_ws();
      expect(')');
      return inner;
    }
    if (after_coef) fail({"'A'", "'B'", "'['", "'('"});
    fail({"'A'", "'B'", "'['", "'('", "rational"});
  }

  Rational rational() {
    Rational n = integer();
    if (peek() == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      const std::size_t at = pos_;
      const Rational d = integer();
      if (d.is_zero()) fail_at(at, {"positive integer"});
      n /= d;
    }
    return n;
  }

  Rational integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail({"integer"});
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  bool take_sign(int& sign) {
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      sign = -1;
      pos_ += 3;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (peek() != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    fail_at(pos_, std::move(expected));
  }

  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected) const {
    const std::string found =
        at >= s_.size() ? std::string("end of input") : "'" + std::string(1, s_[at]) + "'";
    throw ParseError(at, std::move(expected), found);
  }

  [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).run(); }

namespace {

LoopElem eval_memo(const Expr& e, std::unordered_map<const ExprNode*, LoopElem>& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  LoopElem r;
  switch (e->kind) {
    case ExprKind::gen_a: r = gen_a(); break;
    case ExprKind::gen_b: r = gen_b(); break;
    case ExprKind::neg: r = -eval_memo(e->left, memo); break;
    case ExprKind::scale: r = e->coef * eval_memo(e->left, memo); break;
    case ExprKind::sum: r = eval_memo(e->left, memo) + eval_memo(e->right, memo); break;
    case ExprKind::bracket: r = bracket(eval_memo(e->left, memo), eval_memo(e->right, memo)); break;
  }
  memo.emplace(e.get(), r);
  return r;
}

}  // namespace

LoopElem evaluate(const Expr& e) {
  std::unordered_map<const ExprNode*, LoopElem> memo;
  return eval_memo(e, memo);
}

bool expr_equal(const Expr& e1, const Expr& e2) { return evaluate(e1) == evaluate(e2); }

namespace {

void flatten_sum(const Expr& e, std::vector<Expr>& out) {
  if (e->kind == ExprKind::sum) {
    flatten_sum(e->left, out);
    flatten_sum(e->right, out);
  } else {
    out.push_back(e);
  }
}

std::string atom(const Expr& e);

// Splits a summand into its sign and unsigned body.
std::pair<bool, std::string> signed_term(const Expr& e) {
  if (e->kind == ExprKind::neg) return {true, atom(e->left)};
  if (e->kind == ExprKind::scale) {
    const Rational mag = abs(e->coef);
    return {e->coef.sign() < 0, mag.str() + " " + atom(e->left)};
  }
  return {false, render(e)};
}

std::string atom(const Expr& e) {
  switch (e->kind) {
    case ExprKind::gen_a:
    case ExprKind::gen_b:
    case ExprKind::bracket:
      return render(e);
    default:
      return "(" + render(e) + ")";
  }
}

}  // namespace

std::string render(const Expr& e) {
  switch (e->kind) {
    case ExprKind::gen_a: return "A";
    case ExprKind::gen_b: return "B";
    case ExprKind::bracket: return "[" + render(e->left) + ", " + render(e->right) + "]";
    case ExprKind::neg:
    case ExprKind::scale:
    case ExprKind::sum: {
      std::vector<Expr> terms;
      flatten_sum(e, terms);
      std::string out;
      for (std::size_t n = 0; n < terms.size(); ++n) {
        const auto [negative, body] = signed_term(terms[n]);
        if (n == 0) {
          out += negative ? "-" + body : body;
        } else {
          out += (negative ? " - " : " + ") + body;
        }
      }
      return out;
    }
  }
  return "";
}

namespace {

BracketWord generator_word(ExprKind k) {
  return k == ExprKind::gen_a ? BracketWord{"A", 1, expr::a()} : BracketWord{"B", 1, expr::b()};
}

void accumulate(WordCombination& acc, const BracketWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

const WordCombination& expand_memo(const Expr& e,
                                   std::unordered_map<const ExprNode*, WordCombination>& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  WordCombination r;
  switch (e->kind) {
    case ExprKind::gen_a:
    case ExprKind::gen_b:
      r.emplace(generator_word(e->kind), Rational(1));
      break;
    case ExprKind::neg:
      for (const auto& [w, c] : expand_memo(e->left, memo)) r.emplace(w, -c);
      break;
    case ExprKind::scale:
      for (const auto& [w, c] : expand_memo(e->left, memo)) r.emplace(w, c * e->coef);
      break;
    case ExprKind::sum: {
      r = expand_memo(e->left, memo);
      for (const auto& [w, c] : expand_memo(e->right, memo)) accumulate(r, w, c);
      break;
    }
    case ExprKind::bracket: {
      const WordCombination& l = expand_memo(e->left, memo);
      const WordCombination& rr = expand_memo(e->right, memo);
      for (const auto& [w1, c1] : l) {
        for (const auto& [w2, c2] : rr) {
          if (!(w1 < w2) && !(w2 < w1)) continue;
          const bool in_order = w1 < w2;
          const BracketWord& lo = in_order ? w1 : w2;
          const BracketWord& hi = in_order ? w2 : w1;
          BracketWord w{"[" + lo.key + ", " + hi.key + "]", lo.degree + hi.degree,
                        expr::bracket(lo.tree, hi.tree)};
          accumulate(r, w, in_order ? c1 * c2 : -(c1 * c2));
        }
      }
      break;
    }
  }
  return memo.emplace(e.get(), std::move(r)).first->second;
}

}  // namespace

WordCombination expand(const Expr& e) {
  std::unordered_map<const ExprNode*, WordCombination> memo;
  return expand_memo(e, memo);
}

Expr to_expr(const WordCombination& c) {
  if (c.empty()) return expr::difference(expr::a(), expr::a());
  Expr acc;
  for (const auto& [w, coef] : c) {
    Expr term = coef.is_one() ? w.tree : (coef == Rational(-1) ? expr::neg(w.tree) : expr::scale(coef, w.tree));
    acc = acc ? expr::sum(acc, term) : term;
  }
  return acc;
}

RecursiveBasis::RecursiveBasis(BasisId b) : basis_(b) {
  const auto [sa, sb] = seed_signs(b);
  a_.push_back(sa > 0 ? expr::a() : expr::neg(expr::a()));
  b_.push_back(sb > 0 ? expr::b() : expr::neg(expr::b()));
  psi_.push_back(nullptr);
}

void RecursiveBasis::extend_to(unsigned i) {
  const Expr a0 = a_.front();
  const Expr b0 = b_.front();
  const Rational half(1, 2);
  while (a_.size() <= i) {
    const std::size_t n = a_.size();
    const Expr psi = expr::sum(
        expr::sum(expr::scale(half, a_[n - 1]), expr::scale(half, b_[n - 1])),
        expr::scale(Rational(-1, 4), expr::bracket(a_[n - 1], b0)));
    psi_.push_back(psi);
    a_.push_back(expr::difference(expr::scale(half, expr::bracket(psi, a0)), psi));
    b_.push_back(expr::difference(expr::scale(half, expr::bracket(b0, psi)), psi));
  }
}

Expr RecursiveBasis::get(const BasisVector& v) {
  if (v.basis != basis_) throw std::invalid_argument("RecursiveBasis: basis mismatch");
  extend_to(v.index);
  switch (v.family) {
    case Family::A: return a_[v.index];
    case Family::B: return b_[v.index];
    case Family::Psi: return psi_[v.index];
  }
  throw std::invalid_argument("RecursiveBasis: unknown family");
}

const WordCombination& RecursiveBasis::expanded(const BasisVector& v) {
  if (auto it = expanded_.find(v); it != expanded_.end()) return it->second;
  return expanded_.emplace(v, expand(get(v))).first->second;
}

Expr basis_elem_recursive(const BasisVector& v) { return RecursiveBasis(v.basis).get(v); }

}  // namespace onsager
