#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "onsager/bases.hpp"
#include "onsager/loop.hpp"

namespace onsager {

enum class ExprKind { gen_a, gen_b, neg, scale, sum, bracket };

struct ExprNode;

/// Immutable bracket expression over the Onsager generators A and B. Nodes are
/// shared, so an Expr may be a DAG.
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  Rational coef;  // scale only, never zero
  Expr left;      // neg, scale: the child
  Expr right;
};

namespace expr {

Expr a();
Expr b();
Expr neg(Expr e);
/// Throws std::invalid_argument for c == 0.
Expr scale(const Rational& c, Expr e);
Expr sum(Expr l, Expr r);
Expr difference(Expr l, Expr r);
Expr bracket(Expr l, Expr r);

}  // namespace expr

/// Malformed expression text: byte offset and the tokens that would have been accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);
  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Grammar (whitespace insignificant):
///   Expr     := ['+'|'-'] Term (('+'|'-') Term)*
///   Term     := [Rational ['*']] Factor ('/' Integer)*
///   Factor   := 'A' | 'B' | '[' Expr ',' Expr ']' | '(' Expr ')'
///   Rational := Integer ['/' Integer]
/// "A/2" is postfix sugar for 1/2 A.
Expr parse_expr(std::string_view text);

/// Structural evaluation: A -> x(x)1, B -> y(x)t + z(x)(t-1). Shared subtrees
/// are evaluated once.
LoopElem evaluate(const Expr& e);

/// Semantic equality through the embedding into the loop algebra.
bool expr_equal(const Expr& e1, const Expr& e2);

/// Text form that parse_expr reads back, e.g. "-1/4 [A, B]".
std::string render(const Expr& e);

/// Nested bracket of generators with a printable key; ordered by (degree, key).
struct BracketWord {
  std::string key;
  unsigned degree;
  Expr tree;

  friend bool operator<(const BracketWord& a, const BracketWord& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.key < b.key;
  }
};

/// Linear combination of bracket words, expanded multilinearly with [w, w] = 0
/// and each bracket oriented so its smaller word comes first.
using WordCombination = std::map<BracketWord, Rational>;

WordCombination expand(const Expr& e);
/// Sum of scaled words in word order; the zero combination becomes A - A.
Expr to_expr(const WordCombination& c);

/// Builds A_0, B_0, psi_1, A_1, B_1, psi_2, ... for one basis from the seeds:
///   psi_i = A_{i-1}/2 + B_{i-1}/2 - [A_{i-1}, B_0]/4
///   A_i   = [psi_i, A_0]/2 - psi_i
///   B_i   = [B_0, psi_i]/2 - psi_i
/// Results are memoized; an instance is not safe for concurrent use.
class RecursiveBasis {
 public:
  explicit RecursiveBasis(BasisId b);

  [[nodiscard]] BasisId basis() const { return basis_; }
  /// Nested-bracket expression for v (v.basis must match).
  Expr get(const BasisVector& v);
  /// expand(get(v)), memoized.
  const WordCombination& expanded(const BasisVector& v);

 private:
  void extend_to(unsigned i);

  BasisId basis_;
  std::vector<Expr> a_;
  std::vector<Expr> b_;
  std::vector<Expr> psi_;  // psi_[i] holds psi_i; psi_[0] unused
  std::map<BasisVector, WordCombination> expanded_;
};

/// Pure form of RecursiveBasis::get for concurrent callers.
Expr basis_elem_recursive(const BasisVector& v);

}  // namespace onsager
