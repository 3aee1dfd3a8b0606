#include <gtest/gtest.h>

#include "oracles.hpp"
#include "worked_examples.hpp"
#include "onsager/expr.hpp"

using namespace onsager;
using onsager::testing::ExampleLine;
using onsager::testing::kExampleLines;
using onsager::testing::Rng;

namespace {

const RingElem kT = RingElem::t();

Expr random_tree(Rng& rng, unsigned depth) {
  const unsigned pick = depth == 0 ? rng.index(1) : rng.index(6);
  switch (pick) {
    case 0: return expr::a();
    case 1: return expr::b();
    case 2: return expr::neg(random_tree(rng, depth - 1));
    case 3: {
      Rational c = rng.rational(5, 6);
      if (c.is_zero()) c = Rational(-3, 7);
      return expr::scale(c, random_tree(rng, depth - 1));
    }
    case 4: return expr::sum(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    default: return expr::bracket(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
  }
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_expr("A")->kind, ExprKind::gen_a);
  const Expr ab = parse_expr("[A,B]");
  ASSERT_EQ(ab->kind, ExprKind::bracket);
  EXPECT_EQ(ab->left->kind, ExprKind::gen_a);
  EXPECT_EQ(ab->right->kind, ExprKind::gen_b);
  EXPECT_EQ(evaluate(parse_expr("1/2 A + 1/2 B - 1/4 [A,B]")), LoopElem::z(kT - RingElem(1)));
}

TEST(Parse, AlternativeSpellings) {
  const LoopElem psi1 = evaluate(parse_expr("1/2 A + 1/2 B - 1/4 [A,B]"));
  EXPECT_EQ(evaluate(parse_expr("A/2 + B/2 - [A,B]/4")), psi1);
  EXPECT_EQ(evaluate(parse_expr("  1/2*A+1/2*B-1/4*[ A , B ]")), psi1);
  EXPECT_EQ(evaluate(parse_expr("−[A,B]")), evaluate(parse_expr("[B,A]")));
  EXPECT_EQ(evaluate(parse_expr("2(A + B)")), evaluate(parse_expr("2A + 2B")));
  EXPECT_TRUE(evaluate(parse_expr("0 A")).is_zero());
}

TEST(Parse, ErrorsCarryPositionAndExpectedTokens) {
  try {
    (void)parse_expr("[A, ");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("A B"), ParseError);
  EXPECT_THROW(parse_expr("[A B]"), ParseError);
  EXPECT_THROW(parse_expr("C"), ParseError);
  EXPECT_THROW(parse_expr("A/0"), ParseError);
}

TEST(Evaluate, Examples) {
  EXPECT_TRUE(evaluate(parse_expr("[A,[A,[A,B]]] - 4[A,B]")).is_zero());
  EXPECT_TRUE(evaluate(parse_expr("[B,[B,[B,A]]] - 4[B,A]")).is_zero());
  EXPECT_EQ(evaluate(parse_expr("A")), LoopElem::x());
  EXPECT_EQ(evaluate(parse_expr("B")), gen_b());
}

TEST(Evaluate, HomomorphismAndMembership) {
  Rng rng(50);
  for (int k = 0; k < 40; ++k) {
    const Expr e1 = random_tree(rng, 3), e2 = random_tree(rng, 3);
    EXPECT_EQ(evaluate(expr::bracket(e1, e2)), bracket(evaluate(e1), evaluate(e2)));
    EXPECT_TRUE(in_onsager(evaluate(e1)));
  }
}

TEST(ExprEqual, Examples) {
  EXPECT_TRUE(expr_equal(parse_expr("[A,B]"), parse_expr("-[B,A]")));
  EXPECT_TRUE(expr_equal(parse_expr("[B,[B,[B,A]]]"), parse_expr("4[B,A]")));
  EXPECT_FALSE(expr_equal(parse_expr("[A,B]"), parse_expr("[B,A]")));
  const ExampleLine& psi2 = kExampleLines[3];
  EXPECT_TRUE(expr_equal(basis_elem_recursive({psi2.basis, psi2.family, psi2.index}),
                         parse_expr(psi2.text)));
}

TEST(Render, Examples) {
  EXPECT_EQ(render(expr::bracket(expr::a(), expr::b())), "[A, B]");
  EXPECT_EQ(render(expr::scale(Rational(-1, 4), expr::bracket(expr::a(), expr::b()))),
            "-1/4 [A, B]");
  for (const ExampleLine& line : kExampleLines) {
    const Expr e = parse_expr(line.text);
    EXPECT_TRUE(expr_equal(parse_expr(render(e)), e)) << line.text;
  }
}

TEST(Render, RoundTripOnRandomTrees) {
  Rng rng(51);
  for (int k = 0; k < 200; ++k) {
    const Expr e = random_tree(rng, 1 + k % 8);
    const std::string text = render(e);
    EXPECT_EQ(evaluate(parse_expr(text)), evaluate(e)) << text;
  }
}

TEST(WorkedExamples, EveryLineMatchesClosedForm) {
  for (const ExampleLine& line : kExampleLines) {
    const BasisVector v(line.basis, line.family, line.index);
    EXPECT_EQ(evaluate(parse_expr(line.text)), basis_elem(v)) << v.str();
  }
}

TEST(Expand, WordCombinations) {
  const WordCombination c = expand(parse_expr("[B,A] + [A,B] + 2[A,A]"));
  EXPECT_TRUE(c.empty());
  EXPECT_TRUE(evaluate(to_expr(c)).is_zero());
  const WordCombination d = expand(parse_expr("[A + B, 2B]"));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d.begin()->first.degree, 2U);
  EXPECT_EQ(d.begin()->second, Rational(2));
  Rng rng(52);
  for (int k = 0; k < 30; ++k) {
    const Expr e = random_tree(rng, 4);
    EXPECT_EQ(evaluate(to_expr(expand(e))), evaluate(e)) << render(e);
  }
}

TEST(RecursiveBasis, ExpandedFormsEvaluateToClosedForms) {
  for (BasisId b : kAllBases) {
    RecursiveBasis rec(b);
    for (Family f : kAllFamilies) {
      for (unsigned i = f == Family::Psi ? 1 : 0; i <= 4; ++i) {
        const BasisVector v(b, f, i);
        EXPECT_EQ(evaluate(to_expr(rec.expanded(v))), basis_elem(v)) << v.str();
      }
    }
  }
  RecursiveBasis rec(BasisId::uu);
  EXPECT_THROW(rec.get({BasisId::dd, Family::A, 1}), std::invalid_argument);
}
