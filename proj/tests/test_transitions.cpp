#include <gtest/gtest.h>

#include "onsager/transitions.hpp"

using namespace onsager;

namespace {

unsigned first_index(Family f) { return f == Family::Psi ? 1 : 0; }

OCoords single(const BasisVector& v, const Rational& c = Rational(1)) {
  OCoords out(v.basis);
  out.add(v, c);
  return out;
}

Rational alt(unsigned i) { return i % 2 == 0 ? Rational(1) : Rational(-1); }

/// The tau-edge formulas from [0312] to [0321] written out term by term.
OCoords tau_edge_uu_to_du(Family f, unsigned i) {
  OCoords out(BasisId::uu);
  if (f == Family::A) {
    for (unsigned j = 0; j <= i; ++j)
      out.add({BasisId::uu, Family::A, j}, -alt(i) * Rational::binomial(i, j));
  } else if (f == Family::B) {
    for (unsigned j = 0; j <= i; ++j)
      out.add({BasisId::uu, Family::B, j}, alt(i) * Rational::binomial(i, j));
  } else {
    const unsigned m = i - 1;  // psi_{m+1}
    for (unsigned j = 0; j <= m; ++j) {
      out.add({BasisId::uu, Family::B, j}, alt(m) * Rational::binomial(m, j));
      out.add({BasisId::uu, Family::Psi, j + 1}, -alt(m) * Rational::binomial(m, j));
    }
  }
  return out;
}

}  // namespace

TEST(AutImage, Examples) {
  for (unsigned i = 0; i <= 4; ++i) {
    EXPECT_EQ(aut_image(BasicAut::rho, {BasisId::uu, Family::A, i}),
              BasisVector(BasisId::dd, Family::A, i));
    EXPECT_EQ(aut_image(BasicAut::tau, {BasisId::uu, Family::Psi, i + 1}),
              BasisVector(BasisId::du, Family::Psi, i + 1));
  }
  EXPECT_EQ(aut_image(BasicAut::rho, aut_image(BasicAut::tau, {BasisId::uu, Family::A, 2})),
            BasisVector(BasisId::ud, Family::A, 2));
  EXPECT_THROW(aut_image(BasicAut::mu, {BasisId::uu, Family::A, 0}), std::invalid_argument);
}

TEST(AutImage, MatchesAutomorphismOnClosedForms) {
  for (BasisId b : kAllBases) {
    for (Family f : kAllFamilies) {
      for (unsigned i = first_index(f); i <= 12; ++i) {
        const BasisVector v(b, f, i);
        for (BasicAut g : {BasicAut::rho, BasicAut::tau}) {
          EXPECT_EQ(apply_basic(g, basis_elem(v)), basis_elem(aut_image(g, v)))
              << name(g) << " " << v.str();
        }
      }
    }
  }
}

TEST(Adjacent, Square) {
  EXPECT_TRUE(adjacent(BasisId::uu, BasisId::dd));
  EXPECT_TRUE(adjacent(BasisId::uu, BasisId::du));
  EXPECT_TRUE(adjacent(BasisId::dd, BasisId::ud));
  EXPECT_TRUE(adjacent(BasisId::du, BasisId::ud));
  EXPECT_FALSE(adjacent(BasisId::uu, BasisId::ud));
  EXPECT_FALSE(adjacent(BasisId::dd, BasisId::du));
  EXPECT_FALSE(adjacent(BasisId::uu, BasisId::uu));
}

TEST(Transition, Examples) {
  for (unsigned i = 0; i <= 5; ++i) {
    EXPECT_EQ(transition(BasisId::uu, BasisId::dd, {BasisId::uu, Family::A, i}),
              single({BasisId::uu, Family::A, i}, -1));
  }
  OCoords a1(BasisId::uu);
  a1.add({BasisId::uu, Family::A, 0}, 1);
  a1.add({BasisId::uu, Family::A, 1}, 1);
  EXPECT_EQ(transition(BasisId::uu, BasisId::du, {BasisId::uu, Family::A, 1}), a1);
  EXPECT_EQ(a1.str(), "A^uu_0 + A^uu_1");

  OCoords p1(BasisId::uu);
  p1.add({BasisId::uu, Family::B, 0}, 1);
  p1.add({BasisId::uu, Family::Psi, 1}, -1);
  EXPECT_EQ(transition(BasisId::uu, BasisId::du, {BasisId::uu, Family::Psi, 1}), p1);

  EXPECT_EQ(transition(BasisId::uu, BasisId::uu, {BasisId::uu, Family::A, 1}),
            single({BasisId::uu, Family::A, 1}));
  EXPECT_THROW(transition(BasisId::dd, BasisId::uu, {BasisId::uu, Family::A, 1}),
               std::invalid_argument);
}

TEST(Transition, RhoEdgeShear) {
  for (unsigned i = 0; i <= 8; ++i) {
    OCoords expected(BasisId::uu);
    expected.add({BasisId::uu, Family::A, i}, -1);
    expected.add({BasisId::uu, Family::B, i}, -1);
    expected.add({BasisId::uu, Family::Psi, i + 1}, 1);
    EXPECT_EQ(transition(BasisId::uu, BasisId::dd, {BasisId::uu, Family::Psi, i + 1}), expected);
  }
}

TEST(Transition, TauEdgeBinomialSums) {
  for (Family f : kAllFamilies) {
    for (unsigned i = first_index(f); i <= 12; ++i) {
      EXPECT_EQ(transition(BasisId::uu, BasisId::du, {BasisId::uu, f, i}), tau_edge_uu_to_du(f, i))
          << family_name(f) << i;
    }
  }
}

TEST(Transition, SemanticAndRoundTripAllPairs) {
  for (BasisId src : kAllBases) {
    for (BasisId dst : kAllBases) {
      for (Family f : kAllFamilies) {
        for (unsigned i = first_index(f); i <= 12; ++i) {
          const BasisVector target(dst, f, i);
          const OCoords c = transition(src, dst, {src, f, i});
          EXPECT_EQ(reassemble(c), basis_elem(target)) << target.str() << " over " << arrow_code(src);
          OCoords back(dst);
          for (const auto& [key, coef] : c.terms()) {
            back.add(transition(dst, src, {dst, key.first, key.second}), coef);
          }
          EXPECT_EQ(back, single(target));
        }
      }
    }
  }
}

TEST(Transition, CompositeRoutesAgree) {
  for (Family f : kAllFamilies) {
    for (unsigned i = first_index(f); i <= 10; ++i) {
      const BasisVector v(BasisId::uu, f, i);
      const OCoords via_dd = transition_via(BasisId::uu, BasisId::dd, BasisId::ud, v);
      const OCoords via_du = transition_via(BasisId::uu, BasisId::du, BasisId::ud, v);
      EXPECT_EQ(via_dd, via_du) << v.str();
      EXPECT_EQ(via_dd, transition(BasisId::uu, BasisId::ud, v)) << v.str();
    }
  }
}
