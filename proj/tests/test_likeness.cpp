#include <gtest/gtest.h>

#include "oracles.hpp"
#include "onsager/bases.hpp"
#include "onsager/likeness.hpp"
#include "onsager/symmetry.hpp"

using namespace onsager;
using onsager::testing::Rng;

namespace {

const RingElem kT = RingElem::t();
const RingElem kOne(1);

void expect_valid(const PathLabel& label, const LoopElem& u, const PathParts& p) {
  EXPECT_EQ(p.sum(), u);
  EXPECT_TRUE(is_like(label.kh(), p.kh)) << label.str();
  EXPECT_TRUE(is_like(label.hi(), p.hi)) << label.str();
  EXPECT_TRUE(is_like(label.ij(), p.ij)) << label.str();
}

}  // namespace

TEST(PathLabel, ParseAndSlots) {
  const PathLabel l = PathLabel::parse("[3021]");
  EXPECT_EQ(l, PathLabel::parse("3021"));
  EXPECT_EQ(l.kh(), GenLabel(3, 0));
  EXPECT_EQ(l.hi(), GenLabel(0, 2));
  EXPECT_EQ(l.ij(), GenLabel(2, 1));
  EXPECT_EQ(l.str(), "[3021]");
  EXPECT_THROW(PathLabel::parse("0012"), std::invalid_argument);
  EXPECT_THROW(PathLabel::parse("031"), std::invalid_argument);
}

TEST(IsLike, Examples) {
  EXPECT_TRUE(is_like({1, 2}, LoopElem::x(kT.pow(5) * (kT - kOne).pow(-2))));
  EXPECT_FALSE(is_like({1, 2}, LoopElem::y()));
  EXPECT_TRUE(is_like({0, 3}, scale(gen_b(), kT.pow(-3))));
}

TEST(IsLike, GeneratorTimesRingIsLike) {
  Rng rng(30);
  for (GenLabel g : all_gen_labels()) {
    for (int k = 0; k < 5; ++k) EXPECT_TRUE(is_like(g, scale(std_gen(g), rng.ring(5, 2))));
  }
}

TEST(IsLike, BothDolanGradyOrderingsAgree) {
  Rng rng(31);
  for (GenLabel g : all_gen_labels()) {
    for (int k = 0; k < 10; ++k) {
      const LoopElem u = k % 2 == 0 ? rng.loop(3, 1) : scale(std_gen(g), rng.ring(3, 1));
      EXPECT_EQ(is_like(g, u), is_like_reversed_opposite(g, u));
    }
  }
}

TEST(LikeBasisElem, Examples) {
  EXPECT_EQ(like_basis_elem({3, 1}, LikeKind::one, 0), LoopElem::z());
  EXPECT_EQ(like_basis_elem({1, 2}, LikeKind::t_pow, 3), LoopElem::x(kT.pow(3)));
  EXPECT_EQ(like_basis_elem({0, 3}, LikeKind::tpp_pow, 1), scale(gen_b(), RingElem::t_dprime()));
  EXPECT_EQ(like_basis_elem({0, 3}, LikeKind::tpp_pow, 1),
            LoopElem({{}, -kT * (kT - kOne).pow(-1), -kOne}));
  EXPECT_THROW(like_basis_elem({0, 3}, LikeKind::t_pow, 0), std::invalid_argument);
  EXPECT_THROW(like_basis_elem({0, 3}, LikeKind::tp_pow, 0), std::invalid_argument);
}

TEST(LikeBasisElem, AllLike) {
  for (GenLabel g : all_gen_labels()) {
    for (LikeKind kind : {LikeKind::t_pow, LikeKind::tp_pow, LikeKind::tpp_pow}) {
      for (unsigned n = 1; n <= 6; ++n) EXPECT_TRUE(is_like(g, like_basis_elem(g, kind, n)));
    }
  }
}

TEST(DecomposeCanonical, Examples) {
  EXPECT_EQ(decompose_canonical(gen_b()), (PathParts{gen_b(), {}, {}}));
  const LoopElem xt3 = LoopElem::x(kT.pow(3));
  EXPECT_EQ(decompose_canonical(xt3), (PathParts{{}, {}, xt3}));
  const PathParts p = decompose_canonical(LoopElem::y());
  EXPECT_EQ(p.kh, scale(gen_b(), kT.pow(-1)));
  EXPECT_EQ(p.hi, LoopElem::z((kOne - kT) * kT.pow(-1)));
  EXPECT_TRUE(p.ij.is_zero());
  EXPECT_EQ(p.sum(), LoopElem::y());
  EXPECT_EQ(decompose_canonical(LoopElem{}), PathParts{});
}

TEST(DecomposeCanonical, RandomElements) {
  Rng rng(32);
  const PathLabel canon = PathLabel::canonical();
  for (int k = 0; k < 100; ++k) {
    const LoopElem u = rng.loop(8, 3);
    expect_valid(canon, u, decompose_canonical(u));
  }
}

TEST(DecomposeCanonical, SingleSlotInputsStayInTheirSlot) {
  Rng rng(33);
  for (int k = 0; k < 20; ++k) {
    const RingElem a = rng.ring(4, 2);
    if (a.is_zero()) continue;
    EXPECT_EQ(decompose_canonical(scale(std_gen({0, 3}), a)),
              (PathParts{scale(std_gen({0, 3}), a), {}, {}}));
    EXPECT_EQ(decompose_canonical(scale(std_gen({3, 1}), a)),
              (PathParts{{}, scale(std_gen({3, 1}), a), {}}));
    EXPECT_EQ(decompose_canonical(scale(std_gen({1, 2}), a)),
              (PathParts{{}, {}, scale(std_gen({1, 2}), a)}));
  }
}

TEST(DecomposePath, EveryLabel) {
  Rng rng(34);
  for (const Perm& p : Perm::all()) {
    const auto& m = p.images();
    const PathLabel label(m[0], m[1], m[2], m[3]);
    for (int k = 0; k < 3; ++k) {
      const LoopElem u = rng.loop(4, 2);
      expect_valid(label, u, decompose_path(label, u));
    }
  }
}

TEST(DecomposeOnsager, Examples) {
  EXPECT_EQ(decompose_onsager(PathLabel::parse("0312"), gen_a()), (PathParts{{}, {}, gen_a()}));
  const LoopElem psi = LoopElem::z(kT - kOne);
  EXPECT_EQ(decompose_onsager(PathLabel::parse("0312"), psi), (PathParts{{}, psi, {}}));
  const LoopElem xt = LoopElem::x(kT);
  EXPECT_EQ(decompose_onsager(PathLabel::parse("0321"), xt), (PathParts{{}, {}, xt}));
  // x(x)t = +A^du_1 (closed form -x(x)(-t)).
  EXPECT_EQ(coords(xt, BasisId::du).at(Family::A, 1), Rational(1));
}

TEST(DecomposeOnsager, Rejections) {
  EXPECT_THROW(decompose_onsager(PathLabel::parse("0312"), LoopElem::z()), std::invalid_argument);
  EXPECT_THROW(decompose_onsager(PathLabel::parse("0123"), gen_a()), std::invalid_argument);
}

TEST(DecomposeOnsager, RandomElementsAllLabels) {
  Rng rng(35);
  for (BasisId b : kAllBases) {
    const PathLabel label = path_label(b);
    for (int k = 0; k < 40; ++k) {
      const LoopElem u = rng.onsager();
      const PathParts p = decompose_onsager(label, u);
      expect_valid(label, u, p);
      EXPECT_TRUE(in_onsager(p.kh) && in_onsager(p.hi) && in_onsager(p.ij));
      // Within O the decomposition is the restriction of the path decomposition.
      EXPECT_EQ(p, decompose_path(label, u));
    }
  }
}

TEST(DecomposeOnsager, SlotBasesOfO) {
  for (unsigned n = 0; n <= 12; ++n) {
    const RingElem tn = kT.pow(n);
    EXPECT_TRUE(is_like({0, 3}, scale(gen_b(), tn)));
    EXPECT_TRUE(is_like({3, 1}, LoopElem::z((kT - kOne) * tn)));
    EXPECT_TRUE(is_like({1, 2}, LoopElem::x(tn)));
    EXPECT_TRUE(in_onsager(scale(gen_b(), tn)) && in_onsager(LoopElem::z((kT - kOne) * tn)));
  }
}

TEST(DecomposeOnsager, GTransport) {
  Rng rng(36);
  const PathLabel canon = path_label(BasisId::uu);
  const Perm rho = Perm::of(BasicAut::rho);
  const Perm tau = Perm::of(BasicAut::tau);
  const std::vector<std::pair<Perm, BasisId>> moves = {
      {rho, BasisId::dd}, {tau, BasisId::du}, {rho * tau, BasisId::ud}};
  for (int k = 0; k < 10; ++k) {
    const LoopElem u = rng.onsager();
    const PathParts p = decompose_onsager(canon, u);
    for (const auto& [g, target] : moves) {
      const PathParts moved{apply_perm(g, p.kh), apply_perm(g, p.hi), apply_perm(g, p.ij)};
      EXPECT_EQ(moved, decompose_onsager(path_label(target), apply_perm(g, u)));
    }
  }
}
