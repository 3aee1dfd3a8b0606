#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "oracles.hpp"
#include "onsager/symmetry.hpp"

using namespace onsager;
using onsager::testing::Rng;

namespace {

const std::array<BasicAut, 4> kBasic = {BasicAut::rho, BasicAut::tau, BasicAut::mu, BasicAut::phi};

LoopElem twice(BasicAut g, const LoopElem& u) { return apply_basic(g, apply_basic(g, u)); }

/// Independent BFS giving only the distance of each element from the identity.
std::map<Perm, std::size_t> cayley_distances() {
  std::map<Perm, std::size_t> dist{{Perm::identity(), 0}};
  std::queue<Perm> q;
  q.push(Perm::identity());
  while (!q.empty()) {
    const Perm p = q.front();
    q.pop();
    for (BasicAut g : kBasic) {
      const Perm next = p * Perm::of(g);
      if (dist.emplace(next, dist[p] + 1).second) q.push(next);
    }
  }
  return dist;
}

}  // namespace

TEST(Perm, ParseAndRender) {
  EXPECT_EQ(Perm::parse("(12)(30)"), Perm::of(BasicAut::rho));
  EXPECT_EQ(Perm::parse("(12)"), Perm::of(BasicAut::tau));
  EXPECT_EQ(Perm::parse("(23)(10)"), Perm::of(BasicAut::mu));
  EXPECT_EQ(Perm::parse("(123)"), Perm::of(BasicAut::phi));
  EXPECT_EQ(Perm::of(BasicAut::rho).str(), "(03)(12)");
  EXPECT_EQ(Perm::identity().str(), "e");
  EXPECT_EQ(Perm::parse("e"), Perm::identity());
  for (const Perm& p : Perm::all()) EXPECT_EQ(Perm::parse(p.str()), p);
  EXPECT_THROW(Perm::parse("(11)"), std::invalid_argument);
  EXPECT_EQ(Perm::all().size(), 24U);
}

TEST(ApplyBasic, Examples) {
  EXPECT_EQ(apply_basic(BasicAut::rho, gen_a()), -gen_a());
  EXPECT_EQ(apply_basic(BasicAut::mu, LoopElem::x()), gen_b());
  EXPECT_EQ(apply_basic(BasicAut::phi, LoopElem::x()), LoopElem::y());
}

TEST(ApplyBasic, ActionOnGenerators) {
  // rho(B) = -B together with the computed tau images tau(A) = -A, tau(B) = B.
  EXPECT_EQ(apply_basic(BasicAut::rho, gen_b()), -gen_b());
  EXPECT_EQ(apply_basic(BasicAut::tau, gen_a()), -gen_a());
  EXPECT_EQ(apply_basic(BasicAut::tau, gen_b()), gen_b());
}

TEST(ApplyBasic, OrdersAndCommutation) {
  Rng rng(20);
  for (int k = 0; k < 100; ++k) {
    const LoopElem u = rng.loop(4, 2);
    EXPECT_EQ(twice(BasicAut::rho, u), u);
    EXPECT_EQ(twice(BasicAut::tau, u), u);
    EXPECT_EQ(twice(BasicAut::mu, u), u);
    EXPECT_EQ(apply_basic(BasicAut::phi, twice(BasicAut::phi, u)), u);
    EXPECT_EQ(apply_basic(BasicAut::rho, apply_basic(BasicAut::tau, u)),
              apply_basic(BasicAut::tau, apply_basic(BasicAut::rho, u)));
  }
}

TEST(ApplyBasic, LieAutomorphisms) {
  Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const LoopElem u = rng.loop(4, 2), v = rng.loop(4, 2);
    for (BasicAut g : kBasic) {
      EXPECT_EQ(apply_basic(g, bracket(u, v)), bracket(apply_basic(g, u), apply_basic(g, v)))
          << name(g);
    }
  }
}

TEST(WordFor, Examples) {
  EXPECT_TRUE(word_for(Perm::identity()).empty());
  EXPECT_EQ(word_for(Perm::of(BasicAut::tau)), GenWord{BasicAut::tau});
  const Perm p30 = Perm::of(BasicAut::rho) * Perm::of(BasicAut::tau);
  EXPECT_EQ(p30, Perm::parse("(30)"));
  EXPECT_EQ(word_for(p30).size(), 2U);
  EXPECT_EQ(evaluate(word_for(p30)), p30);
}

TEST(WordFor, ShortestForEveryElement) {
  const auto dist = cayley_distances();
  ASSERT_EQ(dist.size(), 24U);
  for (const auto& [p, d] : dist) {
    EXPECT_EQ(word_for(p).size(), d) << p.str();
    EXPECT_EQ(evaluate(word_for(p)), p) << p.str();
  }
}

TEST(ApplyPerm, Examples) {
  Rng rng(22);
  const LoopElem u = rng.loop();
  EXPECT_EQ(apply_perm(Perm::identity(), u), u);
  const Perm phi = Perm::parse("(123)");
  EXPECT_EQ(apply_perm(phi, std_gen({3, 1})), std_gen({phi(3), phi(1)}));
  EXPECT_EQ(apply_perm(phi, std_gen({3, 1})), std_gen({1, 2}));
  EXPECT_EQ(apply_perm(Perm::parse("(12)"), gen_b()), gen_b());
}

TEST(ApplyPerm, EquivarianceOnGenerators) {
  for (const Perm& p : Perm::all()) {
    for (GenLabel g : all_gen_labels()) {
      EXPECT_EQ(apply_perm(p, std_gen(g)), std_gen({p(g.i), p(g.j)})) << p.str() << " " << g.str();
    }
  }
}

TEST(ApplyPerm, Homomorphism) {
  Rng rng(23);
  const LoopElem u = rng.loop(3, 1);
  for (const Perm& p : Perm::all()) {
    for (const Perm& q : Perm::all()) {
      ASSERT_EQ(apply_perm(p * q, u), apply_perm(p, apply_perm(q, u))) << p.str() << q.str();
    }
  }
}

TEST(ApplyPerm, OnsagerIsGInvariant) {
  Rng rng(24);
  const Perm rho = Perm::of(BasicAut::rho);
  const Perm tau = Perm::of(BasicAut::tau);
  for (int k = 0; k < 30; ++k) {
    const LoopElem u = rng.onsager();
    for (const Perm& g : {rho, tau, rho * tau}) EXPECT_TRUE(in_onsager(apply_perm(g, u)));
  }
}
