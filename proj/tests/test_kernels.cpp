#include <gtest/gtest.h>

#include "onsager/kernels.hpp"
#include "onsager/verify.hpp"

using namespace onsager;

TEST(Kernels, BracketTableSerialMatchesParallel) {
  for (BasisId b : kAllBases) {
    const auto s = bracket_table(b, 6, Exec::serial);
    const auto p = bracket_table(b, 6, Exec::parallel);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_EQ(s[k].lhs, p[k].lhs);
      EXPECT_EQ(s[k].rhs, p[k].rhs);
      EXPECT_EQ(s[k].actual, p[k].actual);
      EXPECT_TRUE(s[k].ok());
    }
  }
}

TEST(Kernels, TransitionTableSerialMatchesParallel) {
  const auto s = transition_table(BasisId::dd, BasisId::ud, 8, Exec::serial);
  const auto p = transition_table(BasisId::dd, BasisId::ud, 8, Exec::parallel);
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    EXPECT_EQ(s[k].target, p[k].target);
    EXPECT_EQ(s[k].formula, p[k].formula);
    EXPECT_TRUE(s[k].ok());
  }
}

TEST(Kernels, DecompositionSerialMatchesParallel) {
  const auto elems = random_loop_elems(60, 99);
  const PathLabel label = PathLabel::parse("2130");
  const auto s = decompose_batch(label, elems, Exec::serial);
  EXPECT_EQ(s, decompose_batch(label, elems, Exec::parallel));
  for (std::size_t k = 0; k < elems.size(); ++k) EXPECT_TRUE(parts_valid(label, elems[k], s[k]));

  const auto onsager = random_onsager_elems(40, 98);
  for (BasisId b : kAllBases) {
    EXPECT_EQ(decompose_onsager_batch(path_label(b), onsager, Exec::serial),
              decompose_onsager_batch(path_label(b), onsager, Exec::parallel));
  }
}

TEST(Kernels, RandomGeneratorsAreSeeded) {
  EXPECT_EQ(random_loop_elems(5, 7), random_loop_elems(5, 7));
  EXPECT_NE(random_loop_elems(5, 7), random_loop_elems(5, 8));
  for (const LoopElem& u : random_onsager_elems(20, 3)) EXPECT_TRUE(in_onsager(u));
}

TEST(Verify, SerialAndParallelReportsAgree) {
  const VerifyReport s = run_verify(4, Suite::all, Exec::serial);
  const VerifyReport p = run_verify(4, Suite::all, Exec::parallel);
  ASSERT_EQ(s.checks.size(), p.checks.size());
  for (std::size_t k = 0; k < s.checks.size(); ++k) {
    EXPECT_EQ(s.checks[k].name, p.checks[k].name);
    EXPECT_EQ(s.checks[k].passed, p.checks[k].passed);
    EXPECT_EQ(s.checks[k].failed, p.checks[k].failed);
  }
  EXPECT_TRUE(s.ok());
}

TEST(Verify, FreshCheckoutPassesAtTen) {
  const VerifyReport r = run_verify(10, Suite::all);
  for (const CheckResult& c : r.checks) EXPECT_EQ(c.failed, 0U) << c.name << ": " << c.first_failure;
}

TEST(Verify, SuiteSelection) {
  const VerifyReport r = run_verify(2, Suite::ring);
  ASSERT_FALSE(r.checks.empty());
  for (const CheckResult& c : r.checks) EXPECT_EQ(c.suite, Suite::ring);
  EXPECT_THROW(parse_suite("everything"), std::invalid_argument);
  EXPECT_EQ(parse_suite("transitions"), Suite::transitions);
}
