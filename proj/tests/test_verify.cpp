#include <gtest/gtest.h>

#include "opdam/verify.hpp"

using namespace opdam;
namespace v = opdam::verify;

TEST(Verify, NevilleExtrapolation) {
  // quadratic in t: exact
  std::vector<double> t = {0.4, 0.2, 0.1};
  std::vector<Complex> y;
  for (double s : t) y.push_back(1.0 + 2.0 * s - 3.0 * s * s);
  EXPECT_NEAR(std::abs(v::extrapolate_to_zero(t, y) - 1.0), 0, 1e-14);
}

TEST(Verify, ParallelMapKeepsOrder) {
  const auto a = v::parallel_map<int>(50, 1, [](std::size_t i) { return int(i * i); });
  const auto b = v::parallel_map<int>(50, 4, [](std::size_t i) { return int(i * i); });
  EXPECT_EQ(a, b);
  EXPECT_THROW(v::parallel_map<int>(5, 2, [](std::size_t i) -> int {
                 if (i == 3) throw std::runtime_error("x");
                 return 0;
               }),
               std::runtime_error);
}

TEST(Verify, Rank1SuitePassesAndIsDeterministic) {
  v::Options o;
  o.jobs = 2;
  const auto a = v::run_suite("rank1", o);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.records.size(), 48u);
  const auto b = v::run_suite("rank1", o);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].params, b.records[i].params);
    EXPECT_EQ(a.records[i].residual, b.records[i].residual);
  }
}

TEST(Verify, ToleranceOverrideCanFail) {
  v::Options o;
  o.tolerance["rank1"] = 1e-30;
  o.ks = {1.0};
  EXPECT_FALSE(v::run_suite("rank1", o).pass());
}

TEST(Verify, RandomCasesAreSeeded) {
  const auto a = v::random_cases(7, 5, 1.0), b = v::random_cases(7, 5, 1.0),
             c = v::random_cases(8, 5, 1.0);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(a[i].l.vec(), b[i].l.vec());
  EXPECT_NE(a[0].l.vec(), c[0].l.vec());
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(v::run_suite("nope", {}), ParameterError); }

TEST(Verify, ShiftedOdeRightHandSideDoesNotHold) { EXPECT_GT(v::ode_shifted_rhs_residual(), 1e-2); }
