#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weakkam/oracle/oracle.hpp"

using namespace weakkam;

TEST(Oracle, AllSuitesPass) {
  for (const auto& r : oracle::run_oracle_suites()) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_GT(r.checks, 0u) << r.name;
  }
}

TEST(Oracle, BruteForceSmallCases) {
  MinPlusMatrix k(2);
  k.set(0, 1, 3.0);
  k.set(1, 0, -1.0);
  k.set(1, 1, 2.0);
  EXPECT_EQ(oracle::brute_min_mean_cycle(k), 1.0);
  EXPECT_EQ(oracle::cycle_mean(k, {0, 1}), 1.0);
  EXPECT_EQ(oracle::brute_min_mean_cycle(MinPlusMatrix(3)), kInf);
}

TEST(Oracle, DenseLegendreOfQuadratic) {
  // H = p^2 has L = v^2 / 4
  const auto h = [](double p) { return p * p; };
  EXPECT_NEAR(oracle::dense_legendre(h, 2.0, 10.0), 1.0, 1e-9);
  EXPECT_NEAR(oracle::dense_legendre(h, -1.0, 10.0), 0.25, 1e-9);
}

TEST(Oracle, QuadratureMatchesClosedForm) {
  // U = sin^2 2 pi x: sqrt U = |sin 2 pi x|, total 2 / pi, u(x) = (1 - cos 2 pi x) / (2 pi) near 0
  const auto q = oracle::sqrt_potential_solution(
      [](double x) { return std::pow(std::sin(weakkam::testing::kTwoPi * x), 2); }, 0.0);
  EXPECT_NEAR(q.total, 2.0 / std::numbers::pi, 1e-12);
  for (double x : {0.0, 0.1, 0.25, 0.4}) {
    EXPECT_NEAR(q.u(x), (1.0 - std::cos(weakkam::testing::kTwoPi * x)) / weakkam::testing::kTwoPi, 1e-9);
    EXPECT_NEAR(q.u(1.0 - x), q.u(x), 1e-9);
  }
}
