#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weakkam/oracle/oracle.hpp"

using namespace weakkam;

namespace {

MinPlusMatrix from_rows(std::vector<std::vector<double>> rows) {
  const std::size_t n = rows.size();
  std::vector<double> e;
  for (auto& r : rows) e.insert(e.end(), r.begin(), r.end());
  return MinPlusMatrix(n, std::move(e));
}

}  // namespace

TEST(MinPlus, RejectsNanAndNegativeInfinity) {
  EXPECT_THROW(MinPlusMatrix(2, std::nan("")), NumericalError);
  MinPlusMatrix m(2);
  EXPECT_THROW(m.set(0, 1, -kInf), NumericalError);
  EXPECT_THROW(from_rows({{0.0, std::nan("")}, {0.0, 0.0}}), NumericalError);
}

TEST(MinPlus, IdentityIsTwoSidedUnit) {
  const MinPlusMatrix a = from_rows({{1, kInf, -2}, {0, 3, kInf}, {5, 4, 0}});
  const MinPlusMatrix id = MinPlusMatrix::identity(3);
  EXPECT_EQ(mp_multiply(a, id), a);
  EXPECT_EQ(mp_multiply(id, a), a);
  EXPECT_EQ(mp_multiply(id, id), id);
}

TEST(MinPlus, TwoByTwoProduct) {
  const MinPlusMatrix a = from_rows({{0, 1}, {kInf, 0}});
  const MinPlusMatrix b = from_rows({{0, kInf}, {2, 0}});
  EXPECT_EQ(mp_multiply(a, b), from_rows({{0, 1}, {2, 0}}));
}

TEST(MinPlus, OrderMismatchThrows) {
  EXPECT_THROW(mp_multiply(MinPlusMatrix(2), MinPlusMatrix(3)), ConfigurationError);
}

TEST(MinPlus, PowerBasics) {
  const MinPlusMatrix k = oracle::random_matrix(7, 4);
  EXPECT_EQ(mp_power(k, 1), k);
  EXPECT_EQ(mp_power(k, 2), mp_multiply(k, k));
  EXPECT_THROW(mp_power(k, 0), ConfigurationError);

  const MinPlusMatrix cyc = from_rows({{kInf, 1, kInf}, {kInf, kInf, 1}, {1, kInf, kInf}});
  const MinPlusMatrix p3 = mp_power(cyc, 3);
  for (Node i = 0; i < 3; ++i) EXPECT_EQ(p3(i, i), 3.0);
}

TEST(MinPlus, UnitAndAssociativityOnRandomMatrices) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const MinPlusMatrix a = oracle::random_matrix(3 * seed, 5);
    const MinPlusMatrix b = oracle::random_matrix(3 * seed + 1, 5);
    const MinPlusMatrix c = oracle::random_matrix(3 * seed + 2, 5);
    const MinPlusMatrix id = MinPlusMatrix::identity(5);
    ASSERT_EQ(mp_multiply(a, id), a) << seed;
    ASSERT_EQ(mp_multiply(id, a), a) << seed;
    ASSERT_EQ(mp_multiply(mp_multiply(a, b), c), mp_multiply(a, mp_multiply(b, c))) << seed;
  }
}

TEST(Karp, AllZeroSelfLoops) {
  const MeanCycle mc = karp_min_mean_cycle(MinPlusMatrix::identity(5));
  EXPECT_EQ(mc.mean, 0.0);
  ASSERT_EQ(mc.cycle.size(), 1u);
}

TEST(Karp, ThreeNodeExample) {
  MinPlusMatrix k(3);
  k.set(0, 1, 1);
  k.set(1, 0, 1);
  k.set(2, 2, 5);
  const MeanCycle mc = karp_min_mean_cycle(k);
  EXPECT_EQ(mc.mean, 1.0);
  std::vector<Node> nodes = mc.cycle;
  std::sort(nodes.begin(), nodes.end());
  EXPECT_EQ(nodes, (std::vector<Node>{0, 1}));
}

TEST(Karp, AcyclicGraphThrows) {
  MinPlusMatrix k(3);
  k.set(0, 1, 1);
  k.set(1, 2, 1);
  EXPECT_THROW(karp_min_mean_cycle(k), NumericalError);
}

TEST(Karp, MatchesBruteForceOnSeededGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const MinPlusMatrix k = oracle::random_graph(seed, n);
    const double brute = oracle::brute_min_mean_cycle(k);
    const MeanCycle mc = karp_min_mean_cycle(k);
    ASSERT_NEAR(mc.mean, brute, 1e-12) << "seed " << seed;
    ASSERT_NEAR(oracle::cycle_mean(k, mc.cycle), brute, 1e-12) << "seed " << seed;
  }
}

TEST(Karp, SparseAndDenseAgree) {
  const MinPlusMatrix k = oracle::random_graph(99, 6);
  EXPECT_EQ(karp_min_mean_cycle(k).mean, karp_min_mean_cycle(SparseKernel(k)).mean);
}

TEST(Reduce, ZeroShiftIsIdentity) {
  const auto& p = weakkam::testing::example1();
  EXPECT_EQ(reduce_kernel(p.kernel, 0.0), p.kernel.cost());
}

TEST(Reduce, ReducedKernelHasZeroMinMean) {
  for (int which : {1, 2}) {
    const auto p = weakkam::testing::make_preset(which, 64);
    const MinPlusMatrix reduced = reduce_kernel(p.kernel, critical_value(p.kernel));
    EXPECT_LE(std::abs(karp_min_mean_cycle(reduced).mean), 1e-9);
  }
}

TEST(Reduce, FreeParticleHasZeroDiagonal) {
  const PeriodicGrid grid(32);
  const auto spec = HamiltonianSpec::example2(grid, [](double) { return 0.0; });
  const ActionKernel k = build_action_kernel(grid, spec, grid.dx());
  const double c0 = critical_value(k);
  EXPECT_NEAR(c0, 0.0, 1e-9);
  const MinPlusMatrix r = reduce_kernel(k, c0);
  for (Node i = 0; i < 32; ++i) EXPECT_EQ(r(i, i), 0.0);
}

TEST(ShortestPaths, UnitMatrix) {
  const ShortestPathTable t = all_pairs_shortest(MinPlusMatrix::identity(3));
  EXPECT_EQ(t.dist, MinPlusMatrix::identity(3));
  EXPECT_EQ(t.dist_plus, MinPlusMatrix::identity(3));
}

TEST(ShortestPaths, NoEdgesMeansNoClosedPaths) {
  const ShortestPathTable t = all_pairs_shortest(MinPlusMatrix(3));
  for (Node i = 0; i < 3; ++i) {
    EXPECT_EQ(t.dist(i, i), 0.0);
    EXPECT_EQ(t.dist_plus(i, i), kInf);
  }
}

TEST(ShortestPaths, TwoCycleGivesZeroDplus) {
  MinPlusMatrix k(2);
  k.set(0, 1, 0.0);
  k.set(1, 0, 0.0);
  const ShortestPathTable t = all_pairs_shortest(k);
  EXPECT_EQ(t.dist_plus(0, 0), 0.0);
  EXPECT_EQ(t.dist_plus(1, 1), 0.0);
}

TEST(ShortestPaths, NegativeCycleIsRejected) {
  MinPlusMatrix k(2);
  k.set(0, 1, -1.0);
  k.set(1, 0, 0.5);
  try {
    all_pairs_shortest(k);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("c0 underestimates critical value"), std::string::npos);
  }
}

TEST(ShortestPaths, TinyNegativeCycleIsClamped) {
  MinPlusMatrix k(2);
  k.set(0, 1, -1e-9);
  k.set(1, 0, 0.0);
  const ShortestPathTable t = all_pairs_shortest(k);
  EXPECT_EQ(t.dist_plus(0, 0), 0.0);
}

TEST(ShortestPaths, TriangleInequalityAndPathReplay) {
  const auto p = weakkam::testing::make_preset(1, 64);
  const ShortestPathTable& t = p.atlas.paths;
  const std::size_t n = t.order();
  for (Node i = 0; i < n; ++i) {
    for (Node k = 0; k < n; ++k) {
      for (Node j = 0; j < n; ++j) {
        ASSERT_LE(t.dist(i, j), t.dist(i, k) + t.dist(k, j) + 1e-12);
      }
    }
  }
  for (Node i = 0; i < n; i += 7) {
    for (Node j = 0; j < n; j += 5) {
      const auto path = t.path(i, j);
      ASSERT_FALSE(path.empty());
      double cost = 0.0;
      for (std::size_t s = 0; s + 1 < path.size(); ++s) cost += p.atlas.reduced(path[s], path[s + 1]);
      ASSERT_NEAR(cost, t.dist(i, j), 1e-12);
    }
  }
}
