#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace weakkam;
namespace wt = weakkam::testing;

namespace {

double f_sin(double x) { return std::sin(wt::kTwoPi * x); }
double f_cos3(double x) { return std::cos(3 * wt::kTwoPi * x); }
double f_sq(double x) { return x * x; }
double f_exp(double x) { return std::exp(std::sin(wt::kTwoPi * x)); }
double f_mix(double x) { return std::sin(wt::kTwoPi * x) * std::cos(2 * wt::kTwoPi * x); }

}  // namespace

TEST(Tight, FreeParticleHasAllSelfLoops) {
  const PeriodicGrid g(16);
  const auto spec = HamiltonianSpec::example2(g, [](double) { return 0.0; });
  const WeakKamAtlas at = build_atlas(build_action_kernel(g, spec, g.dx()));
  const auto tight = tight_subgraph(at.reduced, at.paths, at.aubry, at.tol.aubry);
  for (Node i = 0; i < 16; ++i) {
    EXPECT_NE(std::find(tight.begin(), tight.end(), TightEdge{i, i}), tight.end()) << i;
  }
}

TEST(Tight, PresetSelfLoopsAndNoCrossClassEdges) {
  for (const auto* p : {&wt::example1(), &wt::example2()}) {
    const auto& at = p->atlas;
    const auto tight = tight_subgraph(at.reduced, at.paths, at.aubry, at.tol.aubry);
    const Node half = p->grid.nearest_node(0.5);
    EXPECT_NE(std::find(tight.begin(), tight.end(), TightEdge{0, 0}), tight.end());
    EXPECT_NE(std::find(tight.begin(), tight.end(), TightEdge{half, half}), tight.end());
    for (const auto& e : tight) EXPECT_EQ(at.class_of(e.from), at.class_of(e.to));
  }
}

TEST(Measures, SingleNodeClassGivesDirac) {
  const auto& at = wt::example1().atlas;
  const auto ms = class_measures(at, 0);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].cycle, std::vector<Node>{0});
  ASSERT_EQ(ms[0].weights.size(), 1u);
  EXPECT_DOUBLE_EQ(ms[0].weights.at(0), 1.0);
}

TEST(Measures, JohnsonEnumeratesAllSimpleCycles) {
  // complete digraph with self-loops on 3 nodes: 3 loops, 3 two-cycles, 2 three-cycles
  std::vector<TightEdge> edges;
  for (Node a = 0; a < 3; ++a) {
    for (Node b = 0; b < 3; ++b) edges.push_back({a, b});
  }
  const StaticClass cls{{0, 1, 2}, 0};
  const auto ms = enumerate_cycle_measures(edges, cls, 0);
  EXPECT_EQ(ms.size(), 8u);
  for (const auto& m : ms) {
    double total = 0.0;
    for (const auto& [node, w] : m.weights) total += w;
    EXPECT_NEAR(total, 1.0, 1e-15);
  }
  EXPECT_THROW(enumerate_cycle_measures(edges, cls, 0, 5), NumericalError);
}

TEST(Measures, SupportInClassAndCyclesAreClosed) {
  double (*fs[])(double) = {f_sin, f_cos3, f_sq, f_exp, f_mix};
  for (const auto* p : {&wt::example1(), &wt::example2()}) {
    const auto& at = p->atlas;
    for (std::size_t c = 0; c < at.classes.size(); ++c) {
      for (const auto& m : class_measures(at, c)) {
        for (const auto& [node, w] : m.weights) {
          EXPECT_TRUE(std::binary_search(at.classes[c].nodes.begin(), at.classes[c].nodes.end(), node));
        }
        for (auto f : fs) {
          double s = 0.0;
          for (std::size_t i = 0; i < m.cycle.size(); ++i) {
            const Node cur = m.cycle[i];
            const Node next = m.cycle[(i + 1) % m.cycle.size()];
            s += f(p->grid.position(next)) - f(p->grid.position(cur));
          }
          EXPECT_EQ(s, 0.0);
        }
        EXPECT_NEAR(mather_mean_action(m, p->kernel), -at.c0, at.tol.aubry / at.dt);
      }
    }
  }
}

TEST(Measures, FreeParticleMeanActionIsZero) {
  const PeriodicGrid g(16);
  const auto spec = HamiltonianSpec::example2(g, [](double) { return 0.0; });
  const ActionKernel k = build_action_kernel(g, spec, g.dx());
  MatherMeasure m;
  m.cycle = {3};
  m.weights[3] = 1.0;
  EXPECT_EQ(mather_mean_action(m, k), 0.0);
}

TEST(ConditionA, CosineOnPresetClasses) {
  const auto& p = wt::example1();
  const auto a = wt::sample(p.grid, wt::cos2pi);
  const auto ok = verify_condition_a(a, p.atlas.classes, 0);
  EXPECT_TRUE(ok.passed);
  EXPECT_DOUBLE_EQ(ok.epsilon, 1.0);

  const std::vector<double> ones(p.grid.size(), 1.0);
  const auto bad = verify_condition_a(ones, p.atlas.classes, 0);
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.offending, std::vector<Node>{p.grid.nearest_node(0.5)});

  const auto flipped = verify_condition_a(wt::sample(p.grid, wt::neg_cos2pi), p.atlas.classes, 1);
  EXPECT_TRUE(flipped.passed);
  EXPECT_THROW(verify_condition_a(a, p.atlas.classes, 2), ConfigurationError);
}

TEST(Selection, DiracGivesAOverA) {
  MatherMeasure dirac;
  dirac.cycle = {2};
  dirac.weights[2] = 1.0;
  const MinPlusMatrix h(4, 0.0);
  const std::vector<double> a{0.1, 0.2, 0.5, -1.0};
  EXPECT_DOUBLE_EQ(selection_constant({&dirac, 1}, a, 3.0, h, 2), 6.0);
  // homogeneity: scaling a by t divides the Dirac value by t
  std::vector<double> a2 = a;
  for (double& v : a2) v *= 4.0;
  EXPECT_DOUBLE_EQ(selection_constant({&dirac, 1}, a2, 3.0, h, 2), 1.5);
  const std::vector<double> neg{0.1, 0.2, -0.5, 1.0};
  try {
    selection_constant({&dirac, 1}, neg, 3.0, h, 2);
    FAIL();
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("condition (a) violated on support"), std::string::npos);
  }
}

TEST(Selection, Example1PresetIsOne) {
  const auto& p = wt::example1();
  const auto a = wt::sample(p.grid, wt::cos2pi);
  const auto ms = class_measures(p.atlas, 0);
  EXPECT_NEAR(selection_constant(ms, a, 1.0, p.atlas.barrier, 0), 1.0, 1e-6);
}

TEST(Selection, BasepointShiftInvariance) {
  // plateau class {0..4}: h(x0, .) + C(x0) must not depend on x0 in the class
  const PeriodicGrid grid(128);
  std::vector<double> u(128);
  for (Node i = 0; i < 128; ++i) u[i] = std::pow(std::sin(wt::kTwoPi * grid.position(i)), 2);
  for (Node i = 0; i <= 4; ++i) u[i] = 0.0;
  const auto spec = HamiltonianSpec::example2_from_samples(grid, u);
  const WeakKamAtlas at = build_atlas(build_action_kernel(grid, spec, grid.dx()));
  ASSERT_EQ(at.classes[0].nodes.size(), 5u);
  const auto a = wt::sample(grid, wt::cos2pi);
  const auto ms = class_measures(at, 0);
  EXPECT_EQ(ms.size(), 5u);
  std::vector<double> ref;
  for (Node x0 : at.classes[0].nodes) {
    const double C = selection_constant(ms, a, 2.0, at.barrier, x0);
    std::vector<double> w(128);
    for (Node x = 0; x < 128; ++x) w[x] = at.barrier(x0, x) + C;
    if (ref.empty()) {
      ref = w;
      continue;
    }
    for (Node x = 0; x < 128; ++x) EXPECT_NEAR(w[x], ref[x], 10 * at.tol.class_sep);
  }
}
