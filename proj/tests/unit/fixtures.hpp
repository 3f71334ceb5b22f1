#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "weakkam/weakkam.hpp"

namespace weakkam::testing {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Preset {
  PeriodicGrid grid;
  HamiltonianSpec spec;
  ActionKernel kernel;
  WeakKamAtlas atlas;
};

inline Preset make_preset(int which, std::size_t n) {
  PeriodicGrid grid(n);
  HamiltonianSpec spec = which == 1 ? HamiltonianSpec::example1_preset(grid)
                                    : HamiltonianSpec::example2_preset(grid);
  ActionKernel kernel = build_action_kernel(grid, spec, grid.dx());
  WeakKamAtlas atlas = build_atlas(kernel);
  return {grid, spec, kernel, atlas};
}

// n = 256 presets, built once per test binary.
inline const Preset& example1() {
  static const Preset p = make_preset(1, 256);
  return p;
}
inline const Preset& example2() {
  static const Preset p = make_preset(2, 256);
  return p;
}

inline std::vector<double> sample(const PeriodicGrid& grid, double (*f)(double)) {
  std::vector<double> out(grid.size());
  for (Node i = 0; i < grid.size(); ++i) out[i] = f(grid.position(i));
  return out;
}

inline double cos2pi(double x) { return std::cos(kTwoPi * x); }
inline double neg_cos2pi(double x) { return -std::cos(kTwoPi * x); }

inline double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Elementary solution with the smallest sup-norm.
inline std::vector<double> reference_v0(const WeakKamAtlas& atlas) {
  std::vector<double> best;
  double best_sup = kInf;
  for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
    auto e = elementary_solution(atlas, i);
    if (sup_norm(e) < best_sup) {
      best_sup = sup_norm(e);
      best = std::move(e);
    }
  }
  return best;
}

inline DiscountProblem problem(const WeakKamAtlas& atlas, std::vector<double> a, double A,
                               double lambda) {
  return DiscountProblem{lambda, std::move(a), A, std::make_shared<SparseKernel>(atlas.reduced),
                         atlas.c0, atlas.dt};
}

}  // namespace weakkam::testing
