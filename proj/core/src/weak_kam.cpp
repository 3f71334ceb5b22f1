#include "weakkam/weak_kam.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "weakkam/error.hpp"
#include "weakkam/parallel.hpp"

namespace weakkam {

AtlasTolerances AtlasTolerances::defaults(double dx, double dt) {
  return {dt * dx * dx, 20.0 * (dx + dt), 10.0 * (dx + dt)};
}

std::optional<std::size_t> WeakKamAtlas::class_of(Node x) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].nodes.begin(), classes[i].nodes.end(), x)) return i;
  }
  return std::nullopt;
}

std::size_t WeakKamAtlas::class_near(double x) const {
  if (classes.empty()) throw ConfigurationError("atlas has no static classes");
  const Node target = grid.nearest_node(x);
  std::size_t best = 0;
  double best_d = kInf;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Node z : classes[i].nodes) {
      const double d = grid.distance(z, target);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
  }
  return best;
}

double critical_value(const ActionKernel& kernel) {
  const MeanCycle mc = karp_min_mean_cycle(SparseKernel(kernel.cost()));
  return -mc.mean / kernel.dt();
}

std::vector<Node> aubry_nodes(const ShortestPathTable& paths, double tol_aubry) {
  std::vector<Node> nodes;
  for (Node x = 0; x < paths.order(); ++x) {
    if (paths.dist_plus(x, x) <= tol_aubry) nodes.push_back(x);
  }
  return nodes;
}

MinPlusMatrix peierls_barrier(const ShortestPathTable& paths, std::span<const Node> aubry) {
  if (aubry.empty()) {
    throw NumericalError("no Aubry nodes at tolerance (raise tol_aubry)");
  }
  const std::size_t n = paths.order();
  std::vector<double> h(n * n, kInf);
  parallel_for(n, [&](std::size_t x) {
    double* out = h.data() + x * n;
    for (Node z : aubry) {
      const double dxz = paths.dist(x, z);
      if (dxz == kInf) continue;
      const auto dz = paths.dist.row(z);
      for (std::size_t y = 0; y < n; ++y) {
        const double cand = dxz + dz[y];
        if (cand < out[y]) out[y] = cand;
      }
    }
  });
  return MinPlusMatrix(n, std::move(h));
}

std::vector<StaticClass> static_classes(std::span<const Node> aubry,
                                        const MinPlusMatrix& barrier, double tol_class) {
  const std::size_t m = aubry.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = barrier(aubry[i], aubry[j]) + barrier(aubry[j], aubry[i]);
      if (d <= tol_class) {
        const std::size_t ri = find(i);
        const std::size_t rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }

  std::vector<StaticClass> classes;
  std::vector<std::ptrdiff_t> slot(m, -1);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return aubry[a] < aubry[b]; });
  for (std::size_t idx : order) {
    const std::size_t root = find(idx);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(classes.size());
      classes.push_back({{}, aubry[idx]});
    }
    classes[static_cast<std::size_t>(slot[root])].nodes.push_back(aubry[idx]);
  }
  // nodes were visited in increasing order, so basepoints are the minima and
  // classes are already sorted by basepoint
  return classes;
}

std::vector<double> elementary_solution(const WeakKamAtlas& atlas, std::size_t class_index,
                                        std::optional<Node> basepoint) {
  if (class_index >= atlas.classes.size()) {
    throw ConfigurationError("class index " + std::to_string(class_index) +
                             " out of range (" + std::to_string(atlas.classes.size()) +
                             " classes)");
  }
  const StaticClass& cls = atlas.classes[class_index];
  const Node base = basepoint.value_or(cls.basepoint);
  if (!std::binary_search(cls.nodes.begin(), cls.nodes.end(), base)) {
    throw ConfigurationError("node " + std::to_string(base) + " is not in class " +
                             std::to_string(class_index));
  }
  const auto row = atlas.barrier.row(base);
  return {row.begin(), row.end()};
}

double fixed_point_defect(std::span<const double> u, const MinPlusMatrix& reduced) {
  const std::size_t n = reduced.order();
  double defect = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    double best = kInf;
    for (std::size_t y = 0; y < n; ++y) {
      const double k = reduced(y, x);
      if (k < kInf) best = std::min(best, u[y] + k);
    }
    defect = std::max(defect, std::abs(u[x] - best));
  }
  return defect;
}

double barrier_lipschitz(const MinPlusMatrix& barrier, const PeriodicGrid& grid) {
  const std::size_t n = barrier.order();
  double kappa = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xn = (x + 1) % n;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t yn = (y + 1) % n;
      kappa = std::max(kappa, std::abs(barrier(x, yn) - barrier(x, y)));
      kappa = std::max(kappa, std::abs(barrier(xn, y) - barrier(x, y)));
    }
  }
  return kappa / grid.dx();
}

WeakKamAtlas build_atlas(const ActionKernel& kernel, std::optional<AtlasTolerances> tolerances) {
  const PeriodicGrid& grid = kernel.grid();
  const AtlasTolerances tol = tolerances.value_or(AtlasTolerances::defaults(grid.dx(), kernel.dt()));
  const double c0 = critical_value(kernel);
  MinPlusMatrix reduced = reduce_kernel(kernel, c0);
  ShortestPathTable paths = all_pairs_shortest(reduced);
  std::vector<Node> aubry = aubry_nodes(paths, tol.aubry);
  MinPlusMatrix barrier = peierls_barrier(paths, aubry);
  std::vector<StaticClass> classes = static_classes(aubry, barrier, tol.class_sep);
  const double kappa = barrier_lipschitz(barrier, grid);
  return WeakKamAtlas{grid,
                      kernel.dt(),
                      c0,
                      tol,
                      std::move(reduced),
                      std::move(paths),
                      std::move(aubry),
                      std::move(classes),
                      std::move(barrier),
                      kappa};
}

}  // namespace weakkam
