#pragma once

// Critical value, Peierls barrier, projected Aubry set and static classes of
// the discretized Lagrangian.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "weakkam/grid_model.hpp"
#include "weakkam/tropical.hpp"

namespace weakkam {

struct AtlasTolerances {
  double aubry;      // Dplus(x, x) threshold for Aubry nodes
  double class_sep;  // d_H threshold joining two Aubry nodes
  double fixed;      // undiscounted fixed-point defect of elementary solutions

  // aubry = dt dx^2, class_sep = 20 (dx + dt), fixed = 10 (dx + dt).
  static AtlasTolerances defaults(double dx, double dt);
};

struct StaticClass {
  std::vector<Node> nodes;  // sorted
  Node basepoint;           // smallest node index
};

struct WeakKamAtlas {
  PeriodicGrid grid;
  double dt;
  double c0;
  AtlasTolerances tol;
  MinPlusMatrix reduced;
  ShortestPathTable paths;
  std::vector<Node> aubry;  // sorted
  std::vector<StaticClass> classes;  // sorted by basepoint
  MinPlusMatrix barrier;    // barrier(y, x) = h_inf(y, x)
  double lipschitz_kappa;

  // Index of the class containing x, if x is an Aubry node.
  std::optional<std::size_t> class_of(Node x) const;
  // Class whose basepoint is closest to position x.
  std::size_t class_near(double x) const;
};

// c0 = -(min mean cycle of the raw kernel) / dt.
double critical_value(const ActionKernel& kernel);

// { x : Dplus(x, x) <= tol_aubry }, sorted.
std::vector<Node> aubry_nodes(const ShortestPathTable& paths, double tol_aubry);

// h_inf(x, y) = min over Aubry z of D(x, z) + D(z, y).  Throws
// NumericalError("no Aubry nodes at tolerance") for an empty Aubry set.
MinPlusMatrix peierls_barrier(const ShortestPathTable& paths,
                              std::span<const Node> aubry);

// Union-find over Aubry nodes joining x, y when
// h_inf(x, y) + h_inf(y, x) <= tol_class.
std::vector<StaticClass> static_classes(std::span<const Node> aubry,
                                        const MinPlusMatrix& barrier,
                                        double tol_class);

// u(x) = h_inf(basepoint, x).  Defaults to the class basepoint.
std::vector<double> elementary_solution(const WeakKamAtlas& atlas,
                                        std::size_t class_index,
                                        std::optional<Node> basepoint = {});

// sup_x |u(x) - min_y (u(y) + K(y, x))|.
double fixed_point_defect(std::span<const double> u, const MinPlusMatrix& reduced);

// Largest difference quotient of the barrier between geodesic neighbours,
// in either argument.
double barrier_lipschitz(const MinPlusMatrix& barrier, const PeriodicGrid& grid);

// kernel -> c0 -> reduced kernel -> paths -> Aubry set -> barrier -> classes.
WeakKamAtlas build_atlas(const ActionKernel& kernel,
                         std::optional<AtlasTolerances> tolerances = {});

}  // namespace weakkam
