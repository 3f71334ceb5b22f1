#pragma once

// Discrete Mather measures (occupation measures of tight cycles), the sign
// condition on the discount coefficient and the selection constant.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "weakkam/grid_model.hpp"
#include "weakkam/tropical.hpp"
#include "weakkam/weak_kam.hpp"

namespace weakkam {

inline constexpr std::size_t kMaxCycleMeasures = 10000;

struct TightEdge {
  Node from;
  Node to;
  friend bool operator==(const TightEdge&, const TightEdge&) = default;
};

struct MatherMeasure {
  std::vector<Node> cycle;         // simple cycle, traversal order
  std::map<Node, double> weights;  // uniform over cycle nodes, sums to 1
  std::size_t class_id = 0;

  // sum_y mu(y) f(y)
  double integrate(std::span<const double> f) const;
};

// Edges (y, x) inside the Aubry set lying on a near-zero cycle:
// K(y, x) + D(x, y) <= tol_tight.
std::vector<TightEdge> tight_subgraph(const MinPlusMatrix& reduced,
                                      const ShortestPathTable& paths,
                                      std::span<const Node> aubry, double tol_tight);

// All simple cycles of the tight subgraph restricted to one static class
// (Johnson's algorithm).  Throws NumericalError on more than `cap` cycles.
std::vector<MatherMeasure> enumerate_cycle_measures(
    std::span<const TightEdge> tight, const StaticClass& cls, std::size_t class_id,
    std::size_t cap = kMaxCycleMeasures);

// Convenience: tight subgraph + enumeration for one class of an atlas.
std::vector<MatherMeasure> class_measures(const WeakKamAtlas& atlas,
                                          std::size_t class_id);

struct ConditionAReport {
  bool passed = false;
  // min(min a on class i0, min -a on the other classes); positive iff passed.
  double epsilon = 0.0;
  std::vector<Node> offending;
  std::string message;
};

// a > 0 on class i0 and a < 0 on every other class.
ConditionAReport verify_condition_a(std::span<const double> a,
                                    std::span<const StaticClass> classes,
                                    std::size_t i0);

// C = min over measures of (sum mu a h_inf(., x0) + A) / (sum mu a).
// Throws NumericalError("condition (a) violated on support") if a
// denominator is not positive.
double selection_constant(std::span<const MatherMeasure> measures,
                          std::span<const double> a, double A,
                          const MinPlusMatrix& barrier, Node x0);

// Cycle average of raw edge costs divided by dt.
double mather_mean_action(const MatherMeasure& measure, const ActionKernel& kernel);

}  // namespace weakkam
