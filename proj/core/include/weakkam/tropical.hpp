#pragma once

// Min-plus (tropical) matrix algebra over the reals extended with +inf:
// composition of one-step actions, minimum mean cycles and all-pairs
// shortest paths on the reduced action kernel.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace weakkam {

using Node = std::size_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual negative cycles tolerated after reduction by a floating-point c0.
inline constexpr double kNegativeCycleTolerance = 1e-7;

class ActionKernel;

// Dense n x n matrix with entries in R u {+inf}.  entry(i, j) is the cost of
// the best one-hop transition i -> j.  -inf and NaN are rejected.
class MinPlusMatrix {
 public:
  MinPlusMatrix() = default;
  explicit MinPlusMatrix(std::size_t order, double fill = kInf);
  MinPlusMatrix(std::size_t order, std::vector<double> entries);

  // 0 on the diagonal, +inf elsewhere.
  static MinPlusMatrix identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * order_ + j];
  }
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * order_, order_};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  friend bool operator==(const MinPlusMatrix&, const MinPlusMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
};

// C(i, j) = min_k A(i, k) + B(k, j), +inf absorbing.
MinPlusMatrix mp_multiply(const MinPlusMatrix& a, const MinPlusMatrix& b);

// m-fold min-plus power by binary exponentiation, m >= 1.
MinPlusMatrix mp_power(const MinPlusMatrix& k, std::size_t m);

struct Edge {
  Node from;
  Node to;
  double cost;
};

// Finite entries of a MinPlusMatrix grouped by arrival node, each group
// sorted by departure node.  This is the working form for Karp and for the
// Bellman operators, whose stencils are far sparser than n^2.
class SparseKernel {
 public:
  explicit SparseKernel(const MinPlusMatrix& dense);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> incoming(Node to) const noexcept {
    return {edges_.data() + offsets_[to], offsets_[to + 1] - offsets_[to]};
  }
  std::span<const Edge> edges() const noexcept { return edges_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Edge> edges_;
};

struct MeanCycle {
  double mean;
  std::vector<Node> cycle;  // witness, in traversal order
};

// Karp's minimum mean cycle.  Throws NumericalError("kernel not strongly
// cyclic") when the graph carries no finite cycle.
MeanCycle karp_min_mean_cycle(const MinPlusMatrix& k);
MeanCycle karp_min_mean_cycle(const SparseKernel& k);

// Reduced kernel cost(y, x) + c0 * dt.
MinPlusMatrix reduce_kernel(const ActionKernel& kernel, double c0);

struct ShortestPathTable {
  MinPlusMatrix dist;       // best cost over paths with >= 0 edges
  MinPlusMatrix dist_plus;  // best cost over paths with >= 1 edge
  // pred[i * n + j]: predecessor of j on a best i -> j path, -1 if none.
  std::vector<std::int32_t> pred;

  std::size_t order() const noexcept { return dist.order(); }

  // Node sequence i, ..., j of a best path; {i} for i == j; empty if
  // unreachable.
  std::vector<Node> path(Node from, Node to) const;
};

// Floyd-Warshall closure of a reduced kernel.  Throws NumericalError("c0
// underestimates critical value") if some closed path costs less than
// -tol_neg; residual negative diagonals above that are clamped to 0.
ShortestPathTable all_pairs_shortest(
    const MinPlusMatrix& reduced, double tol_neg = kNegativeCycleTolerance);

}  // namespace weakkam
