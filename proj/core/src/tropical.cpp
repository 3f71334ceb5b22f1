#include "weakkam/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "weakkam/error.hpp"
#include "weakkam/grid_model.hpp"
#include "weakkam/parallel.hpp"

namespace weakkam {
namespace {

void check_entry(double value) {
  if (std::isnan(value) || value == -kInf) {
    throw NumericalError("min-plus entries must be finite or +inf");
  }
}

// Rows below this order are multiplied on the calling thread.
constexpr std::size_t kParallelOrder = 128;

}  // namespace

MinPlusMatrix::MinPlusMatrix(std::size_t order, double fill)
    : order_(order), entries_(order * order, fill) {
  check_entry(fill);
}

MinPlusMatrix::MinPlusMatrix(std::size_t order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw ConfigurationError("min-plus matrix of order " + std::to_string(order_) +
                             " needs " + std::to_string(order_ * order_) +
                             " entries, got " + std::to_string(entries_.size()));
  }
  for (double e : entries_) check_entry(e);
}

MinPlusMatrix MinPlusMatrix::identity(std::size_t order) {
  MinPlusMatrix id(order);
  for (std::size_t i = 0; i < order; ++i) id.entries_[i * order + i] = 0.0;
  return id;
}

void MinPlusMatrix::set(std::size_t i, std::size_t j, double value) {
  check_entry(value);
  entries_[i * order_ + j] = value;
}

MinPlusMatrix mp_multiply(const MinPlusMatrix& a, const MinPlusMatrix& b) {
  if (a.order() != b.order()) {
    throw ConfigurationError("mp_multiply: order mismatch " + std::to_string(a.order()) +
                             " vs " + std::to_string(b.order()));
  }
  const std::size_t n = a.order();
  std::vector<double> c(n * n, kInf);
  auto row = [&](std::size_t i) {
    double* out = c.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == kInf) continue;
      const auto bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        const double cand = aik + bk[j];
        if (cand < out[j]) out[j] = cand;
      }
    }
  };
  if (n >= kParallelOrder) {
    parallel_for(n, row);
  } else {
    for (std::size_t i = 0; i < n; ++i) row(i);
  }
  return MinPlusMatrix(n, std::move(c));
}

MinPlusMatrix mp_power(const MinPlusMatrix& k, std::size_t m) {
  if (m == 0) throw ConfigurationError("mp_power: exponent must be >= 1");
  MinPlusMatrix result;
  bool have_result = false;
  MinPlusMatrix base = k;
  while (true) {
    if (m & 1u) {
      result = have_result ? mp_multiply(result, base) : base;
      have_result = true;
    }
    m >>= 1u;
    if (m == 0) break;
    base = mp_multiply(base, base);
  }
  return result;
}

SparseKernel::SparseKernel(const MinPlusMatrix& dense) {
  const std::size_t n = dense.order();
  offsets_.assign(n + 1, 0);
  for (std::size_t to = 0; to < n; ++to) {
    for (std::size_t from = 0; from < n; ++from) {
      const double c = dense(from, to);
      if (c < kInf) edges_.push_back({from, to, c});
    }
    offsets_[to + 1] = edges_.size();
  }
}

MeanCycle karp_min_mean_cycle(const MinPlusMatrix& k) {
  return karp_min_mean_cycle(SparseKernel(k));
}

MeanCycle karp_min_mean_cycle(const SparseKernel& k) {
  const std::size_t n = k.order();
  if (n == 0) throw NumericalError("kernel not strongly cyclic");

  // walk[s * n + v]: cheapest walk with exactly s edges ending at v, started
  // anywhere (a zero-cost super source feeds every node).
  std::vector<double> walk((n + 1) * n, kInf);
  std::vector<std::int32_t> pred((n + 1) * n, -1);
  std::fill_n(walk.begin(), n, 0.0);
  for (std::size_t s = 1; s <= n; ++s) {
    const double* prev = walk.data() + (s - 1) * n;
    double* cur = walk.data() + s * n;
    std::int32_t* p = pred.data() + s * n;
    for (Node v = 0; v < n; ++v) {
      for (const Edge& e : k.incoming(v)) {
        const double cand = prev[e.from] + e.cost;
        if (cand < cur[v]) {
          cur[v] = cand;
          p[v] = static_cast<std::int32_t>(e.from);
        }
      }
    }
  }

  double best = kInf;
  Node best_v = 0;
  const double* last = walk.data() + n * n;
  for (Node v = 0; v < n; ++v) {
    if (last[v] == kInf) continue;
    double worst = -kInf;
    for (std::size_t s = 0; s < n; ++s) {
      const double ds = walk[s * n + v];
      if (ds == kInf) continue;
      worst = std::max(worst, (last[v] - ds) / static_cast<double>(n - s));
    }
    if (worst < best) {
      best = worst;
      best_v = v;
    }
  }
  if (best == kInf) throw NumericalError("kernel not strongly cyclic");

  // The n-edge walk ending at best_v contains a cycle; every cycle on it has
  // the minimum mean.  Take the one closest to the end.
  std::vector<Node> nodes(n + 1);
  nodes[n] = best_v;
  for (std::size_t s = n; s > 0; --s) {
    nodes[s - 1] = static_cast<Node>(pred[s * n + nodes[s]]);
  }
  std::vector<std::ptrdiff_t> seen(n, -1);
  std::vector<Node> cycle;
  for (std::size_t s = n + 1; s-- > 0;) {
    const Node v = nodes[s];
    if (seen[v] >= 0) {
      cycle.assign(nodes.begin() + static_cast<std::ptrdiff_t>(s),
                   nodes.begin() + seen[v]);
      break;
    }
    seen[v] = static_cast<std::ptrdiff_t>(s);
  }
  return {best, std::move(cycle)};
}

MinPlusMatrix reduce_kernel(const ActionKernel& kernel, double c0) {
  const MinPlusMatrix& cost = kernel.cost();
  const double shift = c0 * kernel.dt();
  std::vector<double> out(cost.entries().begin(), cost.entries().end());
  for (double& e : out) {
    if (e < kInf) e += shift;
  }
  return MinPlusMatrix(cost.order(), std::move(out));
}

std::vector<Node> ShortestPathTable::path(Node from, Node to) const {
  if (from == to) return {from};
  const std::size_t n = order();
  if (dist(from, to) == kInf) return {};
  std::vector<Node> nodes{to};
  Node cur = to;
  while (cur != from) {
    const std::int32_t p = pred[from * n + cur];
    if (p < 0 || nodes.size() > n) {
      throw NumericalError("inconsistent predecessor table");
    }
    cur = static_cast<Node>(p);
    nodes.push_back(cur);
  }
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

ShortestPathTable all_pairs_shortest(const MinPlusMatrix& reduced, double tol_neg) {
  const std::size_t n = reduced.order();
  std::vector<double> d(reduced.entries().begin(), reduced.entries().end());
  std::vector<std::int32_t> pred(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && d[i * n + j] < kInf) pred[i * n + j] = static_cast<std::int32_t>(i);
    }
    d[i * n + i] = 0.0;  // empty path
  }

  // Floyd-Warshall; diagonals stay at the empty path, closed paths are
  // accounted for in dist_plus below.
  for (std::size_t k = 0; k < n; ++k) {
    const double* dk = d.data() + k * n;
    const std::int32_t* pk = pred.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = d[i * n + k];
      if (dik == kInf || i == k) continue;
      double* di = d.data() + i * n;
      std::int32_t* pi = pred.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double cand = dik + dk[j];
        if (cand < di[j] && j != i) {
          di[j] = cand;
          pi[j] = pk[j];
        }
      }
    }
  }

  ShortestPathTable table{MinPlusMatrix(n, std::move(d)), MinPlusMatrix(n),
                          std::move(pred)};

  std::vector<double> plus(n * n, kInf);
  auto row = [&](std::size_t i) {
    double* out = plus.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double kik = reduced(i, k);
      if (kik == kInf) continue;
      const auto dk = table.dist.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        const double cand = kik + dk[j];
        if (cand < out[j]) out[j] = cand;
      }
    }
  };
  if (n >= kParallelOrder) {
    parallel_for(n, row);
  } else {
    for (std::size_t i = 0; i < n; ++i) row(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double& diag = plus[i * n + i];
    if (diag < -tol_neg) {
      throw NumericalError("c0 underestimates critical value (closed path of cost " +
                           std::to_string(diag) + " through node " +
                           std::to_string(i) + ")");
    }
    if (diag < 0.0) diag = 0.0;
  }
  table.dist_plus = MinPlusMatrix(n, std::move(plus));
  return table;
}

}  // namespace weakkam
