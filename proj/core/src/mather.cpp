#include "weakkam/mather.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "weakkam/error.hpp"

namespace weakkam {

double MatherMeasure::integrate(std::span<const double> f) const {
  double s = 0.0;
  for (const auto& [node, w] : weights) s += w * f[node];
  return s;
}

std::vector<TightEdge> tight_subgraph(const MinPlusMatrix& reduced,
                                      const ShortestPathTable& paths,
                                      std::span<const Node> aubry, double tol_tight) {
  std::vector<TightEdge> edges;
  for (Node y : aubry) {
    for (Node x : aubry) {
      const double k = reduced(y, x);
      if (k == kInf) continue;
      const double back = paths.dist(x, y);
      if (back == kInf) continue;
      if (k + back <= tol_tight) edges.push_back({y, x});
    }
  }
  return edges;
}

namespace {

// Johnson's circuit enumeration over a small local graph.
class CircuitFinder {
 public:
  CircuitFinder(std::vector<std::vector<std::size_t>> adj, std::size_t cap)
      : adj_(std::move(adj)), cap_(cap), blocked_(adj_.size()), blist_(adj_.size()) {}

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t n = adj_.size();
    for (start_ = 0; start_ < n; ++start_) {
      std::fill(blocked_.begin(), blocked_.end(), false);
      for (auto& b : blist_) b.clear();
      circuit(start_);
    }
    return std::move(found_);
  }

 private:
  void unblock(std::size_t u) {
    blocked_[u] = false;
    while (!blist_[u].empty()) {
      const std::size_t w = blist_[u].back();
      blist_[u].pop_back();
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(std::size_t v) {
    bool closed = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (std::size_t w : adj_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        found_.push_back(stack_);
        if (found_.size() > cap_) {
          throw NumericalError("cycle explosion; raise tol separation or refine grid");
        }
        closed = true;
      } else if (!blocked_[w] && circuit(w)) {
        closed = true;
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (std::size_t w : adj_[v]) {
        if (w < start_) continue;
        auto& bl = blist_[w];
        if (std::find(bl.begin(), bl.end(), v) == bl.end()) bl.push_back(v);
      }
    }
    stack_.pop_back();
    return closed;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::size_t cap_;
  std::size_t start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::vector<std::size_t>> blist_;
  std::vector<std::size_t> stack_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<MatherMeasure> enumerate_cycle_measures(std::span<const TightEdge> tight,
                                                    const StaticClass& cls,
                                                    std::size_t class_id, std::size_t cap) {
  const std::vector<Node>& nodes = cls.nodes;
  auto local = [&](Node g) -> std::ptrdiff_t {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), g);
    if (it == nodes.end() || *it != g) return -1;
    return it - nodes.begin();
  };
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (const TightEdge& e : tight) {
    const std::ptrdiff_t a = local(e.from);
    const std::ptrdiff_t b = local(e.to);
    if (a < 0 || b < 0) continue;
    adj[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }

  std::vector<MatherMeasure> measures;
  for (const auto& circuit : CircuitFinder(std::move(adj), cap).run()) {
    MatherMeasure m;
    m.class_id = class_id;
    const double w = 1.0 / static_cast<double>(circuit.size());
    for (std::size_t i : circuit) {
      m.cycle.push_back(nodes[i]);
      m.weights[nodes[i]] += w;
    }
    measures.push_back(std::move(m));
  }
  return measures;
}

std::vector<MatherMeasure> class_measures(const WeakKamAtlas& atlas, std::size_t class_id) {
  if (class_id >= atlas.classes.size()) {
    throw ConfigurationError("class index " + std::to_string(class_id) + " out of range");
  }
  const auto tight = tight_subgraph(atlas.reduced, atlas.paths, atlas.aubry, atlas.tol.aubry);
  return enumerate_cycle_measures(tight, atlas.classes[class_id], class_id);
}

ConditionAReport verify_condition_a(std::span<const double> a,
                                    std::span<const StaticClass> classes, std::size_t i0) {
  if (i0 >= classes.size()) {
    throw ConfigurationError("selected class " + std::to_string(i0) + " out of range (" +
                             std::to_string(classes.size()) + " classes)");
  }
  ConditionAReport report;
  report.epsilon = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Node x : classes[i].nodes) {
      const double margin = (i == i0) ? a[x] : -a[x];
      report.epsilon = std::min(report.epsilon, margin);
      if (margin <= 0.0) report.offending.push_back(x);
    }
  }
  report.passed = report.offending.empty();
  std::ostringstream msg;
  if (report.passed) {
    msg << "condition (a) holds with epsilon = " << report.epsilon;
  } else {
    msg << "condition (a) violated at nodes";
    for (Node x : report.offending) msg << ' ' << x;
    msg << " (epsilon = " << report.epsilon << ")";
  }
  report.message = msg.str();
  return report;
}

double selection_constant(std::span<const MatherMeasure> measures, std::span<const double> a,
                          double A, const MinPlusMatrix& barrier, Node x0) {
  if (measures.empty()) throw NumericalError("no Mather measures on the selected class");
  double best = std::numeric_limits<double>::infinity();
  for (const MatherMeasure& m : measures) {
    double num = A;
    double den = 0.0;
    for (const auto& [y, w] : m.weights) {
      num += w * a[y] * barrier(y, x0);
      den += w * a[y];
    }
    if (!(den > 0.0)) throw NumericalError("condition (a) violated on support");
    best = std::min(best, num / den);
  }
  return best;
}

double mather_mean_action(const MatherMeasure& measure, const ActionKernel& kernel) {
  const auto& cyc = measure.cycle;
  if (cyc.empty()) throw ConfigurationError("empty cycle");
  double total = 0.0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    total += kernel.cost()(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  return total / (static_cast<double>(cyc.size()) * kernel.dt());
}

}  // namespace weakkam
