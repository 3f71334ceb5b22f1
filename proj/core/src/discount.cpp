#include "weakkam/discount.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "weakkam/error.hpp"
#include "weakkam/parallel.hpp"

namespace weakkam {

double DiscountProblem::a_sup() const noexcept {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

void DiscountProblem::validate() const {
  if (!kernel) throw ConfigurationError("discount problem has no kernel");
  if (kernel->order() != a.size()) {
    throw ConfigurationError("discount coefficient has " + std::to_string(a.size()) +
                             " samples for a kernel of order " +
                             std::to_string(kernel->order()));
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigurationError("dt must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigurationError("lambda must be > 0");
  }
  if (!std::isfinite(A)) throw ConfigurationError("A must be finite");
  for (double v : a) {
    if (!std::isfinite(v)) throw ConfigurationError("discount coefficient must be finite");
  }
  if (!(lambda * dt * a_sup() < 1.0)) {
    std::ostringstream os;
    os << "lambda dt |a|_inf = " << lambda * dt * a_sup() << " must be < 1";
    throw ConfigurationError(os.str());
  }
}

void DiscountProblem::validate_reference(std::span<const double> v0) const {
  if (v0.size() != a.size()) throw ConfigurationError("reference vector size mismatch");
  double vsup = 0.0;
  for (double v : v0) vsup = std::max(vsup, std::abs(v));
  if (!(A > a_sup() * vsup)) {
    std::ostringstream os;
    os << "A = " << A << " must exceed |a|_inf |v0|_inf = " << a_sup() * vsup;
    throw ConfigurationError(os.str());
  }
}

std::vector<double> discounted_bellman_step(std::span<const double> u,
                                            const DiscountProblem& problem,
                                            std::vector<Node>* backpointer) {
  const SparseKernel& k = *problem.kernel;
  const std::size_t n = k.order();
  std::vector<double> out(n);
  if (backpointer) backpointer->assign(n, 0);
  const double source = problem.dt * problem.A * problem.lambda;
  for (Node x = 0; x < n; ++x) {
    double best = kInf;
    Node arg = 0;
    for (const Edge& e : k.incoming(x)) {
      const double cand = u[e.from] + e.cost;
      if (cand < best) {
        best = cand;
        arg = e.from;
      }
    }
    out[x] = (best + source) / (1.0 + problem.lambda * problem.dt * problem.a[x]);
    if (backpointer) (*backpointer)[x] = arg;
  }
  return out;
}

namespace {

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double edge_cost(const SparseKernel& k, Node from, Node to) {
  const auto in = k.incoming(to);
  auto it = std::lower_bound(in.begin(), in.end(), from,
                             [](const Edge& e, Node f) { return e.from < f; });
  if (it == in.end() || it->from != from) return kInf;
  return it->cost;
}

// Policy iteration over "proper" policies: every node x picks a predecessor
// pi(x) and every cycle of the functional graph must be contracting, i.e.
// the product of 1 / (1 + lambda dt a) around it is < 1.
class PolicySolver {
 public:
  explicit PolicySolver(const DiscountProblem& p) : p_(p), k_(*p.kernel), n_(k_.order()) {
    rate_.resize(n_);
    log_rate_.resize(n_);
    for (Node x = 0; x < n_; ++x) {
      log_rate_[x] = std::log1p(p_.lambda * p_.dt * p_.a[x]);
      rate_[x] = 1.0 / (1.0 + p_.lambda * p_.dt * p_.a[x]);
    }
    source_ = p_.dt * p_.A * p_.lambda;
  }

  // Values of a proper policy, or nullopt if some cycle is not contracting.
  std::optional<std::vector<double>> evaluate(const std::vector<Node>& pi) const {
    std::vector<double> v(n_, 0.0);
    std::vector<char> state(n_, 0);  // 0 new, 1 on current walk, 2 done
    std::vector<Node> walk;
    for (Node s = 0; s < n_; ++s) {
      if (state[s] == 2) continue;
      walk.clear();
      Node x = s;
      while (state[x] == 0) {
        state[x] = 1;
        walk.push_back(x);
        x = pi[x];
      }
      std::size_t resolved = walk.size();
      if (state[x] == 1) {
        // x closes a new cycle: walk[pos..] are its nodes.
        const std::size_t pos = static_cast<std::size_t>(
            std::find(walk.begin(), walk.end(), x) - walk.begin());
        double total_log = 0.0;
        double b = 0.0;
        double prod = 1.0;
        for (std::size_t i = pos; i < walk.size(); ++i) {
          const Node c = walk[i];
          total_log += log_rate_[c];
          prod *= rate_[c];
          b += prod * weight(c, pi[c]);
        }
        if (!(total_log > 0.0)) return std::nullopt;
        const double one_minus_g = -std::expm1(-total_log);
        const Node head = walk[pos];
        v[head] = b / one_minus_g;
        state[head] = 2;
        // remaining cycle nodes, backwards from the head's successor chain
        for (std::size_t i = walk.size(); i-- > pos + 1;) {
          const Node c = walk[i];
          v[c] = rate_[c] * (v[pi[c]] + weight(c, pi[c]));
          state[c] = 2;
        }
        resolved = pos;
      }
      for (std::size_t i = resolved; i-- > 0;) {
        const Node c = walk[i];
        v[c] = rate_[c] * (v[pi[c]] + weight(c, pi[c]));
        state[c] = 2;
      }
    }
    return v;
  }

  bool proper(const std::vector<Node>& pi) const { return evaluate(pi).has_value(); }

  // Greedy policy for v, keeping the current choice unless strictly beaten.
  std::vector<Node> improve(const std::vector<Node>& pi, std::span<const double> v) const {
    std::vector<Node> next = pi;
    for (Node x = 0; x < n_; ++x) {
      const double current = v[pi[x]] + edge_cost(k_, pi[x], x);
      double best = current;
      Node arg = pi[x];
      for (const Edge& e : k_.incoming(x)) {
        const double cand = v[e.from] + e.cost;
        if (cand < best) {
          best = cand;
          arg = e.from;
        }
      }
      if (arg != pi[x] && best < current - 1e-14 * std::max(1.0, std::abs(v[x]))) {
        next[x] = arg;
      }
    }
    return next;
  }

  // Root at argmax a with a self-loop; every other node points one hop
  // closer to the root along kernel edges.
  std::optional<std::vector<Node>> tree_policy() const {
    Node root = 0;
    for (Node x = 1; x < n_; ++x) {
      if (p_.a[x] > p_.a[root]) root = x;
    }
    if (!(p_.a[root] > 0.0) || edge_cost(k_, root, root) == kInf) return std::nullopt;
    std::vector<Node> pi(n_, root);
    std::vector<char> seen(n_, 0);
    std::vector<std::vector<Node>> out(n_);
    for (const Edge& e : k_.edges()) out[e.from].push_back(e.to);
    std::vector<Node> queue{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Node y = queue[head];
      for (Node x : out[y]) {
        if (seen[x]) continue;
        seen[x] = 1;
        pi[x] = y;
        queue.push_back(x);
      }
    }
    if (queue.size() != n_) return std::nullopt;
    return pi;
  }

 private:
  double weight(Node x, Node from) const { return edge_cost(k_, from, x) + source_; }

  const DiscountProblem& p_;
  const SparseKernel& k_;
  std::size_t n_;
  std::vector<double> rate_;
  std::vector<double> log_rate_;
  double source_ = 0.0;
};

constexpr std::size_t kMaxPolicyRounds = 500;

struct PolicyResult {
  std::vector<double> u;
  std::vector<Node> pi;
  std::size_t rounds = 0;
};

std::optional<PolicyResult> policy_iteration(const DiscountProblem& p,
                                             const std::vector<Node>& hint) {
  PolicySolver solver(p);
  std::vector<Node> pi = hint;
  std::optional<std::vector<double>> v = solver.evaluate(pi);
  if (!v) {
    auto tree = solver.tree_policy();
    if (!tree) return std::nullopt;
    pi = std::move(*tree);
    v = solver.evaluate(pi);
    if (!v) return std::nullopt;
  }
  for (std::size_t round = 1; round <= kMaxPolicyRounds; ++round) {
    std::vector<Node> next = solver.improve(pi, *v);
    if (next == pi) return PolicyResult{std::move(*v), std::move(pi), round};
    auto nv = solver.evaluate(next);
    // Back out switches until the policy is proper again.
    while (!nv) {
      bool reverted = false;
      for (Node x = 0; x < next.size(); ++x) {
        if (next[x] != pi[x]) {
          next[x] = pi[x];
          reverted = true;
          nv = solver.evaluate(next);
          if (nv) break;
        }
      }
      if (!reverted) return std::nullopt;
    }
    if (next == pi) return PolicyResult{std::move(*v), std::move(pi), round};
    pi = std::move(next);
    v = std::move(nv);
  }
  return std::nullopt;
}

DiscountSolution solve_impl(const DiscountProblem& problem, std::span<const double> start,
                            const SolverOptions& opts, bool monotone) {
  const std::size_t n = problem.size();
  std::vector<double> u(start.begin(), start.end());
  std::vector<Node> bp;
  double residual = kInf;
  std::size_t iter = 0;

  auto vi_step = [&]() {
    std::vector<double> next = discounted_bellman_step(u, problem, &bp);
    if (monotone) {
      for (std::size_t x = 0; x < n; ++x) {
        if (next[x] < u[x] - opts.monotone_slack) {
          std::ostringstream os;
          os << "non-monotone iterate at node " << x << " step " << iter + 1 << ": "
             << next[x] << " < " << u[x];
          throw NumericalError(os.str());
        }
      }
    }
    residual = sup_diff(next, u);
    u = std::move(next);
    ++iter;
    if (opts.observer) opts.observer(iter, u);
  };

  auto finish = [&]() {
    std::vector<Node> final_bp;
    std::vector<double> check = discounted_bellman_step(u, problem, &final_bp);
    return DiscountSolution{u, sup_diff(check, u), iter, std::move(final_bp)};
  };

  const std::size_t warmup = std::min(opts.warmup_iters, opts.max_iters);
  while (iter < warmup) {
    vi_step();
    if (residual <= opts.tol_fix) return finish();
  }

  if (opts.accelerate && iter > 0) {
    if (auto pr = policy_iteration(problem, bp)) {
      std::vector<double> check = discounted_bellman_step(pr->u, problem);
      const double res = sup_diff(check, pr->u);
      bool above = true;
      if (monotone) {
        for (std::size_t x = 0; x < n; ++x) {
          if (pr->u[x] < u[x] - 1e-9) above = false;
        }
      }
      // policy rounds count against the iteration budget
      if (res <= opts.tol_fix && above && iter + pr->rounds <= opts.max_iters) {
        u = std::move(pr->u);
        iter += pr->rounds;
        return finish();
      }
    }
  }

  while (iter < opts.max_iters) {
    vi_step();
    if (residual <= opts.tol_fix) return finish();
  }
  std::ostringstream os;
  os << "no convergence after " << iter << " iterations (residual " << residual
     << "); lambda too small for dt?";
  throw ConvergenceError(os.str(), residual, iter);
}

}  // namespace

DiscountSolution solve_max_solution(const DiscountProblem& problem,
                                    std::span<const double> v0,
                                    const SolverOptions& options) {
  problem.validate();
  problem.validate_reference(v0);
  // v0 must be an undiscounted subsolution.
  DiscountProblem undiscounted = problem;
  undiscounted.lambda = 0.0;
  const std::vector<double> t0 = discounted_bellman_step(v0, undiscounted);
  for (std::size_t x = 0; x < v0.size(); ++x) {
    if (v0[x] > t0[x] + options.subsolution_tol) {
      std::ostringstream os;
      os << "v0 is not a subsolution at node " << x << " (defect " << v0[x] - t0[x] << ")";
      throw ConfigurationError(os.str());
    }
  }
  return solve_impl(problem, v0, options, true);
}

DiscountSolution solve_fixed_point(const DiscountProblem& problem,
                                   std::span<const double> start,
                                   const SolverOptions& options) {
  problem.validate();
  if (start.size() != problem.size()) throw ConfigurationError("start vector size mismatch");
  return solve_impl(problem, start, options, false);
}

double OrbitOccupation::integrate(const std::map<Node, double>& measure,
                                  std::span<const double> f) {
  double s = 0.0;
  for (const auto& [node, w] : measure) s += w * f[node];
  return s;
}

OrbitOccupation calibrated_orbit(const DiscountSolution& solution,
                                 const DiscountProblem& problem, Node z, std::size_t steps) {
  const std::size_t n = solution.backpointer.size();
  if (z >= n) throw ConfigurationError("orbit start outside the grid");
  OrbitOccupation occ;
  occ.orbit.reserve(steps + 1);
  occ.orbit.push_back(z);
  for (std::size_t s = 0; s < steps; ++s) occ.orbit.push_back(solution.backpointer[occ.orbit.back()]);

  const std::size_t len = occ.orbit.size();
  const std::size_t first = len / 2;
  const double w = 1.0 / static_cast<double>(len - first);
  for (std::size_t i = first; i < len; ++i) occ.window_measure[occ.orbit[i]] += w;

  // log-weights -lambda dt sum_{j<k} a(orbit_j), shifted for stability
  std::vector<double> logw(len);
  double acc = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    logw[k] = -acc;
    acc += problem.lambda * problem.dt * problem.a[occ.orbit[k]];
  }
  const double top = *std::max_element(logw.begin(), logw.end());
  double total = 0.0;
  for (double& l : logw) {
    l = std::exp(l - top);
    total += l;
  }
  for (std::size_t k = 0; k < len; ++k) occ.discounted_measure[occ.orbit[k]] += logw[k] / total;
  return occ;
}

std::vector<SweepRow> lambda_sweep(const DiscountProblem& base,
                                   std::span<const double> schedule,
                                   std::span<const double> v0,
                                   std::span<const double> target,
                                   const SolverOptions& options) {
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (!(schedule[i] < schedule[i - 1])) {
      throw ConfigurationError("lambda schedule must be strictly decreasing");
    }
  }
  if (target.size() != base.size()) throw ConfigurationError("target size mismatch");
  std::vector<std::optional<SweepRow>> rows(schedule.size());
  parallel_for(schedule.size(), [&](std::size_t i) {
    DiscountProblem p = base;
    p.lambda = schedule[i];
    DiscountSolution s = solve_max_solution(p, v0, options);
    const double err = sup_diff(s.u, target);
    rows[i] = SweepRow{schedule[i], err, s.residual, s.iterations, std::move(s)};
  });
  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

std::vector<double> geometric_schedule(double hi, double lo, std::size_t points) {
  if (!(hi > 0.0) || !(lo > 0.0) || !(lo <= hi) || points == 0) {
    throw ConfigurationError("geometric schedule needs hi >= lo > 0 and points >= 1");
  }
  if (points == 1) return {hi};
  if (points > 1 && !(lo < hi)) {
    throw ConfigurationError("geometric schedule with several points needs lo < hi");
  }
  std::vector<double> out(points);
  const double step = std::log(lo / hi) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = hi * std::exp(step * static_cast<double>(i));
  }
  out.front() = hi;
  out.back() = lo;
  return out;
}

}  // namespace weakkam
