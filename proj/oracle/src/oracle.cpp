#include "weakkam/oracle/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace weakkam::oracle {

double cycle_mean(const MinPlusMatrix& k, const std::vector<Node>& cycle) {
  if (cycle.empty()) return kInf;
  double s = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) s += k(cycle[i], cycle[(i + 1) % cycle.size()]);
  return s / static_cast<double>(cycle.size());
}

double brute_min_mean_cycle(const MinPlusMatrix& k) {
  const std::size_t n = k.order();
  double best = kInf;
  std::vector<Node> path;
  std::vector<char> on(n, 0);
  // cycles are enumerated once per smallest node `s`
  std::function<void(Node, Node, double)> dfs = [&](Node s, Node v, double cost) {
    for (Node w = s; w < n; ++w) {
      const double c = k(v, w);
      if (c == kInf) continue;
      if (w == s) {
        best = std::min(best, (cost + c) / static_cast<double>(path.size()));
      } else if (!on[w]) {
        on[w] = 1;
        path.push_back(w);
        dfs(s, w, cost + c);
        path.pop_back();
        on[w] = 0;
      }
    }
  };
  for (Node s = 0; s < n; ++s) {
    path.assign(1, s);
    on.assign(n, 0);
    on[s] = 1;
    dfs(s, s, 0.0);
  }
  return best;
}

MinPlusMatrix random_graph(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-6, 12);
  std::bernoulli_distribution present(0.5);
  MinPlusMatrix k(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (present(rng)) k.set(i, j, weight(rng));
    }
  }
  std::vector<Node> perm(n);
  std::iota(perm.begin(), perm.end(), Node{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Node a = perm[i];
    const Node b = perm[(i + 1) % n];
    if (k(a, b) == kInf) k.set(a, b, weight(rng));
  }
  return k;
}

MinPlusMatrix random_matrix(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-20, 20);
  std::bernoulli_distribution infinite(0.2);
  MinPlusMatrix m(n);
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (!infinite(rng)) m.set(i, j, weight(rng));
    }
  }
  return m;
}

MinPlusMatrix power_liminf(const MinPlusMatrix& k, std::size_t m_lo, std::size_t m_hi) {
  MinPlusMatrix power = mp_power(k, m_lo);
  MinPlusMatrix out = power;
  const std::size_t n = k.order();
  for (std::size_t m = m_lo + 1; m <= m_hi; ++m) {
    power = mp_multiply(power, k);
    for (Node i = 0; i < n; ++i) {
      for (Node j = 0; j < n; ++j) out.set(i, j, std::min(out(i, j), power(i, j)));
    }
  }
  return out;
}

double dense_legendre(const std::function<double(double)>& h, double v, double p_max,
                      std::size_t samples) {
  double best = -kInf;
  for (std::size_t i = 0; i < samples; ++i) {
    const double p = -p_max + 2.0 * p_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    best = std::max(best, p * v - h(p));
  }
  return best;
}

QuadratureSolution sqrt_potential_solution(const std::function<double(double)>& potential,
                                           double base) {
  using boost::math::quadrature::gauss;
  auto root = [potential](double s) { return std::sqrt(std::max(0.0, potential(s))); };
  // forward arc integral from base to base + t, t in [0, 1]
  // Fixed-order Gauss panels over a 1/64 partition so kinks of sqrt U at partition points
  // (zeros at rational positions) fall on panel ends.
  auto forward = [root, base](double t) {
    if (t <= 0.0) return 0.0;
    const double end = base + t;
    double sum = 0.0;
    double a = base;
    while (a < end) {
      const double b = std::min(end, (std::floor(a * 64.0 + 1e-12) + 1.0) / 64.0);
      sum += gauss<double, 30>::integrate(root, a, b);
      a = b;
    }
    return sum;
  };
  QuadratureSolution sol;
  sol.total = forward(1.0);
  const double half = 0.5 * sol.total;
  auto [lo, hi] = boost::math::tools::bisect(
      [&](double t) { return forward(t) - half; }, 0.0, 1.0,
      boost::math::tools::eps_tolerance<double>(50));
  sol.switch_point = std::fmod(base + 0.5 * (lo + hi), 1.0);
  const double total = sol.total;
  sol.u = [forward, base, total](double x) {
    double t = std::fmod(x - base, 1.0);
    if (t < 0.0) t += 1.0;
    const double f = forward(t);
    return std::min(f, total - f);
  };
  return sol;
}

namespace {

struct Tally {
  SuiteResult result;
  double worst = 0.0;
  explicit Tally(std::string name) { result.name = std::move(name); result.passed = true; }
  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok && result.passed) {
      result.passed = false;
      result.detail = what;
    }
  }
  SuiteResult finish() {
    if (result.passed) {
      std::ostringstream os;
      os << result.checks << " checks, worst deviation " << worst;
      result.detail = os.str();
    }
    return result;
  }
};

SuiteResult karp_suite(std::uint64_t seed) {
  Tally t("karp_vs_bruteforce");
  for (std::uint64_t i = 0; i < 150; ++i) {
    const std::size_t n = 2 + i % 5;
    const MinPlusMatrix k = random_graph(seed * 1000003 + i, n);
    const double brute = brute_min_mean_cycle(k);
    const MeanCycle mc = karp_min_mean_cycle(k);
    const double dev = std::max(std::abs(mc.mean - brute),
                                std::abs(cycle_mean(k, mc.cycle) - brute));
    t.worst = std::max(t.worst, dev);
    std::ostringstream os;
    os << "graph " << i << " (n=" << n << "): karp " << mc.mean << " vs brute " << brute;
    t.check(dev <= 1e-12, os.str());
  }
  return t.finish();
}

SuiteResult minplus_suite(std::uint64_t seed) {
  Tally t("minplus_laws");
  for (std::uint64_t i = 0; i < 120; ++i) {
    const MinPlusMatrix a = random_matrix(seed * 7919 + 3 * i, 5);
    const MinPlusMatrix b = random_matrix(seed * 7919 + 3 * i + 1, 5);
    const MinPlusMatrix c = random_matrix(seed * 7919 + 3 * i + 2, 5);
    const MinPlusMatrix id = MinPlusMatrix::identity(5);
    t.check(mp_multiply(id, a) == a && mp_multiply(a, id) == a,
            "unit law fails for seed " + std::to_string(i));
    t.check(mp_multiply(mp_multiply(a, b), c) == mp_multiply(a, mp_multiply(b, c)),
            "associativity fails for seed " + std::to_string(i));
    t.check(mp_power(a, 5) == mp_multiply(mp_power(a, 2), mp_power(a, 3)),
            "power law fails for seed " + std::to_string(i));
  }
  return t.finish();
}

SuiteResult barrier_suite(std::uint64_t seed) {
  Tally t("barrier_vs_power_liminf");
  const PeriodicGrid grid(16);
  std::vector<std::pair<std::string, HamiltonianSpec>> cases;
  cases.emplace_back("example1", HamiltonianSpec::example1_preset(grid));
  cases.emplace_back("example2", HamiltonianSpec::example2_preset(grid));
  std::mt19937_64 rng(seed);
  // Non-critical self-loops must be expensive enough for the powers to
  // settle by m = 4n, so values away from the zeros stay in [1, 2].
  std::uniform_real_distribution<double> unif(1.0, 2.0);
  for (int r = 0; r < 3; ++r) {
    std::vector<double> u(grid.size());
    for (double& x : u) x = unif(rng);
    u[0] = 0.0;
    if (r > 0) u[5 + static_cast<std::size_t>(r)] = 0.0;
    cases.emplace_back("random_sin2_" + std::to_string(r),
                       HamiltonianSpec::example2_from_samples(grid, std::move(u)));
  }
  for (auto& [name, spec] : cases) {
    spec.set_velocity_bound(4.0);
    const ActionKernel kernel = build_action_kernel(grid, spec, grid.dx());
    const WeakKamAtlas atlas = build_atlas(kernel);
    const std::size_t n = grid.size();
    // Presets settle on m in [n, 4n]; for the random potentials a full lap
    // of n unit steps can still undercut the detour at m = n.
    const bool preset = name.rfind("example", 0) == 0;
    const MinPlusMatrix lim =
        preset ? power_liminf(atlas.reduced, n, 4 * n) : power_liminf(atlas.reduced, 2 * n, 6 * n);
    double dev = 0.0;
    for (Node i = 0; i < n; ++i) {
      for (Node j = 0; j < n; ++j) dev = std::max(dev, std::abs(lim(i, j) - atlas.barrier(i, j)));
    }
    t.worst = std::max(t.worst, dev);
    std::ostringstream os;
    os << name << ": max deviation " << dev;
    t.check(dev <= 1e-6, os.str());
  }
  return t.finish();
}

SuiteResult legendre_suite() {
  Tally t("legendre_vs_dense_grid");
  const PeriodicGrid grid(64);
  for (const auto& spec :
       {HamiltonianSpec::example1_preset(grid), HamiltonianSpec::example2_preset(grid)}) {
    for (double x : {0.0, 0.13, 0.5, 0.77}) {
      for (double v : {-8.0, -2.0, 0.0, 1.5, 7.0}) {
        const auto hx = [&](double p) { return spec.hamiltonian(x, p); };
        const double dense = dense_legendre(hx, v, spec.p_max());
        const double numeric = legendre_transform_numeric(spec, x, v);
        const double closed = legendre_transform(spec, x, v);
        const double dev = std::max(std::abs(dense - closed), std::abs(numeric - closed));
        t.worst = std::max(t.worst, dev);
        std::ostringstream os;
        os << "x=" << x << " v=" << v << ": closed " << closed << " dense " << dense
           << " numeric " << numeric;
        t.check(dev <= 1e-3, os.str());
      }
    }
  }
  return t.finish();
}

SuiteResult example1_suite() {
  Tally t("example1_closed_form_barrier");
  const PeriodicGrid grid(256);
  const HamiltonianSpec spec = HamiltonianSpec::example1_preset(grid);
  const WeakKamAtlas atlas = build_atlas(build_action_kernel(grid, spec, grid.dx()));
  const Node half = grid.nearest_node(0.5);
  double e0 = 0.0;
  double e1 = 0.0;
  for (Node x = 0; x < grid.size(); ++x) {
    e0 = std::max(e0, std::abs(atlas.barrier(0, x) - spec.potential(grid.position(x))));
    e1 = std::max(e1, std::abs(atlas.barrier(half, x)));
  }
  t.worst = std::max(e0, e1);
  t.check(e0 <= 0.05, "h(0, .) vs U: " + std::to_string(e0));
  t.check(e1 <= 0.05, "h(1/2, .) vs 0: " + std::to_string(e1));
  return t.finish();
}

SuiteResult example2_suite() {
  Tally t("example2_quadrature_barrier");
  const PeriodicGrid grid(256);
  const HamiltonianSpec spec = HamiltonianSpec::example2_preset(grid);
  const WeakKamAtlas atlas = build_atlas(build_action_kernel(grid, spec, grid.dx()));
  auto pot = [&](double x) { return spec.potential(x); };
  for (double base : {0.0, 0.5}) {
    const QuadratureSolution q = sqrt_potential_solution(pot, base);
    const Node b = grid.nearest_node(base);
    double dev = 0.0;
    for (Node x = 0; x < grid.size(); ++x) {
      dev = std::max(dev, std::abs(atlas.barrier(b, x) - q.u(grid.position(x))));
    }
    t.worst = std::max(t.worst, dev);
    t.check(dev <= 0.05, "base " + std::to_string(base) + ": " + std::to_string(dev));
    // closed forms (1 -+ cos 2 pi x) / (2 pi) for this potential
    double closed = 0.0;
    for (double x = 0.0; x < 1.0; x += 1.0 / 64) {
      const double ref = (1.0 - (base == 0.0 ? 1 : -1) * std::cos(2 * std::numbers::pi * x)) /
                         (2 * std::numbers::pi);
      closed = std::max(closed, std::abs(q.u(x) - ref));
    }
    t.check(closed <= 1e-9, "quadrature vs closed form: " + std::to_string(closed));
    const double gap = std::abs(q.switch_point - std::fmod(base + 0.5, 1.0));
    t.check(std::min(gap, 1.0 - gap) <= 1e-6,
            "switch point " + std::to_string(q.switch_point));
  }
  return t.finish();
}

}  // namespace

std::vector<SuiteResult> run_oracle_suites(std::uint64_t seed) {
  return {karp_suite(seed),  minplus_suite(seed),  barrier_suite(seed),
          legendre_suite(),  example1_suite(),     example2_suite()};
}

}  // namespace weakkam::oracle
