#include "weakkam/grid_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "weakkam/error.hpp"
#include "weakkam/parallel.hpp"

namespace weakkam {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string describe(double value) {
  std::ostringstream os;
  os.precision(6);
  os << value;
  return os.str();
}

}  // namespace

PeriodicGrid::PeriodicGrid(std::size_t n, double circumference)
    : n_(n), circumference_(circumference), dx_(circumference / static_cast<double>(n)) {
  if (n < 4) {
    throw ConfigurationError("grid needs n >= 4 nodes, got " + std::to_string(n));
  }
  if (!(circumference > 0.0) || !std::isfinite(circumference)) {
    throw ConfigurationError("grid circumference must be positive and finite");
  }
}

std::ptrdiff_t PeriodicGrid::signed_steps(Node from, Node to) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(n_);
  std::ptrdiff_t d = (static_cast<std::ptrdiff_t>(to) - static_cast<std::ptrdiff_t>(from)) % n;
  if (d < 0) d += n;
  if (2 * d > n) d -= n;
  return d;
}

double PeriodicGrid::displacement(Node from, Node to) const noexcept {
  return static_cast<double>(signed_steps(from, to)) * dx_;
}

double PeriodicGrid::distance(Node a, Node b) const noexcept {
  return std::abs(displacement(a, b));
}

double PeriodicGrid::midpoint(Node from, Node to) const noexcept {
  // Counted in half-steps so that midpoint(y, x) and midpoint(x, y) are the
  // same double.
  const auto two_n = static_cast<std::ptrdiff_t>(2 * n_);
  std::ptrdiff_t half = (2 * static_cast<std::ptrdiff_t>(from) + signed_steps(from, to)) % two_n;
  if (half < 0) half += two_n;
  return static_cast<double>(half) * (0.5 * dx_);
}

double PeriodicGrid::wrap(double x) const noexcept {
  double r = std::fmod(x, circumference_);
  if (r < 0.0) r += circumference_;
  if (r >= circumference_) r = 0.0;
  return r;
}

Node PeriodicGrid::nearest_node(double x) const noexcept {
  const auto k = static_cast<std::size_t>(std::llround(wrap(x) / dx_));
  return k % n_;
}

// ---------------------------------------------------------------------------

HamiltonianSpec::HamiltonianSpec(HamiltonianKind kind, const PeriodicGrid& grid)
    : kind_(kind), circumference_(grid.circumference()), dx_(grid.dx()) {}

HamiltonianSpec HamiltonianSpec::example1(const PeriodicGrid& grid, ScalarField potential,
                                          ScalarField derivative) {
  HamiltonianSpec spec(HamiltonianKind::example1, grid);
  spec.potential_.resize(grid.size());
  spec.derivative_.resize(grid.size());
  for (Node i = 0; i < grid.size(); ++i) {
    spec.potential_[i] = potential(grid.position(i));
    spec.derivative_[i] = derivative(grid.position(i));
  }
  spec.potential_fn_ = std::move(potential);
  spec.derivative_fn_ = std::move(derivative);
  spec.v_max_ = default_velocity_bound(spec);
  spec.p_max_ = default_momentum_radius(spec.v_max_);
  return spec;
}

HamiltonianSpec HamiltonianSpec::example1_from_samples(const PeriodicGrid& grid,
                                                       std::vector<double> potential) {
  if (potential.size() != grid.size()) {
    throw ConfigurationError("potential needs " + std::to_string(grid.size()) +
                             " samples, got " + std::to_string(potential.size()));
  }
  HamiltonianSpec spec(HamiltonianKind::example1, grid);
  const std::size_t n = grid.size();
  spec.derivative_.resize(n);
  for (Node i = 0; i < n; ++i) {
    spec.derivative_[i] =
        (potential[(i + 1) % n] - potential[(i + n - 1) % n]) / (2.0 * grid.dx());
  }
  spec.potential_ = std::move(potential);
  spec.v_max_ = default_velocity_bound(spec);
  spec.p_max_ = default_momentum_radius(spec.v_max_);
  return spec;
}

HamiltonianSpec HamiltonianSpec::example2_from_samples(const PeriodicGrid& grid,
                                                       std::vector<double> potential) {
  if (potential.size() != grid.size()) {
    throw ConfigurationError("potential needs " + std::to_string(grid.size()) +
                             " samples, got " + std::to_string(potential.size()));
  }
  const auto [lo, hi] = std::minmax_element(potential.begin(), potential.end());
  if (*lo < -1e-12) {
    throw ConfigurationError("example2 potential must be nonnegative (min sample " +
                             describe(*lo) + ")");
  }
  if (*lo > 1e-9 * std::max(1.0, *hi)) {
    throw ConfigurationError("example2 potential must vanish somewhere (min sample " +
                             describe(*lo) + ")");
  }
  HamiltonianSpec spec(HamiltonianKind::example2, grid);
  spec.potential_ = std::move(potential);
  spec.v_max_ = default_velocity_bound(spec);
  spec.p_max_ = default_momentum_radius(spec.v_max_);
  return spec;
}

HamiltonianSpec HamiltonianSpec::example2(const PeriodicGrid& grid, ScalarField potential) {
  std::vector<double> samples(grid.size());
  for (Node i = 0; i < grid.size(); ++i) samples[i] = potential(grid.position(i));
  HamiltonianSpec spec = example2_from_samples(grid, std::move(samples));
  spec.potential_fn_ = std::move(potential);
  return spec;
}

HamiltonianSpec HamiltonianSpec::custom(const PeriodicGrid& grid, LagrangianField lagrangian,
                                        double v_max, double p_max,
                                        std::vector<double> potential) {
  if (!potential.empty() && potential.size() != grid.size()) {
    throw ConfigurationError("potential needs " + std::to_string(grid.size()) +
                             " samples, got " + std::to_string(potential.size()));
  }
  HamiltonianSpec spec(HamiltonianKind::custom, grid);
  spec.lagrangian_fn_ = std::move(lagrangian);
  spec.potential_ = std::move(potential);
  spec.set_velocity_bound(v_max);
  spec.set_momentum_radius(p_max);

  // Convexity spot check on a coarse (x, v) sample.
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / 64);
  const double h = v_max / 32.0;
  for (Node i = 0; i < grid.size(); i += stride) {
    const double x = grid.position(i);
    for (int k = -31; k <= 31; ++k) {
      const double v = k * h;
      const double lm = spec.lagrangian_fn_(x, v - h);
      const double l0 = spec.lagrangian_fn_(x, v);
      const double lp = spec.lagrangian_fn_(x, v + h);
      if (lm - 2.0 * l0 + lp < -1e-9 * (1.0 + std::abs(l0))) {
        throw ConfigurationError("custom Lagrangian is not convex in v at x = " +
                                 describe(x) + ", v = " + describe(v));
      }
    }
  }
  return spec;
}

HamiltonianSpec HamiltonianSpec::example1_preset(const PeriodicGrid& grid) {
  const double c = grid.circumference();
  return example1(
      grid, [c](double x) { return 0.5 * (1.0 - std::cos(kTwoPi * x / c)); },
      [c](double x) { return 0.5 * (kTwoPi / c) * std::sin(kTwoPi * x / c); });
}

HamiltonianSpec HamiltonianSpec::example2_preset(const PeriodicGrid& grid) {
  const double c = grid.circumference();
  return example2(grid, [c](double x) {
    const double s = std::sin(kTwoPi * x / c);
    return s * s;
  });
}

void HamiltonianSpec::set_velocity_bound(double v_max) {
  if (!(v_max > 0.0) || !std::isfinite(v_max)) {
    throw ConfigurationError("velocity bound v_max must be positive, got " + describe(v_max));
  }
  v_max_ = v_max;
}

void HamiltonianSpec::set_momentum_radius(double p_max) {
  if (!(p_max > 0.0) || !std::isfinite(p_max)) {
    throw ConfigurationError("momentum radius p_max must be positive, got " + describe(p_max));
  }
  p_max_ = p_max;
}

double HamiltonianSpec::interpolate(std::span<const double> samples, double x) const {
  if (samples.empty()) return 0.0;
  const std::size_t n = samples.size();
  double r = std::fmod(x, circumference_);
  if (r < 0.0) r += circumference_;
  const double t = r / dx_;
  const double base = std::floor(t);
  const double frac = t - base;
  const std::size_t i = static_cast<std::size_t>(base) % n;
  if (frac == 0.0) return samples[i];
  return (1.0 - frac) * samples[i] + frac * samples[(i + 1) % n];
}

double HamiltonianSpec::potential(double x) const {
  return potential_fn_ ? potential_fn_(x) : interpolate(potential_, x);
}

double HamiltonianSpec::potential_derivative(double x) const {
  return derivative_fn_ ? derivative_fn_(x) : interpolate(derivative_, x);
}

double HamiltonianSpec::hamiltonian(double x, double p) const {
  switch (kind_) {
    case HamiltonianKind::example1:
      return p * (p - potential_derivative(x));
    case HamiltonianKind::example2:
      return p * p - potential(x);
    case HamiltonianKind::custom:
      break;
  }
  throw ConfigurationError("custom Hamiltonian specs carry a Lagrangian only");
}

double HamiltonianSpec::lagrangian(double x, double v) const {
  switch (kind_) {
    case HamiltonianKind::example1: {
      const double w = v + potential_derivative(x);
      return 0.25 * w * w;
    }
    case HamiltonianKind::example2:
      return 0.25 * v * v + potential(x);
    case HamiltonianKind::custom:
      return lagrangian_fn_(x, v);
  }
  return 0.0;
}

double default_velocity_bound(const HamiltonianSpec& spec) {
  switch (spec.kind()) {
    case HamiltonianKind::example1: {
      double m = 0.0;
      for (double d : spec.derivative_samples()) m = std::max(m, std::abs(d));
      return 4.0 * (1.0 + m);
    }
    case HamiltonianKind::example2: {
      double m = 0.0;
      for (double u : spec.potential_samples()) m = std::max(m, std::sqrt(std::max(u, 0.0)));
      return 4.0 * (1.0 + m);
    }
    case HamiltonianKind::custom:
      return spec.v_max();
  }
  return spec.v_max();
}

double default_momentum_radius(double v_max) { return 8.0 * (1.0 + v_max); }

double numeric_legendre(const std::function<double(double)>& hamiltonian_at_x, double v,
                        double p_max) {
  const std::size_t samples = kLegendreSamples;
  const double h = 2.0 * p_max / static_cast<double>(samples - 1);
  std::size_t best_k = 0;
  double best = -kInf;
  for (std::size_t k = 0; k < samples; ++k) {
    const double p = -p_max + static_cast<double>(k) * h;
    const double value = p * v - hamiltonian_at_x(p);
    if (value > best) {
      best = value;
      best_k = k;
    }
  }
  if (best_k == 0 || best_k == samples - 1) {
    throw NumericalError("momentum window too small (maximizer at |p| = p_max = " +
                         describe(p_max) + ")");
  }
  // Concave objective: the true maximizer lies within one cell of best_k.
  const double lo = -p_max + static_cast<double>(best_k - 1) * h;
  const double fine = 2.0 * h / static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    const double p = lo + static_cast<double>(k) * fine;
    best = std::max(best, p * v - hamiltonian_at_x(p));
  }
  return best;
}

double legendre_transform(const HamiltonianSpec& spec, double x, double v) {
  if (std::abs(v) > spec.v_max() * (1.0 + 1e-12)) {
    throw ConfigurationError("|v| = " + describe(std::abs(v)) + " exceeds v_max = " +
                             describe(spec.v_max()));
  }
  return spec.lagrangian(x, v);
}

double legendre_transform_numeric(const HamiltonianSpec& spec, double x, double v) {
  if (std::abs(v) > spec.v_max() * (1.0 + 1e-12)) {
    throw ConfigurationError("|v| = " + describe(std::abs(v)) + " exceeds v_max = " +
                             describe(spec.v_max()));
  }
  return numeric_legendre([&](double p) { return spec.hamiltonian(x, p); }, v, spec.p_max());
}

// ---------------------------------------------------------------------------

ActionKernel::ActionKernel(PeriodicGrid grid, double dt, std::size_t half_width,
                           MinPlusMatrix cost)
    : grid_(grid), dt_(dt), half_width_(half_width), cost_(std::move(cost)) {}

ActionKernel build_action_kernel(const PeriodicGrid& grid, const HamiltonianSpec& spec,
                                 double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigurationError("time step dt must be positive, got " + describe(dt));
  }
  const double reach = spec.v_max() * dt;
  if (reach < 2.0 * grid.dx() * (1.0 - 1e-12)) {
    throw ConfigurationError("stencil too narrow: v_max*dt = " + describe(reach) +
                             " < 2*dx = " + describe(2.0 * grid.dx()));
  }
  if (reach > 0.5 * grid.circumference() * (1.0 + 1e-12)) {
    throw ConfigurationError("stencil too wide: v_max*dt = " + describe(reach) +
                             " > circumference/2 = " + describe(0.5 * grid.circumference()));
  }
  const auto half_width = static_cast<std::size_t>(std::floor(reach / grid.dx() + 1e-9));
  const std::size_t n = grid.size();

  std::vector<double> cost(n * n, kInf);
  parallel_for(n, [&](std::size_t y) {
    for (std::ptrdiff_t k = -static_cast<std::ptrdiff_t>(half_width);
         k <= static_cast<std::ptrdiff_t>(half_width); ++k) {
      const auto nn = static_cast<std::ptrdiff_t>(n);
      const auto x = static_cast<Node>(((static_cast<std::ptrdiff_t>(y) + k) % nn + nn) % nn);
      const double d = grid.displacement(y, x);
      cost[y * n + x] = dt * spec.lagrangian(grid.midpoint(y, x), d / dt);
    }
  });
  return ActionKernel(grid, dt, half_width, MinPlusMatrix(n, std::move(cost)));
}

}  // namespace weakkam
