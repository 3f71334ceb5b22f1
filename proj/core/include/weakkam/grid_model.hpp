#pragma once

// Periodic configuration grid, Tonelli Hamiltonian presets, the numeric
// Legendre transform and the one-step action kernel.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "weakkam/tropical.hpp"

namespace weakkam {

// Uniform discretization of a circle of given circumference; node i sits at
// i * dx.
class PeriodicGrid {
 public:
  explicit PeriodicGrid(std::size_t n, double circumference = 1.0);

  std::size_t size() const noexcept { return n_; }
  double circumference() const noexcept { return circumference_; }
  double dx() const noexcept { return dx_; }

  double position(Node i) const noexcept { return static_cast<double>(i) * dx_; }

  // Signed geodesic offset from `from` to `to`, in (-C/2, C/2].  The
  // antipodal tie resolves to +C/2 in both directions.
  double displacement(Node from, Node to) const noexcept;
  // The same offset counted in nodes, in (-n/2, n/2].
  std::ptrdiff_t signed_steps(Node from, Node to) const noexcept;
  double distance(Node a, Node b) const noexcept;

  // Position halfway along the geodesic from `from` to `to`, in [0, C).
  double midpoint(Node from, Node to) const noexcept;

  double wrap(double x) const noexcept;
  Node nearest_node(double x) const noexcept;

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

 private:
  std::size_t n_;
  double circumference_;
  double dx_;
};

enum class HamiltonianKind { example1, example2, custom };

using ScalarField = std::function<double(double)>;
using LagrangianField = std::function<double(double x, double v)>;

// A Tonelli Hamiltonian on the circle together with its Lagrangian.
//
//   example1: H(x,p) = p (p - U'(x)),  L(x,v) = (v + U'(x))^2 / 4
//   example2: H(x,p) = p^2 - U(x),     L(x,v) = v^2 / 4 + U(x),  U >= 0, min U = 0
//   custom:   L supplied directly, convex in v (spot-checked)
//
// U is stored as node samples; closed-form evaluators, when present, are
// used off-grid, otherwise samples are linearly interpolated.
class HamiltonianSpec {
 public:
  static HamiltonianSpec example1(const PeriodicGrid& grid, ScalarField potential,
                                  ScalarField derivative);
  // U' by periodic central differences of the samples.
  static HamiltonianSpec example1_from_samples(const PeriodicGrid& grid,
                                               std::vector<double> potential);
  static HamiltonianSpec example2(const PeriodicGrid& grid, ScalarField potential);
  static HamiltonianSpec example2_from_samples(const PeriodicGrid& grid,
                                               std::vector<double> potential);
  // `potential` is optional metadata (reported, not used by L).
  static HamiltonianSpec custom(const PeriodicGrid& grid, LagrangianField lagrangian,
                                double v_max, double p_max,
                                std::vector<double> potential = {});

  // Presets used throughout the tests and the CLI:
  // example1 with U = (1 - cos 2 pi x)/2, example2 with U = sin^2(2 pi x).
  static HamiltonianSpec example1_preset(const PeriodicGrid& grid);
  static HamiltonianSpec example2_preset(const PeriodicGrid& grid);

  HamiltonianKind kind() const noexcept { return kind_; }
  double v_max() const noexcept { return v_max_; }
  double p_max() const noexcept { return p_max_; }
  void set_velocity_bound(double v_max);
  void set_momentum_radius(double p_max);

  std::span<const double> potential_samples() const noexcept { return potential_; }
  // U' at nodes (example1 only).
  std::span<const double> derivative_samples() const noexcept { return derivative_; }
  double potential(double x) const;
  double potential_derivative(double x) const;

  // Presets only; custom specs carry no Hamiltonian.
  double hamiltonian(double x, double p) const;
  double lagrangian(double x, double v) const;

 private:
  HamiltonianSpec(HamiltonianKind kind, const PeriodicGrid& grid);
  double interpolate(std::span<const double> samples, double x) const;

  HamiltonianKind kind_;
  double circumference_;
  double dx_;
  std::vector<double> potential_;
  std::vector<double> derivative_;
  ScalarField potential_fn_;
  ScalarField derivative_fn_;
  LagrangianField lagrangian_fn_;
  double v_max_ = 0.0;
  double p_max_ = 0.0;
};

// Default velocity truncation: 4 (1 + max|U'|) for example1, 4 (1 + max sqrt U)
// for example2.  Momentum radius: 8 (1 + v_max).
double default_velocity_bound(const HamiltonianSpec& spec);
double default_momentum_radius(double v_max);

inline constexpr std::size_t kLegendreSamples = 2049;

// sup_p p v - H(x, p) over p in [-p_max, p_max]: a uniform grid of
// kLegendreSamples points, refined by a second uniform grid on the cells
// around the coarse maximizer.  Throws NumericalError("momentum window too
// small") if the maximizer sits on the boundary.
double numeric_legendre(const std::function<double(double)>& hamiltonian_at_x,
                        double v, double p_max);

// L(x, v).  Presets return the closed form, custom returns the supplied
// Lagrangian.  Requires |v| <= v_max.
double legendre_transform(const HamiltonianSpec& spec, double x, double v);

// Numeric route through the Hamiltonian (presets only).
double legendre_transform_numeric(const HamiltonianSpec& spec, double x, double v);

// One-time-step minimal action between grid nodes:
// cost(y, x) = dt L(midpoint(y, x), displacement(y, x) / dt) within the
// velocity stencil, +inf outside.  Immutable after construction.
class ActionKernel {
 public:
  ActionKernel(PeriodicGrid grid, double dt, std::size_t half_width,
               MinPlusMatrix cost);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  double dt() const noexcept { return dt_; }
  std::size_t stencil_half_width() const noexcept { return half_width_; }
  const MinPlusMatrix& cost() const noexcept { return cost_; }
  bool reachable(Node from, Node to) const noexcept {
    return cost_(from, to) < kInf;
  }

 private:
  PeriodicGrid grid_;
  double dt_;
  std::size_t half_width_;
  MinPlusMatrix cost_;
};

// Requires dt > 0 and 2 dx <= v_max dt <= C/2; throws ConfigurationError
// naming the violated bound otherwise.
ActionKernel build_action_kernel(const PeriodicGrid& grid,
                                 const HamiltonianSpec& spec, double dt);

}  // namespace weakkam
