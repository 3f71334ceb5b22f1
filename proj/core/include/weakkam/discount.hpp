#pragma once

// Maximal solution of the discounted equation
//   lambda a(x) u + H(x, Du) - A lambda = c0
// as the fixed point of an implicit discounted Bellman operator on the
// reduced kernel, calibrated orbits, and the vanishing-discount sweep.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "weakkam/tropical.hpp"

namespace weakkam {

struct DiscountProblem {
  double lambda = 0.0;
  std::vector<double> a;  // discount coefficient at nodes
  double A = 0.0;
  std::shared_ptr<const SparseKernel> kernel;  // reduced kernel
  double c0 = 0.0;
  double dt = 0.0;

  std::size_t size() const noexcept { return a.size(); }
  double a_sup() const noexcept;

  // Sizes agree, lambda > 0, lambda dt |a|_inf < 1.
  void validate() const;
  // A > |a|_inf |v0|_inf.
  void validate_reference(std::span<const double> v0) const;
};

struct DiscountSolution {
  std::vector<double> u;
  double residual = 0.0;
  std::size_t iterations = 0;
  std::vector<Node> backpointer;  // argmin predecessor, smallest index on ties
};

// u'(x) = (min_y (u(y) + K(y, x)) + dt A lambda) / (1 + lambda dt a(x)).
// lambda = 0 is allowed here (undiscounted step).
std::vector<double> discounted_bellman_step(std::span<const double> u,
                                            const DiscountProblem& problem,
                                            std::vector<Node>* backpointer = nullptr);

struct SolverOptions {
  double tol_fix = 1e-10;
  std::size_t max_iters = 200000;
  // Plain value-iteration steps before switching to policy iteration.
  std::size_t warmup_iters = 1000;
  bool accelerate = true;
  double monotone_slack = 1e-12;
  // Allowed undiscounted defect of the starting subsolution.
  double subsolution_tol = 1e-6;
  // Called after every value-iteration step with (step index, iterate).
  std::function<void(std::size_t, std::span<const double>)> observer;
};

// Maximal solution: monotone iteration from the subsolution v0, finished by
// policy iteration over proper policies.  Throws ConfigurationError if v0 is
// not a subsolution or A is too small, NumericalError on a decreasing
// iterate, ConvergenceError past max_iters.
DiscountSolution solve_max_solution(const DiscountProblem& problem,
                                    std::span<const double> v0,
                                    const SolverOptions& options = {});

// Same fixed-point machinery from an arbitrary start, without the
// subsolution precondition or monotonicity assertion.
DiscountSolution solve_fixed_point(const DiscountProblem& problem,
                                   std::span<const double> start,
                                   const SolverOptions& options = {});

struct OrbitOccupation {
  std::vector<Node> orbit;                    // z, bp(z), bp^2(z), ...
  std::map<Node, double> window_measure;      // trailing half of the orbit
  std::map<Node, double> discounted_measure;  // weights exp(-lambda dt sum a)

  static double integrate(const std::map<Node, double>& measure,
                          std::span<const double> f);
};

OrbitOccupation calibrated_orbit(const DiscountSolution& solution,
                                 const DiscountProblem& problem, Node z,
                                 std::size_t steps);

struct SweepRow {
  double lambda;
  double sup_error;
  double residual;
  std::size_t iterations;
  DiscountSolution solution;
};

// Solves each lambda of a strictly decreasing schedule (concurrently) and
// records sup_x |u_lambda - target|.  Rows keep schedule order.
std::vector<SweepRow> lambda_sweep(const DiscountProblem& base,
                                   std::span<const double> schedule,
                                   std::span<const double> v0,
                                   std::span<const double> target,
                                   const SolverOptions& options = {});

// `points` values from hi down to lo, evenly spaced in log scale.
std::vector<double> geometric_schedule(double hi, double lo, std::size_t points);

}  // namespace weakkam
