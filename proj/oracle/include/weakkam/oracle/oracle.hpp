#pragma once

// Brute-force reference computations used by the test suites and by
// `weakkam oracle`.  Deliberately naive; small inputs only.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weakkam/weakkam.hpp"

namespace weakkam::oracle {

// Min mean over every simple cycle (exhaustive DFS).  Returns +inf if the
// graph is acyclic.
double brute_min_mean_cycle(const MinPlusMatrix& k);

// Mean of a closed walk given as a node list (last edge returns to front).
double cycle_mean(const MinPlusMatrix& k, const std::vector<Node>& cycle);

// Integer weights in [-6, 12] with edge probability ~0.5, plus a random
// Hamiltonian cycle so the graph is never acyclic.
MinPlusMatrix random_graph(std::uint64_t seed, std::size_t n);

// Small-integer matrix with some +inf entries.
MinPlusMatrix random_matrix(std::uint64_t seed, std::size_t n);

// Elementwise min of K^m over m in [m_lo, m_hi].
MinPlusMatrix power_liminf(const MinPlusMatrix& k, std::size_t m_lo, std::size_t m_hi);

// sup_p p v - H(p) on a uniform grid of `samples` points over [-p_max, p_max].
double dense_legendre(const std::function<double(double)>& h, double v, double p_max,
                      std::size_t samples = 400001);

// Elementary solution of H = p^2 - U based at b, via the Mane distance
// d(b, x) = min of the two arc integrals of sqrt U.  The switching point s,
// where both arcs cost the same, is found by bisection.
struct QuadratureSolution {
  double total = 0.0;  // integral of sqrt U over the circle
  double switch_point = 0.0;
  std::function<double(double)> u;
};
QuadratureSolution sqrt_potential_solution(const std::function<double(double)>& potential,
                                           double base);

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::string detail;
};

std::vector<SuiteResult> run_oracle_suites(std::uint64_t seed = 1);

}  // namespace weakkam::oracle
