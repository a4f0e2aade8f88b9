#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "specbound/graph.hpp"
#include "specbound/spectra.hpp"

namespace specbound {

/// phi(delta, Delta) = (delta - sqrt(delta^2 + 4 Delta)) / 2, the smaller root
/// of the two-cell quotient [[0, Delta], [1, delta]]. Always negative.
/// Throws std::invalid_argument if Delta < 1.
double phi(double delta, double Delta);

/// Structural certificate that G = H' + u with H' regular and
/// lambda_min(H') >= phi(delta, n - 1) - tol.
struct EqualityWitness {
  Vertex cone_vertex = 0;
  std::size_t base_degree = 0;
  double base_lambda_min = 0.0;
  double phi_value = 0.0;
  bool condition_holds = false;
};

struct BoundReport {
  std::size_t order = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double product = 0.0;  // -lambda_min * lambda_max
  double slack = 0.0;    // product - max_degree
  bool equality_within_tol = false;
  std::optional<EqualityWitness> witness;
};

/// Cone-over-regular-base candidate regardless of the eigenvalue condition:
/// present iff some vertex is universal and the rest is regular. Uses the
/// smallest universal vertex.
std::optional<EqualityWitness> cone_candidate(const Graph& g, double tol);

/// cone_candidate restricted to witnesses whose condition holds.
/// Throws std::domain_error for a disconnected graph.
std::optional<EqualityWitness> equality_structure_check(const Graph& g, double tol);

/// Evaluates -lambda_min * lambda_max >= Delta. The witness is filled in
/// whenever the structural check succeeds, independently of the numerical
/// slack, so that the two verdicts can be compared.
/// Throws std::domain_error for a disconnected graph or n < 2.
BoundReport product_bound_report(const Graph& g, double tol = kDefaultTolerances.compare);

/// Same as above, reusing an already computed spectrum of g.
BoundReport product_bound_report(const Graph& g, const Spectrum& spec, double tol);

/// alpha * delta^2 / (n - alpha). Throws std::invalid_argument unless
/// 1 <= alpha <= n - 1.
double haemers_bound(const Graph& g, std::size_t alpha);

/// n / (1 + delta^2 / Delta): the product bound beats the alpha-based bound
/// for independence numbers up to this value. Throws std::invalid_argument
/// if delta or Delta is zero.
double crossover_alpha_threshold(std::size_t n, std::size_t delta, std::size_t Delta);

enum class Winner { new_bound, haemers, tie };

std::string to_string(Winner w);

struct Comparison {
  double new_bound = 0.0;      // Delta
  double haemers_bound = 0.0;  // alpha delta^2 / (n - alpha)
  Winner winner = Winner::tie;
  double alpha_threshold = 0.0;
  std::size_t alpha = 0;
};

/// Ties (|difference| <= tol) count for neither side.
/// Throws std::domain_error for a disconnected graph.
Comparison compare_bounds(const Graph& g, std::size_t alpha, double tol = kDefaultTolerances.compare);

struct BipartiteBound {
  double lambda1_squared = 0.0;
  double mean_degree_larger = 0.0;   // part 1, the larger colour class
  double mean_degree_smaller = 0.0;  // part 2
  bool bound_holds = false;
  bool equality = false;
  bool biregular = false;
};

/// lambda_1^2 >= mean_degree_larger * mean_degree_smaller for a connected
/// bipartite graph. Throws std::domain_error for disconnected or
/// non-bipartite input, or n < 2.
BipartiteBound bipartite_product_bound(const Graph& g, double tol = kDefaultTolerances.compare);
BipartiteBound bipartite_product_bound(const Graph& g, const Spectrum& spec, double tol);

}  // namespace specbound
