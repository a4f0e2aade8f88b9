#include "specbound/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace specbound {
namespace {

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::domain_error(std::string(who) + ": graph is not connected");
}

}  // namespace

double phi(double delta, double Delta) {
  if (!(Delta >= 1.0)) throw std::invalid_argument("phi: Delta must be >= 1");
  return 0.5 * (delta - std::sqrt(delta * delta + 4.0 * Delta));
}

std::optional<EqualityWitness> cone_candidate(const Graph& g, double tol) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != n - 1) continue;
    const Graph base = delete_vertex(g, u);
    const auto p = profile(base);
    // Any two universal vertices are swapped by an automorphism, so the
    // first one decides.
    if (!p.regular_degree) return std::nullopt;
    EqualityWitness w;
    w.cone_vertex = u;
    w.base_degree = *p.regular_degree;
    w.base_lambda_min = spectrum(base, tol).lambda_min();
    w.phi_value = phi(static_cast<double>(w.base_degree), static_cast<double>(n - 1));
    w.condition_holds = w.base_lambda_min >= w.phi_value - tol;
    return w;
  }
  return std::nullopt;
}

std::optional<EqualityWitness> equality_structure_check(const Graph& g, double tol) {
  require_connected(g, "equality_structure_check");
  auto w = cone_candidate(g, tol);
  if (w && w->condition_holds) return w;
  return std::nullopt;
}

BoundReport product_bound_report(const Graph& g, double tol) {
  require_connected(g, "product_bound_report");
  if (g.order() < 2) throw std::domain_error("product_bound_report: need at least 2 vertices");
  return product_bound_report(g, spectrum(g, tol), tol);
}

BoundReport product_bound_report(const Graph& g, const Spectrum& spec, double tol) {
  require_connected(g, "product_bound_report");
  if (g.order() < 2) throw std::domain_error("product_bound_report: need at least 2 vertices");
  const auto p = profile(g);
  BoundReport r;
  r.order = g.order();
  r.max_degree = p.max_degree;
  r.min_degree = p.min_degree;
  r.lambda_max = spec.lambda_max();
  r.lambda_min = spec.lambda_min();
  r.product = -r.lambda_min * r.lambda_max;
  r.slack = r.product - static_cast<double>(r.max_degree);
  r.equality_within_tol = std::abs(r.slack) <= tol;
  if (auto w = cone_candidate(g, tol); w && w->condition_holds) r.witness = w;
  return r;
}

double haemers_bound(const Graph& g, std::size_t alpha) {
  const std::size_t n = g.order();
  if (alpha < 1 || alpha + 1 > n)
    throw std::invalid_argument("haemers_bound: alpha must be in 1..n-1, got " +
                                std::to_string(alpha) + " with n=" + std::to_string(n));
  const double delta = static_cast<double>(profile(g).min_degree);
  return static_cast<double>(alpha) * delta * delta / static_cast<double>(n - alpha);
}

double crossover_alpha_threshold(std::size_t n, std::size_t delta, std::size_t Delta) {
  if (delta == 0 || Delta == 0)
    throw std::invalid_argument("crossover_alpha_threshold: degrees must be positive");
  const double d = static_cast<double>(delta);
  return static_cast<double>(n) / (1.0 + d * d / static_cast<double>(Delta));
}

std::string to_string(Winner w) {
  switch (w) {
    case Winner::new_bound: return "new";
    case Winner::haemers: return "haemers";
    case Winner::tie: return "tie";
  }
  return "unknown";
}

Comparison compare_bounds(const Graph& g, std::size_t alpha, double tol) {
  require_connected(g, "compare_bounds");
  const auto p = profile(g);
  Comparison c;
  c.alpha = alpha;
  c.new_bound = static_cast<double>(p.max_degree);
  c.haemers_bound = haemers_bound(g, alpha);
  c.alpha_threshold = crossover_alpha_threshold(g.order(), p.min_degree, p.max_degree);
  if (c.new_bound > c.haemers_bound + tol)
    c.winner = Winner::new_bound;
  else if (c.haemers_bound > c.new_bound + tol)
    c.winner = Winner::haemers;
  else
    c.winner = Winner::tie;
  return c;
}

BipartiteBound bipartite_product_bound(const Graph& g, double tol) {
  return bipartite_product_bound(g, spectrum(g, tol), tol);
}

BipartiteBound bipartite_product_bound(const Graph& g, const Spectrum& spec, double tol) {
  require_connected(g, "bipartite_product_bound");
  if (g.order() < 2) throw std::domain_error("bipartite_product_bound: need at least 2 vertices");
  const auto p = profile(g);
  if (!p.bipartition) throw std::domain_error("bipartite_product_bound: graph is not bipartite");

  const auto& larger = p.bipartition->larger;
  const auto& smaller = p.bipartition->smaller;
  const double edges = static_cast<double>(g.size());

  BipartiteBound b;
  b.lambda1_squared = spec.lambda_max() * spec.lambda_max();
  b.mean_degree_larger = edges / static_cast<double>(larger.size());
  b.mean_degree_smaller = edges / static_cast<double>(smaller.size());
  const double rhs = b.mean_degree_larger * b.mean_degree_smaller;
  b.bound_holds = b.lambda1_squared >= rhs - tol;
  b.equality = std::abs(b.lambda1_squared - rhs) <= tol;

  auto constant_degree = [&](const std::vector<Vertex>& part) {
    for (Vertex v : part)
      if (p.degrees[v] != p.degrees[part.front()]) return false;
    return true;
  };
  b.biregular = constant_degree(larger) && constant_degree(smaller);
  return b;
}

}  // namespace specbound
