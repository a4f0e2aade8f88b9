#include "specbound/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace specbound {
namespace {

bool within(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void check_descending(std::span<const double> xs, const char* name) {
  if (!std::is_sorted(xs.begin(), xs.end(), std::greater<>()))
    throw std::invalid_argument(std::string(name) + " eigenvalues are not sorted descending");
}

// Number of neighbours of every vertex inside each cell: counts[v][j].
std::vector<std::vector<std::size_t>> cell_degrees(const Graph& g, const Partition& p) {
  if (p.order() != g.order())
    throw std::invalid_argument("partition covers " + std::to_string(p.order()) +
                                " vertices but graph has " + std::to_string(g.order()));
  std::vector<std::size_t> cell_of(g.order());
  for (std::size_t j = 0; j < p.cell_count(); ++j)
    for (Vertex v : p.cell(j)) cell_of[v] = j;
  std::vector<std::vector<std::size_t>> counts(g.order(), std::vector<std::size_t>(p.cell_count(), 0));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) ++counts[v][cell_of[w]];
  return counts;
}

}  // namespace

Partition::Partition(std::vector<std::vector<Vertex>> cells, std::size_t order)
    : cells_(std::move(cells)), order_(order) {
  if (cells_.empty()) throw std::invalid_argument("partition has no cells");
  std::vector<bool> seen(order, false);
  std::size_t covered = 0;
  for (const auto& c : cells_) {
    if (c.empty()) throw std::invalid_argument("partition has an empty cell");
    for (Vertex v : c) {
      if (v >= order)
        throw std::invalid_argument("partition vertex " + std::to_string(v) + " out of range");
      if (seen[v])
        throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two cells");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != order) throw std::invalid_argument("partition does not cover every vertex");
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
  const auto counts = cell_degrees(g, p);
  const std::size_t m = p.cell_count();
  QuotientMatrix q{{}, Matrix(m)};
  for (std::size_t i = 0; i < m; ++i) {
    q.cell_sizes.push_back(p.cell(i).size());
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t total = 0;
      for (Vertex u : p.cell(i)) total += counts[u][j];
      q.entries(i, j) = static_cast<double>(total) / static_cast<double>(p.cell(i).size());
    }
  }
  return q;
}

bool is_equitable(const Graph& g, const Partition& p) {
  const auto counts = cell_degrees(g, p);
  for (const auto& cell : p.cells())
    for (Vertex u : cell)
      if (counts[u] != counts[cell.front()]) return false;
  return true;
}

std::pair<double, double> two_cell_quotient_roots(double mean_base_degree, double apex_degree) {
  const double root = std::sqrt(mean_base_degree * mean_base_degree + 4.0 * apex_degree);
  return {0.5 * (mean_base_degree + root), 0.5 * (mean_base_degree - root)};
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
  const auto& b = q.entries;
  const std::size_t m = b.dim();
  if (m == 1) return {b(0, 0)};
  if (m == 2) {
    const double tr = b(0, 0) + b(1, 1);
    const double gap = b(0, 0) - b(1, 1);
    const double root = std::sqrt(gap * gap + 4.0 * b(0, 1) * b(1, 0));
    return {0.5 * (tr + root), 0.5 * (tr - root)};
  }
  Matrix sym(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // edge count e(i, j) = |U_i| b(i, j), symmetric in i and j.
      const double si = static_cast<double>(q.cell_sizes[i]);
      const double sj = static_cast<double>(q.cell_sizes[j]);
      sym(i, j) = si * b(i, j) / std::sqrt(si * sj);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
  return eigenvalues_sym(sym);
}

bool interlaces(std::span<const double> outer, std::span<const double> inner, double tol) {
  const std::size_t n = outer.size();
  const std::size_t m = inner.size();
  if (m == 0 || m >= n)
    throw std::invalid_argument("interlacing needs 0 < m < n, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  check_descending(outer, "outer");
  check_descending(inner, "inner");
  for (std::size_t i = 0; i < m; ++i)
    if (!(outer[i] + tol >= inner[i] && inner[i] >= outer[n - m + i] - tol)) return false;
  return true;
}

std::optional<std::size_t> tight_interlacing_index(std::span<const double> outer,
                                                   std::span<const double> inner, double tol) {
  if (!interlaces(outer, inner, tol))
    throw std::invalid_argument("tight_interlacing_index: inputs do not interlace");
  const std::size_t n = outer.size();
  const std::size_t m = inner.size();
  // prefix_ok[k]: inner[i] meets outer[i] for all i < k.
  // suffix_ok[k]: inner[i] meets outer[n - m + i] for all i >= k.
  std::vector<bool> prefix_ok(m + 1, true), suffix_ok(m + 1, true);
  for (std::size_t i = 0; i < m; ++i) prefix_ok[i + 1] = prefix_ok[i] && within(inner[i], outer[i], tol);
  for (std::size_t i = m; i-- > 0;)
    suffix_ok[i] = suffix_ok[i + 1] && within(inner[i], outer[n - m + i], tol);
  for (std::size_t k = 0; k <= m; ++k)
    if (prefix_ok[k] && suffix_ok[k]) return k;
  return std::nullopt;
}

}  // namespace specbound
