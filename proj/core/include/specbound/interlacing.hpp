#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/spectra.hpp"

namespace specbound {

/// Ordered cover of the vertex set by nonempty, pairwise disjoint cells.
class Partition {
 public:
  /// Validates against a graph order; throws std::invalid_argument if the
  /// cells are empty, overlap, miss a vertex or name one out of range.
  Partition(std::vector<std::vector<Vertex>> cells, std::size_t order);

  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::size_t order() const noexcept { return order_; }
  const std::vector<Vertex>& cell(std::size_t i) const noexcept { return cells_[i]; }
  const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }

 private:
  std::vector<std::vector<Vertex>> cells_;
  std::size_t order_;
};

/// b(i, j) is the average number of neighbours in cell j over the vertices of
/// cell i.
struct QuotientMatrix {
  std::vector<std::size_t> cell_sizes;
  Matrix entries;
};

/// Throws std::invalid_argument if p was built for a different order.
QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

bool is_equitable(const Graph& g, const Partition& p);

/// Eigenvalues of a quotient matrix, sorted descending. The quotient is
/// similar to the symmetric matrix e(i, j) / sqrt(|U_i| |U_j|); 2x2 quotients
/// use the closed-form roots instead of the iterative solver.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

/// Roots of [[0, apex_degree], [1, mean_base_degree]], larger first.
std::pair<double, double> two_cell_quotient_roots(double mean_base_degree, double apex_degree);

/// True iff outer[i] + tol >= inner[i] >= outer[n - m + i] - tol for all i.
/// Throws std::invalid_argument if inner is not strictly shorter than outer
/// or either list is not sorted descending.
bool interlaces(std::span<const double> outer, std::span<const double> inner, double tol);

/// Smallest k such that inner[i] meets outer[i] for i < k and
/// inner[i] meets outer[n - m + i] for i >= k (0-based), or nullopt if the
/// interlacing is not tight. Throws std::invalid_argument if the inputs do
/// not interlace.
std::optional<std::size_t> tight_interlacing_index(std::span<const double> outer,
                                                   std::span<const double> inner, double tol);

}  // namespace specbound
