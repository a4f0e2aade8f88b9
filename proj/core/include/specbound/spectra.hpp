#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

/// Numerical tolerances shared by every spectral computation. The eigensolver
/// aims for `eigen_accuracy`; all equality/inequality decisions made on
/// computed eigenvalues use `compare`.
struct Tolerances {
  double eigen_accuracy = 1e-9;
  double compare = 1e-7;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Dense row-major square matrix of doubles.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::size_t n, std::vector<double> row_major);

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

Matrix adjacency_matrix(const Graph& g);

/// All eigenvalues of a real symmetric matrix, with multiplicity, sorted
/// descending. Cyclic Jacobi on a private copy: sweeps run until the
/// off-diagonal Frobenius norm drops below 1e-12 times the matrix norm.
///
/// Throws std::invalid_argument for an empty, non-finite or asymmetric
/// (beyond 1e-12 absolute) matrix, and std::runtime_error if 100 sweeps do
/// not converge.
std::vector<double> eigenvalues_sym(const Matrix& m);

/// Descending eigenvalue list with the tolerance used to compare it.
class Spectrum {
 public:
  /// Throws std::invalid_argument if `values` is empty or not descending,
  /// or if `tolerance` is not positive.
  explicit Spectrum(std::vector<double> values, double tolerance = kDefaultTolerances.compare);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double lambda_max() const noexcept { return values_.front(); }
  double lambda_min() const noexcept { return values_.back(); }
  double tolerance() const noexcept { return tolerance_; }

 private:
  std::vector<double> values_;
  double tolerance_;
};

Spectrum spectrum(const Graph& g, double tolerance = kDefaultTolerances.compare);

/// Spectrum of the cone over a delta-regular graph on `base_order` vertices
/// with spectrum `base`: the base eigenvalues with one copy of delta removed,
/// together with (delta +- sqrt(delta^2 + 4 * base_order)) / 2. Result is
/// sorted descending.
///
/// The base may be disconnected (e.g. the edgeless graph). Throws
/// std::invalid_argument if base.size() != base_order or the largest base
/// eigenvalue differs from delta by more than base.tolerance().
std::vector<double> cone_spectrum_predicted(const Spectrum& base, std::size_t base_degree,
                                            std::size_t base_order);

}  // namespace specbound
