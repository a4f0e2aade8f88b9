#include "specbound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace specbound {
namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kRelativeOffNorm = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Applies the rotation in the (p, q) plane that annihilates a(p, q).
void rotate(Matrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  const std::size_t n = a.dim();
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    a(r, p) = a(p, r) = new_rp;
    a(r, q) = a(q, r) = new_rq;
  }
}

}  // namespace

Matrix::Matrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n)
    throw std::invalid_argument("matrix data size " + std::to_string(data_.size()) +
                                " does not match dimension " + std::to_string(n));
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

std::vector<double> eigenvalues_sym(const Matrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) throw std::invalid_argument("eigenvalues_sym: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j)))
        throw std::invalid_argument("eigenvalues_sym: non-finite entry at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
      if (std::abs(m(i, j) - m(j, i)) > kSymmetryTolerance)
        throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }

  Matrix a = m;
  // Symmetrize exactly so the rotations see a truly symmetric matrix.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));

  const double threshold = kRelativeOffNorm * frobenius_norm(a);
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("eigenvalues_sym: Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Spectrum::Spectrum(std::vector<double> values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance) {
  if (values_.empty()) throw std::invalid_argument("Spectrum: no eigenvalues");
  if (!(tolerance_ > 0.0)) throw std::invalid_argument("Spectrum: tolerance must be positive");
  if (!std::is_sorted(values_.begin(), values_.end(), std::greater<>()))
    throw std::invalid_argument("Spectrum: eigenvalues must be sorted descending");
}

Spectrum spectrum(const Graph& g, double tolerance) {
  return Spectrum(eigenvalues_sym(adjacency_matrix(g)), tolerance);
}

std::vector<double> cone_spectrum_predicted(const Spectrum& base, std::size_t base_degree,
                                            std::size_t base_order) {
  if (base.size() != base_order)
    throw std::invalid_argument("cone_spectrum_predicted: base spectrum has " +
                                std::to_string(base.size()) + " values, expected " +
                                std::to_string(base_order));
  const double delta = static_cast<double>(base_degree);
  if (std::abs(base.lambda_max() - delta) > base.tolerance())
    throw std::invalid_argument("cone_spectrum_predicted: largest base eigenvalue " +
                                std::to_string(base.lambda_max()) + " differs from degree " +
                                std::to_string(base_degree) + "; base is not regular");

  // The all-ones eigenvector of the base (eigenvalue delta) is the one that
  // mixes with the apex; every other base eigenvector survives unchanged.
  std::vector<double> out(base.values().begin() + 1, base.values().end());
  const double root = std::sqrt(delta * delta + 4.0 * static_cast<double>(base_order));
  out.push_back(0.5 * (delta + root));
  out.push_back(0.5 * (delta - root));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace specbound
