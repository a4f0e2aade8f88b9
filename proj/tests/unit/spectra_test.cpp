#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "specbound/enumeration.hpp"
#include "specbound/families.hpp"
#include "specbound/spectra.hpp"

using namespace specbound;

namespace {

void check_close(std::span<const double> got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

// Random orthogonal matrix as a product of Householder reflections.
Matrix random_orthogonal(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> normal;
  Matrix q(n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) = 1.0;
  for (int r = 0; r < 3; ++r) {
    std::vector<double> v(n);
    double norm2 = 0.0;
    for (double& x : v) {
      x = normal(rng);
      norm2 += x * x;
    }
    // q <- q (I - 2 v v^T / |v|^2)
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += q(i, k) * v[k];
      for (std::size_t j = 0; j < n; ++j) q(i, j) -= 2.0 * dot * v[j] / norm2;
    }
  }
  return q;
}

}  // namespace

TEST_CASE("eigenvalues_sym examples") {
  check_close(eigenvalues_sym(adjacency_matrix(make_family({FamilyKind::cycle, {4}}))), {2, 0, 0, -2}, 1e-9);
  check_close(eigenvalues_sym(adjacency_matrix(make_family({FamilyKind::complete, {4}}))), {3, -1, -1, -1}, 1e-9);
  check_close(eigenvalues_sym(adjacency_matrix(make_family({FamilyKind::hypercube, {3}}))),
              {3, 1, 1, 1, -1, -1, -1, -3}, 1e-9);
}

TEST_CASE("eigenvalues_sym rejects bad input") {
  Matrix asym(2, {0.0, 1.0, 0.5, 0.0});
  CHECK_THROWS_AS(eigenvalues_sym(asym), std::invalid_argument);
  Matrix nan(2, {0.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0});
  CHECK_THROWS_AS(eigenvalues_sym(nan), std::invalid_argument);
  Matrix inf(1, {std::numeric_limits<double>::infinity()});
  CHECK_THROWS_AS(eigenvalues_sym(inf), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues_sym(Matrix(0)), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, {1.0, 2.0, 3.0}), std::invalid_argument);

  Matrix nearly(2, {0.0, 1.0, 1.0 + 5e-13, 0.0});
  CHECK_NOTHROW(eigenvalues_sym(nearly));
}

TEST_CASE("eigenvalues_sym of the zero matrix and of 1x1 matrices") {
  check_close(eigenvalues_sym(Matrix(5)), {0, 0, 0, 0, 0}, 0.0);
  check_close(eigenvalues_sym(Matrix(1, {-3.5})), {-3.5}, 0.0);
}

TEST_CASE("eigenvalues_sym recovers a planted spectrum up to dimension 200") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> value(-1e3, 1e3);
  for (std::size_t n : {2u, 7u, 31u, 120u, 200u}) {
    std::vector<double> planted(n);
    for (double& x : planted) x = value(rng);
    const Matrix q = random_orthogonal(n, rng);
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += q(i, k) * planted[k] * q(j, k);
        a(i, j) = s;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
    check_close(eigenvalues_sym(a), oracle::sorted_desc(planted), 1e-9);
  }
}

TEST_CASE("eigenvalues_sym is deterministic") {
  std::mt19937 rng(5);
  const Graph g = oracle::random_connected(40, 0.2, rng);
  const Matrix a = adjacency_matrix(g);
  CHECK(eigenvalues_sym(a) == eigenvalues_sym(a));
}

TEST_CASE("spectrum examples") {
  const Spectrum petersen = spectrum(make_family({FamilyKind::kneser, {5, 2}}));
  check_close(petersen.values(), oracle::petersen_spectrum(), 1e-9);

  const Spectrum s4 = spectrum(make_family({FamilyKind::star, {4}}));
  check_close(s4.values(), {2, 0, 0, 0, -2}, 1e-9);
  CHECK(s4.lambda_max() == doctest::Approx(2.0));
  CHECK(s4.lambda_min() == doctest::Approx(-2.0));

  const double r5 = std::sqrt(5.0);
  check_close(spectrum(make_family({FamilyKind::path, {4}})).values(),
              {(1 + r5) / 2, (r5 - 1) / 2, (1 - r5) / 2, -(1 + r5) / 2}, 1e-9);
}

TEST_CASE("Spectrum validates its input") {
  CHECK_THROWS_AS(Spectrum({}), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({2.0, 1.0}, 0.0), std::invalid_argument);
  CHECK(Spectrum({2.0, 2.0, -4.0}).size() == 3);
}

TEST_CASE("closed-form spectra") {
  for (std::size_t n = 1; n <= 20; ++n)
    check_close(spectrum(make_family({FamilyKind::complete, {n}})).values(), oracle::complete_spectrum(n), 1e-9);
  for (std::size_t n = 3; n <= 30; ++n)
    check_close(spectrum(make_family({FamilyKind::cycle, {n}})).values(), oracle::cycle_spectrum(n), 1e-9);
  for (std::size_t n = 1; n <= 30; ++n)
    check_close(spectrum(make_family({FamilyKind::path, {n}})).values(), oracle::path_spectrum(n), 1e-9);
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b)
      check_close(spectrum(make_family({FamilyKind::complete_bipartite, {a, b}})).values(),
                  oracle::complete_bipartite_spectrum(a, b), 1e-9);
  for (std::size_t k = 1; k <= 6; ++k)
    check_close(spectrum(make_family({FamilyKind::hypercube, {k}})).values(), oracle::hypercube_spectrum(k), 1e-9);
}

TEST_CASE("cone_spectrum_predicted examples") {
  const Spectrum petersen = spectrum(make_family({FamilyKind::kneser, {5, 2}}));
  check_close(cone_spectrum_predicted(petersen, 3, 10), {5, 1, 1, 1, 1, 1, -2, -2, -2, -2, -2}, 1e-9);

  for (std::size_t n = 3; n <= 9; ++n) {
    const Spectrum base = spectrum(make_family({FamilyKind::complete, {n - 1}}));
    check_close(cone_spectrum_predicted(base, n - 2, n - 1), oracle::complete_spectrum(n), 1e-9);
  }

  const double r5 = std::sqrt(5.0);
  const Spectrum c4 = spectrum(make_family({FamilyKind::cycle, {4}}));
  const auto predicted = cone_spectrum_predicted(c4, 2, 4);
  check_close(predicted, {1 + r5, 0, 0, 1 - r5, -2}, 1e-9);
  check_close(spectrum(make_family({FamilyKind::wheel, {4}})).values(), predicted, 1e-9);
}

TEST_CASE("cone_spectrum_predicted handles the edgeless base") {
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto p = cone_spectrum_predicted(spectrum(make_family({FamilyKind::empty, {k}})), 0, k);
    const Spectrum star = spectrum(make_family({FamilyKind::star, {k}}));
    check_close(p, {star.values().begin(), star.values().end()}, 1e-9);
  }
}

TEST_CASE("cone_spectrum_predicted rejects irregular bases") {
  const Spectrum p4 = spectrum(make_family({FamilyKind::path, {4}}));
  CHECK_THROWS_AS(cone_spectrum_predicted(p4, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(cone_spectrum_predicted(p4, 1, 4), std::invalid_argument);
  const Spectrum c5 = spectrum(make_family({FamilyKind::cycle, {5}}));
  CHECK_THROWS_AS(cone_spectrum_predicted(c5, 2, 6), std::invalid_argument);
}

TEST_CASE("prediction matches direct eigensolve on 200 random circulant bases") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 200) {
    std::uniform_int_distribution<std::size_t> order(3, 64);
    const std::size_t n = order(rng);
    std::uniform_int_distribution<std::size_t> jump(1, n / 2);
    std::vector<std::size_t> jumps{jump(rng), jump(rng)};
    const Graph h = circulant(n, jumps);
    const auto reg = profile(h).regular_degree;
    REQUIRE(reg);
    const auto predicted = cone_spectrum_predicted(spectrum(h), *reg, n);
    check_close(spectrum(cone(h)).values(), predicted, 1e-7);
    ++checked;
  }
}

TEST_CASE("trace and second moment of every spectrum up to 7 vertices") {
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_connected(n, [n](const Graph& g) {
      const Spectrum s = spectrum(g);
      double sum = 0.0, squares = 0.0;
      for (double x : s.values()) {
        sum += x;
        squares += x * x;
      }
      CHECK(std::abs(sum) <= 1e-7);
      CHECK(std::abs(squares - 2.0 * static_cast<double>(g.size())) <= 1e-6);
      const auto p = profile(g);
      CHECK(s.lambda_max() <= static_cast<double>(p.max_degree) + 1e-7);
      CHECK(s.lambda_max() >= 2.0 * static_cast<double>(g.size()) / static_cast<double>(n) - 1e-7);
    });
}

TEST_CASE("connected regular graphs have lambda_min <= -1 with equality only for K_n") {
  std::size_t regular = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for_each_connected(n, [&](const Graph& g) {
      if (!profile(g).regular_degree) return;
      ++regular;
      const double lmin = spectrum(g).lambda_min();
      CHECK(lmin <= -1.0 + 1e-7);
      const bool complete = g.size() == n * (n - 1) / 2;
      CHECK((std::abs(lmin + 1.0) <= 1e-7) == complete);
    });
  // connected regular graphs on 2..8 vertices: 1, 1, 2, 2, 5, 4, 17
  CHECK(regular == 32);
}
