#include "specbound/families.hpp"

#include <bit>
#include <stdexcept>

namespace specbound {
namespace {

// Above this the dense representation stops being sensible.
constexpr std::size_t kMaxFamilyOrder = std::size_t{1} << 16;

std::size_t binomial(std::size_t m, std::size_t t) {
  if (t > m) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= t; ++i) {
    r = r * (m - t + i) / i;
    if (r > kMaxFamilyOrder) return kMaxFamilyOrder + 1;
  }
  return r;
}

void require(bool ok, const FamilySpec& spec, const char* what) {
  if (!ok) throw std::invalid_argument(family_name(spec.kind) + ": " + what);
}

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw std::invalid_argument(family_name(spec.kind) + " expects " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(spec.params.size()));
}

// t-subsets of {0..m-1} as bit masks, in lexicographic order of their sorted
// element lists.
void subsets(std::size_t m, std::size_t t, std::size_t start, std::uint64_t cur,
             std::size_t left, std::vector<std::uint64_t>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + left <= m; ++i)
    subsets(m, t, i + 1, cur | (std::uint64_t{1} << i), left - 1, out);
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::empty: return "empty";
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::star: return "star";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::complete_bipartite: return "completeBipartite";
    case FamilyKind::hypercube: return "hypercube";
    case FamilyKind::kneser: return "kneser";
  }
  return "unknown";
}

std::size_t family_order(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::complete:
    case FamilyKind::empty:
    case FamilyKind::path:
      expect_params(spec, 1);
      require(p[0] >= 1, spec, "n must be >= 1");
      return p[0];
    case FamilyKind::cycle:
      expect_params(spec, 1);
      require(p[0] >= 3, spec, "n must be >= 3");
      return p[0];
    case FamilyKind::star:
      expect_params(spec, 1);
      require(p[0] >= 1, spec, "k must be >= 1");
      return p[0] + 1;
    case FamilyKind::wheel:
      expect_params(spec, 1);
      require(p[0] >= 3, spec, "k must be >= 3");
      return p[0] + 1;
    case FamilyKind::complete_bipartite:
      expect_params(spec, 2);
      require(p[0] >= 1 && p[1] >= 1, spec, "part sizes must be >= 1");
      return p[0] + p[1];
    case FamilyKind::hypercube:
      expect_params(spec, 1);
      require(p[0] >= 1 && p[0] <= 16, spec, "k must be in 1..16");
      return std::size_t{1} << p[0];
    case FamilyKind::kneser:
      expect_params(spec, 2);
      require(p[1] >= 1, spec, "t must be >= 1");
      require(p[0] >= 2 * p[1], spec, "m must be >= 2t");
      require(p[0] <= 64, spec, "m must be <= 64");
      require(binomial(p[0], p[1]) <= kMaxFamilyOrder, spec, "too many vertices");
      return binomial(p[0], p[1]);
  }
  throw std::invalid_argument("unknown family kind");
}

Graph make_family(const FamilySpec& spec) {
  const std::size_t n = family_order(spec);
  if (n > kMaxFamilyOrder) throw std::invalid_argument(family_name(spec.kind) + ": too many vertices");
  const auto& p = spec.params;
  GraphBuilder b(n);
  switch (spec.kind) {
    case FamilyKind::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
      break;
    case FamilyKind::empty:
      break;
    case FamilyKind::path:
      for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
      break;
    case FamilyKind::cycle:
      for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
      break;
    case FamilyKind::star:
      for (Vertex v = 0; v < p[0]; ++v) b.add_edge(v, p[0]);
      break;
    case FamilyKind::wheel:
      for (Vertex v = 0; v < p[0]; ++v) {
        b.add_edge(v, (v + 1) % p[0]);
        b.add_edge(v, p[0]);
      }
      break;
    case FamilyKind::complete_bipartite:
      for (Vertex u = 0; u < p[0]; ++u)
        for (Vertex v = p[0]; v < n; ++v) b.add_edge(u, v);
      break;
    case FamilyKind::hypercube:
      for (Vertex u = 0; u < n; ++u)
        for (std::size_t bit = 0; bit < p[0]; ++bit) {
          const Vertex v = u ^ (std::size_t{1} << bit);
          if (u < v) b.add_edge(u, v);
        }
      break;
    case FamilyKind::kneser: {
      std::vector<std::uint64_t> sets;
      sets.reserve(n);
      subsets(p[0], p[1], 0, 0, p[1], sets);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if ((sets[u] & sets[v]) == 0) b.add_edge(u, v);
      break;
    }
  }
  return std::move(b).build();
}

FamilySpec odd_graph(std::size_t k) {
  if (k < 2) throw std::invalid_argument("odd graph: k must be >= 2");
  return {FamilyKind::kneser, {2 * k - 1, k - 1}};
}

Graph circulant(std::size_t n, std::span<const std::size_t> jumps) {
  GraphBuilder b(n);
  for (std::size_t j : jumps) {
    if (j == 0 || j % n == 0) throw std::invalid_argument("circulant: jump must be nonzero mod n");
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + j) % n);
  }
  return std::move(b).build();
}

}  // namespace specbound
