#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

enum class FamilyKind {
  complete,           // complete(n)
  empty,              // empty(n)
  path,               // path(n)
  cycle,              // cycle(n), n >= 3
  star,               // star(k): k leaves 0..k-1, hub k
  wheel,              // wheel(k): rim cycle 0..k-1, hub k, k >= 3
  complete_bipartite, // complete_bipartite(a, b): parts 0..a-1 and a..a+b-1
  hypercube,          // hypercube(k): vertex x ~ y iff popcount(x ^ y) == 1
  kneser,             // kneser(m, t): t-subsets of {1..m} in lexicographic order
};

struct FamilySpec {
  FamilyKind kind;
  std::vector<std::size_t> params;
};

/// Builds the named graph. Throws std::invalid_argument for a wrong number
/// of parameters or out-of-range values.
Graph make_family(const FamilySpec& spec);

/// Number of vertices make_family(spec) would produce, without building it.
std::size_t family_order(const FamilySpec& spec);

std::string family_name(FamilyKind kind);

/// Odd graph O(k) = kneser(2k-1, k-1), k >= 2.
FamilySpec odd_graph(std::size_t k);

/// Circulant graph on n vertices: i ~ i +- j (mod n) for every jump j.
Graph circulant(std::size_t n, std::span<const std::size_t> jumps);

}  // namespace specbound
