#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

/// Canonical labelling of a (vertex-coloured) graph.
///
/// `order[i]` is the vertex placed at canonical position i. `key` packs the
/// upper triangle of the relabelled adjacency matrix, column by column,
/// most significant bit first; two coloured graphs with the same colour class
/// sizes are isomorphic iff their keys are equal.
struct CanonicalLabeling {
  std::vector<Vertex> order;
  std::vector<std::uint64_t> key;
};

/// Partition refinement plus exhaustive individualisation, keeping the
/// lexicographically largest leaf. Automorphisms discovered along the way
/// prune equivalent branches. `colors` (empty, or one entry per vertex)
/// restricts the labelling to colour-preserving maps, colour classes in
/// ascending colour order.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// g relabelled by its canonical labelling.
Graph canonical_form(const Graph& g);

}  // namespace specbound
