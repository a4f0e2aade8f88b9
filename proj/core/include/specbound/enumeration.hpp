#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/graph.hpp"

namespace specbound {

inline constexpr std::size_t kMaxEnumerationOrder = 10;

/// Calls `visit` once per isomorphism class of connected graphs on n
/// vertices, in a fixed order. Generation is by canonical augmentation: a
/// graph is grown from its parent by one vertex and kept only when that
/// vertex lies in the orbit of the canonically chosen non-cut vertex.
/// Throws std::invalid_argument unless 1 <= n <= 10.
void for_each_connected(std::size_t n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_connected(std::size_t n);

/// Exact independence number by branch and bound with a greedy clique-cover
/// bound. Throws std::invalid_argument for n > 64.
std::size_t independence_number(const Graph& g);

struct SurveyRow {
  std::size_t order = 0;
  std::size_t irregular_connected_count = 0;
  std::size_t new_wins = 0;
  std::size_t haemers_wins = 0;
  std::size_t ties = 0;

  double proportion() const noexcept {
    return irregular_connected_count == 0
               ? 0.0
               : static_cast<double>(new_wins) / static_cast<double>(irregular_connected_count);
  }
  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

struct SurveyOptions {
  double tol = kDefaultTolerances.compare;
  std::size_t threads = 1;
};

/// Tallies compare_bounds (exact alpha) over every irregular connected graph
/// on n vertices. Throws std::invalid_argument unless 4 <= n <= 8.
SurveyRow survey(std::size_t n, const SurveyOptions& options = {});

/// Same tally over a caller-supplied universe. Graphs whose order differs
/// from n, disconnected graphs and regular graphs are skipped.
SurveyRow survey_graphs(std::size_t n, std::span<const Graph> universe,
                        const SurveyOptions& options = {});

}  // namespace specbound
