#include "specbound/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "specbound/canonical.hpp"

namespace specbound {
namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

bool connected_within(const Graph& g, Mask alive) {
  if (alive == 0) return true;
  Mask reached = alive & (~alive + 1);
  Mask frontier = reached;
  while (frontier != 0) {
    const Vertex v = static_cast<Vertex>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    const Mask fresh = g.row_mask(v) & alive & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == alive;
}

// Vertices whose removal leaves g connected (g itself connected, n >= 2).
Mask non_cut_vertices(const Graph& g) {
  const Mask all = g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1;
  Mask out = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (connected_within(g, all & ~bit(v))) out |= bit(v);
  return out;
}

Graph add_vertex(const Graph& parent, Mask neighbourhood) {
  const std::size_t k = parent.order();
  GraphBuilder b(k + 1);
  for (const auto& [u, v] : parent.edges()) b.add_edge(u, v);
  for (Vertex v = 0; v < k; ++v)
    if (neighbourhood & bit(v)) b.add_edge(v, k);
  return std::move(b).build();
}

std::vector<std::uint64_t> singled_out_key(const Graph& g, Vertex v) {
  std::vector<int> colors(g.order(), 0);
  colors[v] = 1;
  return canonical_labeling(g, colors).key;
}

// Canonical deletion: among non-cut vertices of minimum degree, the one
// placed last by the canonical labelling. The child is kept iff the new
// vertex lies in that vertex's automorphism orbit.
bool accept_child(const Graph& child, Vertex added, const CanonicalLabeling& lab) {
  const Mask free = non_cut_vertices(child);
  std::size_t min_deg = child.order();
  for (Vertex v = 0; v < child.order(); ++v)
    if (free & bit(v)) min_deg = std::min(min_deg, child.degree(v));
  if (child.degree(added) != min_deg) return false;

  Vertex chosen = added;
  for (std::size_t pos = lab.order.size(); pos-- > 0;) {
    const Vertex v = lab.order[pos];
    if ((free & bit(v)) && child.degree(v) == min_deg) {
      chosen = v;
      break;
    }
  }
  return chosen == added || singled_out_key(child, chosen) == singled_out_key(child, added);
}

void extend(const Graph& g, std::size_t target, const std::function<void(const Graph&)>& visit) {
  if (g.order() == target) {
    visit(g);
    return;
  }
  const std::size_t k = g.order();
  std::set<std::vector<std::uint64_t>> seen;
  for (Mask nb = 1; nb < bit(k); ++nb) {
    Graph child = add_vertex(g, nb);
    const auto lab = canonical_labeling(child);
    if (!accept_child(child, k, lab)) continue;
    if (!seen.insert(lab.key).second) continue;
    extend(child, target, visit);
  }
}

std::size_t clique_cover_size(const Graph& g, Mask remaining) {
  std::size_t cliques = 0;
  while (remaining != 0) {
    const Vertex u = static_cast<Vertex>(std::countr_zero(remaining));
    Mask clique = bit(u);
    Mask candidates = remaining & g.row_mask(u);
    while (candidates != 0) {
      const Vertex w = static_cast<Vertex>(std::countr_zero(candidates));
      clique |= bit(w);
      candidates &= g.row_mask(w);
    }
    remaining &= ~clique;
    ++cliques;
  }
  return cliques;
}

void independent_search(const Graph& g, Mask candidates, std::size_t size, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + clique_cover_size(g, candidates) <= best) return;

  Vertex pivot = 0;
  int pivot_degree = -1;
  for (Mask c = candidates; c != 0; c &= c - 1) {
    const Vertex v = static_cast<Vertex>(std::countr_zero(c));
    const int d = std::popcount(g.row_mask(v) & candidates);
    if (d > pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  if (pivot_degree == 0) {
    best = std::max(best, size + static_cast<std::size_t>(std::popcount(candidates)));
    return;
  }
  independent_search(g, candidates & ~g.row_mask(pivot) & ~bit(pivot), size + 1, best);
  independent_search(g, candidates & ~bit(pivot), size, best);
}

enum class Outcome { skipped, new_bound, haemers, tie };

Outcome classify(const Graph& g, std::size_t n, double tol) {
  if (g.order() != n || !is_connected(g)) return Outcome::skipped;
  const auto p = profile(g);
  if (p.regular_degree) return Outcome::skipped;
  switch (compare_bounds(g, independence_number(g), tol).winner) {
    case Winner::new_bound: return Outcome::new_bound;
    case Winner::haemers: return Outcome::haemers;
    case Winner::tie: return Outcome::tie;
  }
  return Outcome::skipped;
}

SurveyRow tally(std::size_t n, std::span<const Graph> graphs, const SurveyOptions& options) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, graphs.size()));
  std::vector<SurveyRow> partial(workers);
  auto work = [&](std::size_t w) {
    SurveyRow& row = partial[w];
    for (std::size_t i = w; i < graphs.size(); i += workers) {
      switch (classify(graphs[i], n, options.tol)) {
        case Outcome::skipped: continue;
        case Outcome::new_bound: ++row.new_wins; break;
        case Outcome::haemers: ++row.haemers_wins; break;
        case Outcome::tie: ++row.ties; break;
      }
      ++row.irregular_connected_count;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  SurveyRow total;
  total.order = n;
  for (const auto& r : partial) {
    total.irregular_connected_count += r.irregular_connected_count;
    total.new_wins += r.new_wins;
    total.haemers_wins += r.haemers_wins;
    total.ties += r.ties;
  }
  return total;
}

}  // namespace

void for_each_connected(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumerate_connected: n must be in 1.." +
                                std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  extend(GraphBuilder(1).build(), n, visit);
}

std::vector<Graph> enumerate_connected(std::size_t n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::size_t independence_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 64) throw std::invalid_argument("independence_number: n must be <= 64");
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  std::size_t best = 0;
  independent_search(g, all, 0, best);
  return best;
}

SurveyRow survey(std::size_t n, const SurveyOptions& options) {
  if (n < 4 || n > 8)
    throw std::invalid_argument("survey: n must be in 4..8, got " + std::to_string(n));
  const auto graphs = enumerate_connected(n);
  return tally(n, graphs, options);
}

SurveyRow survey_graphs(std::size_t n, std::span<const Graph> universe, const SurveyOptions& options) {
  if (n < 2 || n > 64)
    throw std::invalid_argument("survey: n must be in 2..64, got " + std::to_string(n));
  return tally(n, universe, options);
}

}  // namespace specbound
