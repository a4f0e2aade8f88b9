#include "specbound/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace specbound {
namespace {

using Cells = std::vector<std::vector<Vertex>>;

std::size_t count_into(const Graph& g, Vertex v, const std::vector<Vertex>& cell) {
  std::size_t c = 0;
  for (Vertex w : cell) c += g.adjacent(v, w) ? 1 : 0;
  return c;
}

// Splits every cell by neighbour count into `splitter`, sub-cells in
// ascending count order. Returns true if anything split.
bool split_by(const Graph& g, Cells& cells, const std::vector<Vertex>& splitter) {
  Cells next;
  next.reserve(cells.size());
  bool changed = false;
  for (auto& cell : cells) {
    if (cell.size() == 1) {
      next.push_back(std::move(cell));
      continue;
    }
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (Vertex v : cell) groups[count_into(g, v, splitter)].push_back(v);
    if (groups.size() > 1) changed = true;
    for (auto& [count, members] : groups) next.push_back(std::move(members));
  }
  cells = std::move(next);
  return changed;
}

// Coarsest equitable refinement. Splitters are tried in cell order and the
// scan restarts after every split, so the result depends on structure only.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const std::vector<Vertex> splitter = cells[s];
      if (split_by(g, cells, splitter)) {
        changed = true;
        break;
      }
    }
  }
}

std::vector<std::uint64_t> key_of(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<std::uint64_t> key((bits + 63) / 64 + (bits == 0 ? 1 : 0), 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if (g.adjacent(order[i], order[j])) key[k / 64] |= std::uint64_t{1} << (63 - k % 64);
  return key;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run(Cells cells) {
    refine(g_, cells);
    std::vector<Vertex> prefix;
    descend(cells, prefix);
    return {best_order_, best_key_};
  }

 private:
  Vertex find(std::vector<Vertex>& parent, Vertex x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the discovered automorphisms that fix `prefix` pointwise.
  std::vector<Vertex> orbit_roots(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex x = 0; x < n_; ++x) {
        Vertex a = find(parent, x), b = find(parent, gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex x = 0; x < n_; ++x) parent[x] = find(parent, x);
    return parent;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (const auto& c : cells) order.push_back(c.front());
    auto key = key_of(g_, order);
    if (!have_best_ || key > best_key_) {
      best_key_ = std::move(key);
      best_order_ = std::move(order);
      have_best_ = true;
    } else if (key == best_key_) {
      std::vector<Vertex> gamma(n_);
      for (std::size_t i = 0; i < n_; ++i) gamma[best_order_[i]] = order[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  void descend(const Cells& cells, std::vector<Vertex>& prefix) {
    if (cells.size() == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
        target = i;

    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      if (!tried.empty()) {
        const auto roots = orbit_roots(prefix);
        const bool equivalent = std::any_of(tried.begin(), tried.end(),
                                            [&](Vertex w) { return roots[w] == roots[v]; });
        if (equivalent) continue;
      }
      tried.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      prefix.push_back(v);
      descend(child, prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  std::size_t n_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_key_;
  std::vector<Vertex> best_order_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  const std::size_t n = g.order();
  if (!colors.empty() && colors.size() != n)
    throw std::invalid_argument("canonical_labeling: colour list length must equal graph order");
  Cells cells;
  if (colors.empty()) {
    cells.emplace_back(n);
    std::iota(cells.back().begin(), cells.back().end(), Vertex{0});
  } else {
    std::map<int, std::vector<Vertex>> by_color;
    for (Vertex v = 0; v < n; ++v) by_color[colors[v]].push_back(v);
    for (auto& [c, members] : by_color) cells.push_back(std::move(members));
  }
  return Search(g).run(std::move(cells));
}

Graph canonical_form(const Graph& g) {
  const auto lab = canonical_labeling(g);
  GraphBuilder b(g.order());
  for (std::size_t i = 0; i < lab.order.size(); ++i)
    for (std::size_t j = i + 1; j < lab.order.size(); ++j)
      if (g.adjacent(lab.order[i], lab.order[j])) b.add_edge(i, j);
  return std::move(b).build();
}

}  // namespace specbound
