#include "edge_list.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace specbound::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t number(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("edge list: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view line) {
  const std::size_t colon = line.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("edge list: expected 'n: u-v,...'");
  const std::size_t n = number(line.substr(0, colon), "vertex count");
  std::vector<Edge> edges;
  std::string_view rest = trim(line.substr(colon + 1));
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos)
      throw std::invalid_argument("edge list: bad edge '" + std::string(item) + "'");
    edges.emplace_back(number(item.substr(0, dash), "endpoint"), number(item.substr(dash + 1), "endpoint"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) throw std::invalid_argument("edge list: trailing comma");
  }
  return graph_from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out += first ? " " : ",";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace specbound::cli
