#include "specbound/graph6.hpp"

namespace specbound {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Graph6Error("empty graph6 string");

  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw Graph6Error("character code " + std::to_string(static_cast<unsigned char>(c)) +
                        " outside 63..126");

  const std::size_t n = static_cast<std::size_t>(text[0] - kBias);
  if (n > kGraph6MaxOrder) throw Graph6Error("multi-byte size header (n > 62) is not supported");
  if (n == 0) throw Graph6Error("graph6 string encodes zero vertices");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes)
    throw Graph6Error("truncated graph6 string: expected " + std::to_string(bytes + 1) +
                      " bytes, got " + std::to_string(text.size()));
  if (text.size() - 1 > bytes)
    throw Graph6Error("trailing data after graph6 string: expected " +
                      std::to_string(bytes + 1) + " bytes, got " + std::to_string(text.size()));

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = text[1 + k / 6] - kBias;
      if ((word >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw Graph6Error("nonzero padding bits");
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw std::invalid_argument("graph6 output supports n <= 62, got n=" + std::to_string(n));

  std::string out(1, static_cast<char>(n + kBias));
  int word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.what(), lineno);
    }
  }
  return out;
}

}  // namespace specbound
