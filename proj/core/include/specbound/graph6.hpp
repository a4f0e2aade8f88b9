#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

/// Raised for malformed graph6 text. `line()` is 0 when the input was a
/// single string rather than a numbered line of a stream.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t line = 0)
      : std::invalid_argument(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Largest order expressible with the one-byte graph6 size header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 line (no terminator). An optional ">>graph6<<" prefix
/// is accepted. Only the one-byte size header is supported; padding bits in
/// the final byte must be zero.
Graph parse_graph6(std::string_view text);

/// Encodes g; throws std::invalid_argument when order() > 62.
std::string to_graph6(const Graph& g);

/// Reads one graph per line, skipping blank lines. Errors carry the line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace specbound
