#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwgsim/graph.hpp"

namespace qwgsim {

/// Malformed graph text. line() is 1-based, 0 when the format has no lines.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text: "u v" per line, 0-based, '#' starts a comment, optional
/// "n <count>" header line. Without a header n = max index + 1.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
/// Header line followed by one edge per line in lexicographic order.
std::string format_edge_list(const Graph& g);

/// graph6 (optionally prefixed with ">>graph6<<"). Trailing whitespace is
/// ignored; anything else after the bit stream is an error.
Graph graph6_decode(std::string_view text);
/// Throws GraphError if g has a self-loop.
std::string graph6_encode(const Graph& g);

/// "builtin:NAME", or a path read as graph6 when it ends in .g6 and as an
/// edge list otherwise.
Graph load_graph(std::string_view source);
void save_graph(const Graph& g, const std::filesystem::path& path, std::string_view format);

}  // namespace qwgsim
