#include "qwgsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qwgsim/generators.hpp"

namespace qwgsim {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_index(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || value > 0xffffffffULL) {
    throw ParseError(line, "malformed token '" + std::string(token) + "'");
  }
  return value;
}

constexpr int kG6Offset = 63;

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::optional<std::size_t> declared_n;
  std::size_t max_index_plus_one = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two fields, got " + std::to_string(tokens.size()));
    }
    if (tokens[0] == "n") {
      if (declared_n || !edges.empty()) {
        throw ParseError(line_no, "vertex-count header must come first and only once");
      }
      declared_n = parse_index(tokens[1], line_no);
      continue;
    }
    const auto u = parse_index(tokens[0], line_no);
    const auto v = parse_index(tokens[1], line_no);
    if (declared_n && (u >= *declared_n || v >= *declared_n)) {
      throw ParseError(line_no, "vertex index " + std::to_string(std::max(u, v)) +
                                    " out of range for n=" + std::to_string(*declared_n));
    }
    max_index_plus_one = std::max<std::size_t>(max_index_plus_one, std::max(u, v) + 1);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    edge_lines.push_back(line_no);
  }

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  std::optional<std::size_t> duplicate_line;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const std::size_t later = std::max(edge_lines[order[i]], edge_lines[order[i - 1]]);
      duplicate_line = std::min(duplicate_line.value_or(later), later);
    }
  }
  if (duplicate_line) throw ParseError(*duplicate_line, "duplicate edge");

  return Graph(declared_n.value_or(max_index_plus_one), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError(0, "graph6: truncated input");
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kG6Offset || c > 126) {
      throw ParseError(0, "graph6: invalid byte " + std::to_string(c) + " at offset " +
                              std::to_string(pos));
    }
    ++pos;
    return c - kG6Offset;
  };

  std::uint64_t n = next();
  if (n == 63) {
    int width = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      width = 6;
    }
    n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
  }

  std::vector<Edge> edges;
  int bits_left = 0;
  int current = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        current = next();
        bits_left = 6;
      }
      --bits_left;
      if ((current >> bits_left) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != text.size()) {
    throw ParseError(0, "graph6: " + std::to_string(text.size() - pos) +
                            " unexpected trailing byte(s)");
  }
  return Graph(n, edges);
}

std::string graph6_encode(const Graph& g) {
  if (g.loop_count() != 0) throw GraphError("graph6 cannot represent self-loops");
  const std::uint64_t n = g.vertex_count();
  std::string out;
  auto put = [&out](std::uint64_t six) { out.push_back(static_cast<char>(six + kG6Offset)); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63);
  }
  int filled = 0;
  std::uint64_t current = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        put(current);
        filled = 0;
        current = 0;
      }
    }
  }
  if (filled > 0) put(current << (6 - filled));
  return out;
}

Graph load_graph(std::string_view source) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (source.substr(0, kBuiltin.size()) == kBuiltin) {
    return builtin_graph(source.substr(kBuiltin.size()));
  }
  const std::filesystem::path path{std::string(source)};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path.string() + "'");
  if (path.extension() == ".g6") {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
        return graph6_decode(line);
      }
    }
    throw ParseError(0, "graph6: empty file '" + path.string() + "'");
  }
  return parse_edge_list(in);
}

void save_graph(const Graph& g, const std::filesystem::path& path, std::string_view format) {
  std::string body;
  if (format == "el") {
    body = format_edge_list(g);
  } else if (format == "g6") {
    body = graph6_encode(g) + "\n";
  } else {
    throw std::invalid_argument("unknown graph format '" + std::string(format) + "'");
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << body;
}

}  // namespace qwgsim
