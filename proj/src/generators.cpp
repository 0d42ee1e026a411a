#include "qwgsim/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

namespace qwgsim {

namespace {

// Floyd's algorithm: `count` distinct values from [0, population), sorted.
std::vector<std::uint64_t> sample_indices(std::uint64_t population, std::uint64_t count,
                                          Rng& rng) {
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = population - count; j < population; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

// Lexicographic index of the pair (u, v), u < v, back to the pair.
Edge pair_from_index(std::uint64_t index, std::size_t n) {
  Vertex u = 0;
  std::uint64_t row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return Edge(u, static_cast<Vertex>(u + 1 + index));
}

std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

}  // namespace

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw GraphError("edge probability must lie in [0,1], got " + std::to_string(p));
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph gen_scale_free(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1) throw GraphError("scale-free attachment count m must be >= 1");
  if (n < m) {
    throw GraphError("scale-free graph needs n >= m (n=" + std::to_string(n) +
                     ", m=" + std::to_string(m) + ")");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  std::vector<Vertex> targets;
  std::vector<bool> taken(n, false);
  for (Vertex fresh = static_cast<Vertex>(m); fresh < n; ++fresh) {
    targets.clear();
    for (std::size_t pick = 0; pick < m; ++pick) {
      std::size_t total = 0;
      std::size_t open = 0;
      for (Vertex v = 0; v < fresh; ++v) {
        if (!taken[v]) {
          total += degree[v];
          ++open;
        }
      }
      Vertex chosen = 0;
      if (total == 0) {
        // Only reachable from a K_1 seed: no degree mass yet, pick uniformly.
        std::uint64_t r = rng.below(open);
        for (Vertex v = 0; v < fresh; ++v) {
          if (taken[v]) continue;
          if (r-- == 0) {
            chosen = v;
            break;
          }
        }
      } else {
        std::uint64_t r = rng.below(total);
        for (Vertex v = 0; v < fresh; ++v) {
          if (taken[v]) continue;
          if (r < degree[v]) {
            chosen = v;
            break;
          }
          r -= degree[v];
        }
      }
      taken[chosen] = true;
      targets.push_back(chosen);
    }
    for (Vertex t : targets) {
      taken[t] = false;
      edges.emplace_back(t, fresh);
      ++degree[t];
      ++degree[fresh];
    }
  }
  return Graph(n, edges);
}

Graph gen_uniform(std::size_t n, std::size_t e, std::uint64_t seed) {
  const std::uint64_t pairs = pair_count(n);
  if (e > pairs) {
    throw GraphError("cannot place " + std::to_string(e) + " edges on " +
                     std::to_string(n) + " vertices (max " + std::to_string(pairs) + ")");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(e);
  for (std::uint64_t index : sample_indices(pairs, e, rng)) {
    edges.push_back(pair_from_index(index, n));
  }
  return Graph(n, edges);
}

Graph remove_random_edges(const Graph& g, std::size_t count, std::uint64_t seed) {
  if (count > g.edge_count()) {
    throw GraphError("cannot remove " + std::to_string(count) + " edges from a graph with " +
                     std::to_string(g.edge_count()));
  }
  Rng rng(seed);
  const auto doomed = sample_indices(g.edge_count(), count, rng);
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - count);
  std::size_t next = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (next < doomed.size() && doomed[next] == i) {
      ++next;
      continue;
    }
    kept.push_back(g.edges()[i]);
  }
  return Graph(g.vertex_count(), kept);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

namespace {

Graph complete_bipartite_33() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 3; v < 6; ++v) edges.emplace_back(u, v);
  }
  return Graph(6, edges);
}

// K_{2,2,2}: K6 minus the perfect matching {0,1},{2,3},{4,5}.
Graph octahedron() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  return Graph(6, edges);
}

// K4 x K4: cells of a 4x4 board, adjacent when sharing a row or column.
Graph rook_4x4() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = u + 1; v < 16; ++v) {
      if (u / 4 == v / 4 || u % 4 == v % 4) edges.emplace_back(u, v);
    }
  }
  return Graph(16, edges);
}

// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph shrikhande() {
  std::vector<Edge> edges;
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto u = static_cast<Vertex>(4 * a + b);
      for (const auto& s : steps) {
        const auto v = static_cast<Vertex>(4 * ((a + s[0]) % 4) + (b + s[1]) % 4);
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(16, edges);
}

std::optional<std::size_t> sized_name(std::string_view name, std::string_view prefix) {
  if (name.size() < prefix.size() + 3 || name.substr(0, prefix.size()) != prefix ||
      name[prefix.size()] != '(' || name.back() != ')') {
    return std::nullopt;
  }
  const auto digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw GraphError("bad size in builtin graph name '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

Graph builtin_graph(std::string_view name) {
  if (name == "k33") return complete_bipartite_33();
  if (name == "octahedron") return octahedron();
  if (name == "rook4x4") return rook_4x4();
  if (name == "shrikhande") return shrikhande();
  if (auto n = sized_name(name, "complete")) return complete_graph(*n);
  if (auto n = sized_name(name, "empty")) return empty_graph(*n);
  if (auto n = sized_name(name, "path")) return path_graph(*n);
  if (auto n = sized_name(name, "cycle")) return cycle_graph(*n);
  throw GraphError("unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace qwgsim
