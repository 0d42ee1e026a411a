#include "qwgsim/graph.hpp"

#include <algorithm>
#include <queue>

namespace qwgsim {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.assign(edges.begin(), edges.end());
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.second >= n) {
      throw GraphError("edge {" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "} out of range for n=" +
                       std::to_string(n));
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw GraphError("duplicate edge {" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "}");
    }
    if (e.is_loop()) {
      adjacency_[e.first].push_back(e.first);
      ++loops_;
    } else {
      adjacency_[e.first].push_back(e.second);
      adjacency_[e.second].push_back(e.first);
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = adjacency_[v].size();
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

namespace {

std::size_t common_neighbours(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbours(u);
  auto b = g.neighbours(v);
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

std::optional<SrgParams> srg_params(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.loop_count() != 0) return std::nullopt;
  SrgParams p{n, g.degree(0), 0, 0};
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != p.k) return std::nullopt;
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = common_neighbours(g, u, v);
      auto& slot = g.has_edge(u, v) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        return std::nullopt;
      }
    }
  }
  p.lambda = lambda.value_or(0);
  p.mu = mu.value_or(0);
  return p;
}

bool srg_check(const Graph& g, const SrgParams& params) {
  auto actual = srg_params(g);
  return actual && *actual == params;
}

std::size_t diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n);
  std::queue<Vertex> frontier;
  std::size_t best = 0;
  for (Vertex source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      best = std::max(best, dist[u]);
      for (Vertex v : g.neighbours(u)) {
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          frontier.push(v);
        }
      }
    }
  }
  return best;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a; b < vertices.size(); ++b) {
      if (g.has_edge(vertices[a], vertices[b])) {
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
  }
  return Graph(vertices.size(), edges);
}

}  // namespace qwgsim
