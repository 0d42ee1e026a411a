#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qwgsim {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with first <= second. first == second is a self-loop.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : first(u < v ? u : v), second(u < v ? v : u) {}

  bool is_loop() const { return first == second; }
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph with optional self-loops.
///
/// Adjacency lists are kept sorted. A self-loop appears once in the list of
/// its vertex, so it contributes 1 to the degree and the identity
/// sum(degree) == 2|E| - loops holds exactly. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Throws GraphError on an out-of-range endpoint or a duplicate edge.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t loop_count() const { return loops_; }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  std::vector<std::size_t> degrees() const;

  /// Sorted neighbours of v (v itself included when it carries a loop).
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::size_t loops_ = 0;
};

struct SrgParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  bool operator==(const SrgParams&) const = default;
};

/// Parameters of g if it is strongly regular (loop-free, k-regular, constant
/// common-neighbour counts on adjacent and non-adjacent pairs).
/// Complete and edgeless graphs report mu = 0 / lambda = 0 respectively.
std::optional<SrgParams> srg_params(const Graph& g);
bool srg_check(const Graph& g, const SrgParams& params);

/// Maximum finite shortest-path distance. Disconnected graphs report the
/// largest distance inside any component; edgeless graphs report 0.
std::size_t diameter(const Graph& g);

/// Induced subgraph on the vertices in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace qwgsim
