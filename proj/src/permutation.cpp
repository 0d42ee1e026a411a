#include "qwgsim/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace qwgsim {

Permutation::Permutation(std::vector<Vertex> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (Vertex v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw GraphError("permutation is not a bijection on [0," +
                       std::to_string(mapping_.size()) + ")");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  return Permutation(std::move(m));
}

Permutation Permutation::random(std::size_t n, Rng& rng) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  // Fisher-Yates driven by Rng::below so the result does not depend on the
  // standard library's shuffle implementation.
  for (std::size_t i = n; i > 1; --i) {
    std::swap(m[i - 1], m[rng.below(i)]);
  }
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(mapping_.size());
  for (std::size_t v = 0; v < mapping_.size(); ++v) inv[mapping_[v]] = static_cast<Vertex>(v);
  return Permutation(std::move(inv));
}

Graph permute(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) {
    throw GraphError("permutation length " + std::to_string(p.size()) +
                     " does not match vertex count " + std::to_string(g.vertex_count()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(p(e.first), p(e.second));
  return Graph(g.vertex_count(), edges);
}

}  // namespace qwgsim
