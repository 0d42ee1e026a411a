#pragma once

#include <vector>

#include "qwgsim/graph.hpp"
#include "qwgsim/random.hpp"

namespace qwgsim {

/// Bijection on [0, n). mapping()[v] is the image of v.
class Permutation {
 public:
  Permutation() = default;
  /// Throws GraphError unless `mapping` is a bijection on [0, size).
  explicit Permutation(std::vector<Vertex> mapping);

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, Rng& rng);

  std::size_t size() const { return mapping_.size(); }
  Vertex operator()(Vertex v) const { return mapping_[v]; }
  const std::vector<Vertex>& mapping() const { return mapping_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Vertex> mapping_;
};

/// Relabels g so that {u,v} in g iff {p(u),p(v)} in the result.
Graph permute(const Graph& g, const Permutation& p);

}  // namespace qwgsim
