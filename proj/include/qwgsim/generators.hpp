#pragma once

#include <cstdint>
#include <string_view>

#include "qwgsim/graph.hpp"
#include "qwgsim/random.hpp"

namespace qwgsim {

/// Erdos-Renyi G(n, p): each pair u < v independently with probability p.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment. Starts from K_m; every later vertex attaches to m
/// distinct existing vertices drawn without replacement with probability
/// proportional to their current degree. Edge count is C(m,2) + m(n-m).
Graph gen_scale_free(std::size_t n, std::size_t m, std::uint64_t seed);

/// R(n, e): e distinct pairs drawn uniformly from all C(n,2).
Graph gen_uniform(std::size_t n, std::size_t e, std::uint64_t seed);

/// Removes `count` distinct edges chosen uniformly. Vertex set unchanged.
Graph remove_random_edges(const Graph& g, std::size_t count, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// Named graphs: k33, octahedron, rook4x4, shrikhande, complete(n),
/// empty(n), path(n), cycle(n). Throws GraphError on an unknown name.
Graph builtin_graph(std::string_view name);

}  // namespace qwgsim
