#pragma once

#include <Eigen/Dense>

#include "qwgsim/graph.hpp"

namespace qwgsim {

/// DeltaCon node affinities S = (I + eps^2 D - eps A)^-1 with
/// eps = 1/(1 + max degree).
struct AffinityMatrix {
  Eigen::MatrixXd s;
  double epsilon = 1.0;
};

AffinityMatrix deltacon_affinity(const Graph& g);

/// Max-norm of (I + eps^2 D - eps A) S - I.
double affinity_residual(const Graph& g, const AffinityMatrix& affinity);

struct DeltaConResult {
  double distance = 0.0;
  double similarity = 1.0;
  std::size_t clamped_entries = 0;  // negative affinities clamped to 0
};

/// Matusita distance between the affinity matrices of two identically
/// labelled graphs, and sim = 1/(1+d). Throws GraphError on size mismatch.
DeltaConResult deltacon(const Graph& g1, const Graph& g2);
double deltacon_similarity(const Graph& g1, const Graph& g2);

inline constexpr std::size_t kMcsMaxVertices = 10;

/// Vertex count of a maximum common node-induced subgraph.
/// Exhaustive; throws std::invalid_argument above kMcsMaxVertices.
std::size_t mcs_size(const Graph& g1, const Graph& g2);

/// 1 - |mcs| / max(n1, n2).
double mcs_distance(const Graph& g1, const Graph& g2);

}  // namespace qwgsim
