#include "qwgsim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace qwgsim {

namespace {

Eigen::MatrixXd system_matrix(const Graph& g, double eps) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    m(v, v) += eps * eps * static_cast<double>(g.degree(v));
  }
  for (const Edge& e : g.edges()) {
    m(e.first, e.second) -= eps;
    if (!e.is_loop()) m(e.second, e.first) -= eps;
  }
  return m;
}

}  // namespace

AffinityMatrix deltacon_affinity(const Graph& g) {
  AffinityMatrix out;
  out.epsilon = 1.0 / (1.0 + static_cast<double>(g.max_degree()));
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const Eigen::MatrixXd m = system_matrix(g, out.epsilon);
  out.s = m.partialPivLu().solve(Eigen::MatrixXd::Identity(n, n));
  return out;
}

double affinity_residual(const Graph& g, const AffinityMatrix& affinity) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (n == 0) return 0.0;
  const Eigen::MatrixXd r =
      system_matrix(g, affinity.epsilon) * affinity.s - Eigen::MatrixXd::Identity(n, n);
  return r.cwiseAbs().maxCoeff();
}

DeltaConResult deltacon(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw GraphError("DeltaCon needs equal vertex counts (" + std::to_string(g1.vertex_count()) +
                     " vs " + std::to_string(g2.vertex_count()) + ")");
  }
  const AffinityMatrix s1 = deltacon_affinity(g1);
  const AffinityMatrix s2 = deltacon_affinity(g2);
  DeltaConResult result;
  auto root = [&result](double x) {
    if (x < 0.0) {
      ++result.clamped_entries;
      return 0.0;
    }
    return std::sqrt(x);
  };
  double total = 0.0;
  for (Eigen::Index j = 0; j < s1.s.cols(); ++j) {
    for (Eigen::Index i = 0; i < s1.s.rows(); ++i) {
      const double d = root(s1.s(i, j)) - root(s2.s(i, j));
      total += d * d;
    }
  }
  if (result.clamped_entries > 0) {
    std::clog << "warning: DeltaCon clamped " << result.clamped_entries
              << " negative affinity entries to 0\n";
  }
  result.distance = std::sqrt(total);
  result.similarity = 1.0 / (1.0 + result.distance);
  return result;
}

double deltacon_similarity(const Graph& g1, const Graph& g2) {
  return deltacon(g1, g2).similarity;
}

namespace {

// Branch and bound over partial injections g1 -> g2. Every vertex of g1 is
// either mapped to an unused vertex of g2 that agrees on adjacency with all
// earlier mapped vertices, or left out.
class McsSearch {
 public:
  McsSearch(const Graph& g1, const Graph& g2)
      : g1_(g1), g2_(g2), image_(g1.vertex_count()), used_(g2.vertex_count(), false) {}

  std::size_t run() {
    extend(0, 0);
    return best_;
  }

 private:
  void extend(Vertex next, std::size_t mapped) {
    best_ = std::max(best_, mapped);
    const std::size_t n1 = g1_.vertex_count();
    if (next == n1) return;
    const std::size_t limit = std::min(n1 - next, g2_.vertex_count() - mapped);
    if (mapped + limit <= best_) return;

    for (Vertex v = 0; v < g2_.vertex_count(); ++v) {
      if (used_[v] || !compatible(next, v)) continue;
      used_[v] = true;
      image_[next] = v;
      chosen_.push_back(next);
      extend(next + 1, mapped + 1);
      chosen_.pop_back();
      used_[v] = false;
    }
    extend(next + 1, mapped);
  }

  bool compatible(Vertex u, Vertex v) const {
    if (g1_.has_edge(u, u) != g2_.has_edge(v, v)) return false;
    for (Vertex w : chosen_) {
      if (g1_.has_edge(u, w) != g2_.has_edge(v, image_[w])) return false;
    }
    return true;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<Vertex> chosen_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t mcs_size(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > kMcsMaxVertices || g2.vertex_count() > kMcsMaxVertices) {
    throw std::invalid_argument("maximum common subgraph search is limited to " +
                                std::to_string(kMcsMaxVertices) + " vertices per graph");
  }
  return McsSearch(g1, g2).run();
}

double mcs_distance(const Graph& g1, const Graph& g2) {
  const std::size_t larger = std::max(g1.vertex_count(), g2.vertex_count());
  if (larger == 0) return 0.0;
  return 1.0 - static_cast<double>(mcs_size(g1, g2)) / static_cast<double>(larger);
}

}  // namespace qwgsim
