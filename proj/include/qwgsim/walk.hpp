#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qwgsim/graph.hpp"

namespace qwgsim {

using ArcIndex = std::uint32_t;

/// Coin-state basis of a coined walk: one directed arc x->y per direction of
/// every edge, a self-loop contributing a single arc x->x.
///
/// Arcs leaving x occupy the contiguous range [offset(x), offset(x+1)),
/// sorted by head vertex. reverse(a) is the arc y->x for a = x->y and a loop
/// arc is its own reverse.
class ArcSpace {
 public:
  explicit ArcSpace(const Graph& g);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t arc_count() const { return heads_.size(); }

  ArcIndex begin(Vertex x) const { return offsets_[x]; }
  ArcIndex end(Vertex x) const { return offsets_[x + 1]; }
  std::size_t degree(Vertex x) const { return offsets_[x + 1] - offsets_[x]; }

  Vertex tail(ArcIndex a) const { return tails_[a]; }
  Vertex head(ArcIndex a) const { return heads_[a]; }
  ArcIndex reverse(ArcIndex a) const { return reverse_[a]; }

  /// Vertices with at least one arc.
  std::size_t active_vertex_count() const { return active_; }

 private:
  std::vector<ArcIndex> offsets_;
  std::vector<Vertex> tails_;
  std::vector<Vertex> heads_;
  std::vector<ArcIndex> reverse_;
  std::size_t active_ = 0;
};

using Amplitude = std::complex<double>;

struct WalkState {
  std::vector<Amplitude> amplitudes;

  double norm_squared() const;
};

/// A per-step phase e^{i angle} on every arc leaving `node`.
struct PhaseMark {
  Vertex node = 0;
  double angle = 0.0;
};

/// At most two marks. Two marks on the same node compose.
class PhaseMarks {
 public:
  PhaseMarks() = default;
  explicit PhaseMarks(PhaseMark first);
  PhaseMarks(PhaseMark first, PhaseMark second);

  std::span<const PhaseMark> marks() const { return {marks_.data(), count_}; }

 private:
  std::array<PhaseMark, 2> marks_{};
  std::size_t count_ = 0;
};

/// Equal superposition: amplitude 1/sqrt(n d_x) on each arc leaving x,
/// rescaled to unit norm when isolated vertices hold no arcs. An arc-free
/// space yields an empty (silent) state.
WalkState initial_state(const ArcSpace& space);

/// One step: phase marks, then the Grover coin 2/d J - I at every vertex,
/// then translation along the reverse map. `scratch` is resized as needed.
void walk_step(WalkState& state, const ArcSpace& space, const PhaseMarks& marks,
               std::vector<Amplitude>& scratch);

/// P(x) = sum of |amplitude|^2 over arcs leaving x.
std::vector<double> node_probabilities(const WalkState& state, const ArcSpace& space);
double node_probability(const WalkState& state, const ArcSpace& space, Vertex x);

/// Probability at two recorded vertices after steps 1..nSteps. Both rows
/// have length nSteps.
struct ProbabilitySeries {
  std::vector<double> first;
  std::vector<double> second;
};

/// Runs nSteps steps from the equal superposition and records P_t at the two
/// vertices in `record`. A graph without arcs gives all-zero series.
/// Throws std::invalid_argument when nSteps == 0 or a vertex is out of range.
ProbabilitySeries run_walk(const ArcSpace& space, const PhaseMarks& marks, std::size_t steps,
                           Vertex record_first, Vertex record_second);
ProbabilitySeries run_walk(const Graph& g, const PhaseMarks& marks, std::size_t steps,
                           Vertex record_first, Vertex record_second);

/// Full per-step node probabilities (row t-1 holds step t). Debug dumps.
std::vector<std::vector<double>> walk_trace(const Graph& g, const PhaseMarks& marks,
                                            std::size_t steps);

}  // namespace qwgsim
