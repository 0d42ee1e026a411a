#include "qwgsim/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwgsim {

ArcSpace::ArcSpace(const Graph& g) {
  const std::size_t n = g.vertex_count();
  offsets_.resize(n + 1, 0);
  for (Vertex x = 0; x < n; ++x) {
    offsets_[x + 1] = offsets_[x] + static_cast<ArcIndex>(g.degree(x));
    if (g.degree(x) > 0) ++active_;
  }
  tails_.resize(offsets_[n]);
  heads_.resize(offsets_[n]);
  reverse_.resize(offsets_[n]);
  for (Vertex x = 0; x < n; ++x) {
    ArcIndex a = offsets_[x];
    for (Vertex y : g.neighbours(x)) {
      tails_[a] = x;
      heads_[a] = y;
      ++a;
    }
  }
  // Neighbour lists are sorted, so the arc y->x is found by binary search in
  // y's slice.
  for (ArcIndex a = 0; a < heads_.size(); ++a) {
    const Vertex x = tails_[a];
    const Vertex y = heads_[a];
    const auto first = heads_.begin() + offsets_[y];
    const auto last = heads_.begin() + offsets_[y + 1];
    reverse_[a] = static_cast<ArcIndex>(std::lower_bound(first, last, x) - heads_.begin());
  }
}

double WalkState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

namespace {

void check_angle(double angle) {
  if (!(angle > 0.0 && angle < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("phase angle must lie in (0, 2pi), got " +
                                std::to_string(angle));
  }
}

}  // namespace

PhaseMarks::PhaseMarks(PhaseMark first) : marks_{first, PhaseMark{}}, count_(1) {
  check_angle(first.angle);
}

PhaseMarks::PhaseMarks(PhaseMark first, PhaseMark second) : marks_{first, second}, count_(2) {
  check_angle(first.angle);
  check_angle(second.angle);
  if (first.angle == second.angle) {
    throw std::invalid_argument("the two phase angles must differ");
  }
}

WalkState initial_state(const ArcSpace& space) {
  WalkState state;
  state.amplitudes.resize(space.arc_count());
  if (space.arc_count() == 0) return state;
  // 1/sqrt(n d_x) over all n vertices, then renormalised; equivalently n is
  // the number of vertices that carry arcs.
  const double n = static_cast<double>(space.active_vertex_count());
  for (Vertex x = 0; x < space.vertex_count(); ++x) {
    const std::size_t d = space.degree(x);
    if (d == 0) continue;
    const double amp = 1.0 / std::sqrt(n * static_cast<double>(d));
    for (ArcIndex a = space.begin(x); a < space.end(x); ++a) state.amplitudes[a] = amp;
  }
  return state;
}

void walk_step(WalkState& state, const ArcSpace& space, const PhaseMarks& marks,
               std::vector<Amplitude>& scratch) {
  auto& amp = state.amplitudes;
  for (const PhaseMark& mark : marks.marks()) {
    const Amplitude factor = std::polar(1.0, mark.angle);
    for (ArcIndex a = space.begin(mark.node); a < space.end(mark.node); ++a) amp[a] *= factor;
  }

  // Grover coin as a reflection about the local uniform vector:
  // c' = (2/d) (sum c) - c.
  const std::size_t n = space.vertex_count();
  for (Vertex x = 0; x < n; ++x) {
    const ArcIndex lo = space.begin(x);
    const ArcIndex hi = space.end(x);
    if (hi - lo < 2) continue;  // degree-1 coin is the identity
    Amplitude sum = 0.0;
    for (ArcIndex a = lo; a < hi; ++a) sum += amp[a];
    const Amplitude mean2 = sum * (2.0 / static_cast<double>(hi - lo));
    for (ArcIndex a = lo; a < hi; ++a) amp[a] = mean2 - amp[a];
  }

  scratch.resize(amp.size());
  for (ArcIndex a = 0; a < amp.size(); ++a) scratch[space.reverse(a)] = amp[a];
  amp.swap(scratch);
}

double node_probability(const WalkState& state, const ArcSpace& space, Vertex x) {
  double p = 0.0;
  for (ArcIndex a = space.begin(x); a < space.end(x); ++a) p += std::norm(state.amplitudes[a]);
  return p;
}

std::vector<double> node_probabilities(const WalkState& state, const ArcSpace& space) {
  std::vector<double> out(space.vertex_count());
  for (Vertex x = 0; x < out.size(); ++x) out[x] = node_probability(state, space, x);
  return out;
}

ProbabilitySeries run_walk(const ArcSpace& space, const PhaseMarks& marks, std::size_t steps,
                           Vertex record_first, Vertex record_second) {
  if (steps == 0) throw std::invalid_argument("a walk needs at least one step");
  const std::size_t n = space.vertex_count();
  if (record_first >= n || record_second >= n) {
    throw std::invalid_argument("recorded vertex out of range");
  }
  for (const PhaseMark& m : marks.marks()) {
    if (m.node >= n) throw std::invalid_argument("phase mark on a vertex out of range");
  }
  ProbabilitySeries series{std::vector<double>(steps, 0.0), std::vector<double>(steps, 0.0)};
  if (space.arc_count() == 0) return series;

  WalkState state = initial_state(space);
  std::vector<Amplitude> scratch;
  for (std::size_t t = 0; t < steps; ++t) {
    walk_step(state, space, marks, scratch);
    series.first[t] = node_probability(state, space, record_first);
    series.second[t] = node_probability(state, space, record_second);
  }
  return series;
}

ProbabilitySeries run_walk(const Graph& g, const PhaseMarks& marks, std::size_t steps,
                           Vertex record_first, Vertex record_second) {
  return run_walk(ArcSpace(g), marks, steps, record_first, record_second);
}

std::vector<std::vector<double>> walk_trace(const Graph& g, const PhaseMarks& marks,
                                            std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("a walk needs at least one step");
  const ArcSpace space(g);
  for (const PhaseMark& m : marks.marks()) {
    if (m.node >= space.vertex_count()) {
      throw std::invalid_argument("phase mark on a vertex out of range");
    }
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(steps);
  WalkState state = initial_state(space);
  std::vector<Amplitude> scratch;
  for (std::size_t t = 0; t < steps; ++t) {
    if (space.arc_count() != 0) walk_step(state, space, marks, scratch);
    rows.push_back(node_probabilities(state, space));
  }
  return rows;
}

}  // namespace qwgsim
