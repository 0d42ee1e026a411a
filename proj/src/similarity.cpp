#include "qwgsim/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace qwgsim {

namespace {

bool is_zero(const ComparisonScore& s) {
  return s.value <= kScoreNoiseFloor * static_cast<double>(s.combo_count);
}

// |self - cross| / self, with the vanishing-denominator cases resolved.
double relative_gap(const ComparisonScore& self, const ComparisonScore& cross) {
  if (is_zero(self)) return is_zero(cross) ? 0.0 : kDegenerateDistance;
  return std::abs(self.value - cross.value) / self.value;
}

}  // namespace

double similarity_distance(const ComparisonScore& d_aa, const ComparisonScore& d_bb,
                           const ComparisonScore& d_ab) {
  return std::min(kDegenerateDistance,
                  relative_gap(d_aa, d_ab) + relative_gap(d_bb, d_ab));
}

SimilarityReport graph_similarity(const Graph& a, const Graph& b, const CompareConfig& cfg) {
  cfg.validate();
  if (a.vertex_count() != b.vertex_count()) {
    throw GraphError("graphs must have equal vertex counts (" +
                     std::to_string(a.vertex_count()) + " vs " +
                     std::to_string(b.vertex_count()) + ")");
  }
  SimilarityReport report;
  report.config = cfg;
  report.steps = cfg.resolve_steps(a, b);

  const Rng root(cfg.seed);
  Rng rng_a = root.split(1);
  Rng rng_b = root.split(2);
  report.perm_a = Permutation::random(a.vertex_count(), rng_a);
  report.perm_b = Permutation::random(b.vertex_count(), rng_b);
  const Graph a_prime = permute(a, report.perm_a);
  const Graph b_prime = permute(b, report.perm_b);

  report.d_aa = comparison_score(a, a_prime, cfg, report.steps);
  report.d_bb = comparison_score(b, b_prime, cfg, report.steps);
  report.d_ab = comparison_score(a, b, cfg, report.steps);
  report.dist = similarity_distance(report.d_aa, report.d_bb, report.d_ab);
  report.sim = 1.0 / (1.0 + report.dist);
  return report;
}

namespace {

nlohmann::ordered_json score_json(const ComparisonScore& s) {
  return {{"value", s.value}, {"combo_count", s.combo_count}, {"steps", s.steps}};
}

}  // namespace

nlohmann::ordered_json to_json(const SimilarityReport& r) {
  const auto& c = r.config;
  return {
      {"d_aa", score_json(r.d_aa)},
      {"d_bb", score_json(r.d_bb)},
      {"d_ab", score_json(r.d_ab)},
      {"dist", r.dist},
      {"sim", r.sim},
      {"config",
       {{"theta", c.theta},
        {"phi", c.phi},
        {"metric", to_string(c.metric.kind)},
        {"epsilon", c.metric.epsilon},
        {"accumulation", to_string(c.metric.accumulation)},
        {"steps", r.steps},
        {"steps_mode", c.steps                             ? "explicit"
                       : c.step_rule == StepRule::size ? "auto"
                                                       : "diameter"},
        {"mode", to_string(c.enumeration)},
        {"seed", c.seed},
        {"perm_a", r.perm_a.mapping()},
        {"perm_b", r.perm_b.mapping()}}},
  };
}

}  // namespace qwgsim
