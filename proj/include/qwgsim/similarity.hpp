#pragma once

#include "json.hpp"

#include "qwgsim/comparison.hpp"
#include "qwgsim/permutation.hpp"

namespace qwgsim {

/// Distance assigned when a self-score vanishes but the cross score does
/// not; sim = 1/(1+D) is then numerically zero.
inline constexpr double kDegenerateDistance = 1e18;

/// Scores at or below combo_count * kScoreNoiseFloor count as zero in the
/// degenerate-denominator guard.
inline constexpr double kScoreNoiseFloor = 1e-12;

struct SimilarityReport {
  ComparisonScore d_aa;
  ComparisonScore d_bb;
  ComparisonScore d_ab;
  double dist = 0.0;
  double sim = 1.0;

  CompareConfig config;
  std::size_t steps = 0;
  Permutation perm_a;  // relabeling that produced a'
  Permutation perm_b;  // relabeling that produced b'
};

/// Normalised deviation of the cross score from the two self-scores.
double similarity_distance(const ComparisonScore& d_aa, const ComparisonScore& d_bb,
                           const ComparisonScore& d_ab);

/// Builds seeded relabelings a' and b', scores (a,a'), (b,b') and (a,b) with a
/// shared step count, and returns sim = 1/(1+D).
SimilarityReport graph_similarity(const Graph& a, const Graph& b, const CompareConfig& cfg);

nlohmann::ordered_json to_json(const SimilarityReport& report);

}  // namespace qwgsim
