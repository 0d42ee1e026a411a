#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwgsim/graph.hpp"
#include "qwgsim/walk.hpp"

namespace qwgsim {

enum class MetricKind { threshold, euclidean, euclidean_squared, matusita };
/// How differences are accumulated over the time index.
enum class Accumulation { l2, l1 };
/// paper: unordered i<j on the first graph (both mark orientations averaged)
/// against every ordered (k,l) including k==l on the second.
/// symmetric: ordered i!=j against ordered k!=l.
enum class Enumeration { paper, symmetric };
/// Step budget used when no explicit count is configured.
enum class StepRule { size, diameter };

std::string_view to_string(MetricKind kind);
std::string_view to_string(Accumulation acc);
std::string_view to_string(Enumeration e);
/// Accepts threshold, euclid/euclidean, euclid2/euclidean_squared, matusita.
MetricKind parse_metric(std::string_view text);
Enumeration parse_enumeration(std::string_view text);
Accumulation parse_accumulation(std::string_view text);

struct MetricConfig {
  MetricKind kind = MetricKind::euclidean;
  double epsilon = 0.01;  // threshold metric only
  Accumulation accumulation = Accumulation::l2;
};

struct CompareConfig {
  double theta = std::numbers::pi / 2.0;
  double phi = 4.0 * std::numbers::pi / 3.0;
  std::optional<std::size_t> steps;  // nullopt selects step_rule
  StepRule step_rule = StepRule::size;
  Enumeration enumeration = Enumeration::paper;
  MetricConfig metric;
  std::uint64_t seed = 0;
  std::size_t threads = 0;  // 0 selects default_thread_count()

  /// Throws std::invalid_argument on equal or out-of-range phases, a zero
  /// step count, or a non-positive epsilon.
  void validate() const;

  /// Explicit steps, else steps_policy or diameter_steps per step_rule.
  std::size_t resolve_steps(const Graph& a, const Graph& b) const;
};

struct ComparisonScore {
  double value = 0.0;
  std::size_t combo_count = 0;
  std::size_t steps = 0;
};

/// max(2 diam(a), 2 diam(b), 4): the walker covers every shortest path
/// out and back.
std::size_t diameter_steps(const Graph& a, const Graph& b);

/// Default step budget: max(diameter_steps(a, b), n). Two diameters alone
/// are too short to separate same-parameter strongly regular graphs.
std::size_t steps_policy(const Graph& a, const Graph& b);

/// D_ijkl for one reference combination: series i,j from the first graph
/// against k,l from the second. Each span holds nSteps probabilities.
double pair_distance(std::span<const double> si, std::span<const double> sj,
                     std::span<const double> sk, std::span<const double> sl,
                     const MetricConfig& metric);

/// Reference-node series of one graph for every mark pair the enumeration
/// needs. Walk t of pair p is stored contiguously, first node then second.
class ReferenceSeries {
 public:
  enum class Side { first, second };

  ReferenceSeries(const Graph& g, Side side, Enumeration enumeration, double theta, double phi,
                  std::size_t steps, std::size_t threads = 0);

  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t steps() const { return steps_; }
  std::pair<Vertex, Vertex> pair(std::size_t p) const { return pairs_[p]; }
  /// Mark orientations averaged per counted pair (2 on the paper first side).
  std::size_t orientations() const { return orientations_; }

  std::span<const double> first(std::size_t p) const {
    return {data_.data() + 2 * p * steps_, steps_};
  }
  std::span<const double> second(std::size_t p) const {
    return {data_.data() + (2 * p + 1) * steps_, steps_};
  }

 private:
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::size_t steps_;
  std::size_t orientations_ = 1;
  std::vector<double> data_;
};

/// Sum of pair_distance over every (first pair, second pair) combination.
/// Partial sums per first-graph pair are reduced in index order.
ComparisonScore score_series(const ReferenceSeries& a, const ReferenceSeries& b,
                             const MetricConfig& metric, std::size_t threads = 0);

/// Comparison score of a against b. Throws GraphError on differing vertex
/// counts or n < 2.
ComparisonScore comparison_score(const Graph& a, const Graph& b, const CompareConfig& cfg);
/// Same, with an explicit step count overriding cfg.steps.
ComparisonScore comparison_score(const Graph& a, const Graph& b, const CompareConfig& cfg,
                                 std::size_t steps);

/// n^3(n-1)/2 for paper, n^2(n-1)^2 for symmetric.
std::size_t combo_count(std::size_t n, Enumeration enumeration);

}  // namespace qwgsim
