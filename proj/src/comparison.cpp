#include "qwgsim/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwgsim/parallel.hpp"

namespace qwgsim {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::threshold: return "threshold";
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::euclidean_squared: return "euclidean_squared";
    case MetricKind::matusita: return "matusita";
  }
  return "?";
}

std::string_view to_string(Accumulation acc) { return acc == Accumulation::l2 ? "l2" : "l1"; }

std::string_view to_string(Enumeration e) {
  return e == Enumeration::paper ? "paper" : "symmetric";
}

MetricKind parse_metric(std::string_view text) {
  if (text == "threshold") return MetricKind::threshold;
  if (text == "euclid" || text == "euclidean") return MetricKind::euclidean;
  if (text == "euclid2" || text == "euclidean_squared") return MetricKind::euclidean_squared;
  if (text == "matusita") return MetricKind::matusita;
  throw std::invalid_argument("unknown metric '" + std::string(text) + "'");
}

Enumeration parse_enumeration(std::string_view text) {
  if (text == "paper") return Enumeration::paper;
  if (text == "symmetric") return Enumeration::symmetric;
  throw std::invalid_argument("unknown enumeration mode '" + std::string(text) + "'");
}

Accumulation parse_accumulation(std::string_view text) {
  if (text == "l2") return Accumulation::l2;
  if (text == "l1") return Accumulation::l1;
  throw std::invalid_argument("unknown accumulation '" + std::string(text) + "'");
}

void CompareConfig::validate() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(theta > 0.0 && theta < two_pi) || !(phi > 0.0 && phi < two_pi)) {
    throw std::invalid_argument("phases must lie in (0, 2pi)");
  }
  if (theta == phi) throw std::invalid_argument("theta and phi must differ");
  if (steps && *steps == 0) throw std::invalid_argument("step count must be >= 1");
  if (!(metric.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
}

std::size_t diameter_steps(const Graph& a, const Graph& b) {
  return std::max({2 * diameter(a), 2 * diameter(b), std::size_t{4}});
}

std::size_t steps_policy(const Graph& a, const Graph& b) {
  return std::max({diameter_steps(a, b), a.vertex_count(), b.vertex_count()});
}

std::size_t CompareConfig::resolve_steps(const Graph& a, const Graph& b) const {
  if (steps) return *steps;
  return step_rule == StepRule::size ? steps_policy(a, b) : diameter_steps(a, b);
}

std::size_t combo_count(std::size_t n, Enumeration enumeration) {
  if (enumeration == Enumeration::paper) return n * n * n * (n - 1) / 2;
  return n * n * (n - 1) * (n - 1);
}

namespace {

double diff_norm(const double* p, const double* q, std::size_t len, Accumulation acc) {
  double total = 0.0;
  if (acc == Accumulation::l1) {
    for (std::size_t t = 0; t < len; ++t) total += std::abs(p[t] - q[t]);
    return total;
  }
  for (std::size_t t = 0; t < len; ++t) {
    const double d = p[t] - q[t];
    total += d * d;
  }
  return std::sqrt(total);
}

// Distance of one combination from the two norms. For matusita the inputs
// are already square-rooted series, so the norms are M(p,q).
double combine(double left, double right, std::size_t steps, const MetricConfig& metric) {
  const double n = static_cast<double>(steps);
  switch (metric.kind) {
    case MetricKind::threshold: return left + right < metric.epsilon ? 0.0 : 1.0;
    case MetricKind::euclidean:
    case MetricKind::matusita: return (left + right) / n;
    case MetricKind::euclidean_squared: {
      const double l = left / n;
      const double r = right / n;
      return l * l + r * r;
    }
  }
  return 0.0;
}

Accumulation effective_accumulation(const MetricConfig& metric) {
  return metric.kind == MetricKind::matusita ? Accumulation::l2 : metric.accumulation;
}

}  // namespace

double pair_distance(std::span<const double> si, std::span<const double> sj,
                     std::span<const double> sk, std::span<const double> sl,
                     const MetricConfig& metric) {
  const std::size_t steps = si.size();
  if (sj.size() != steps || sk.size() != steps || sl.size() != steps) {
    throw std::invalid_argument("probability series lengths differ");
  }
  if (steps == 0) throw std::invalid_argument("empty probability series");
  const Accumulation acc = effective_accumulation(metric);
  if (metric.kind == MetricKind::matusita) {
    auto root = [](std::span<const double> s) {
      std::vector<double> out(s.size());
      for (std::size_t t = 0; t < s.size(); ++t) out[t] = std::sqrt(s[t]);
      return out;
    };
    const auto ri = root(si), rj = root(sj), rk = root(sk), rl = root(sl);
    return combine(diff_norm(ri.data(), rk.data(), steps, acc),
                   diff_norm(rj.data(), rl.data(), steps, acc), steps, metric);
  }
  return combine(diff_norm(si.data(), sk.data(), steps, acc),
                 diff_norm(sj.data(), sl.data(), steps, acc), steps, metric);
}

ReferenceSeries::ReferenceSeries(const Graph& g, Side side, Enumeration enumeration,
                                 double theta, double phi, std::size_t steps,
                                 std::size_t threads)
    : steps_(steps) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  // Paper mode visits each unordered first-side pair once. Both mark
  // orientations are walked and averaged so the score does not depend on
  // which endpoint carries a smaller label.
  if (enumeration == Enumeration::paper && side == Side::first) orientations_ = 2;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const bool keep = enumeration == Enumeration::symmetric || side == Side::first ? i != j
                                                                                      : true;
      if (keep) pairs_.emplace_back(i, j);
    }
  }
  data_.resize(2 * pairs_.size() * steps_);
  const ArcSpace space(g);
  parallel_for(pairs_.size(), threads, [&](std::size_t p) {
    const auto [u, v] = pairs_[p];
    const PhaseMarks marks(PhaseMark{u, theta}, PhaseMark{v, phi});
    const ProbabilitySeries s = run_walk(space, marks, steps_, u, v);
    std::copy(s.first.begin(), s.first.end(), data_.begin() + 2 * p * steps_);
    std::copy(s.second.begin(), s.second.end(), data_.begin() + (2 * p + 1) * steps_);
  });
}

ComparisonScore score_series(const ReferenceSeries& a, const ReferenceSeries& b,
                             const MetricConfig& metric, std::size_t threads) {
  if (a.steps() != b.steps()) throw std::invalid_argument("series step counts differ");
  const std::size_t steps = a.steps();
  const Accumulation acc = effective_accumulation(metric);

  // Flattened copies, square-rooted up front for the matusita metric.
  auto flatten = [&](const ReferenceSeries& s) {
    std::vector<double> out(2 * s.pair_count() * steps);
    for (std::size_t p = 0; p < s.pair_count(); ++p) {
      auto f = s.first(p);
      auto g = s.second(p);
      std::copy(f.begin(), f.end(), out.begin() + 2 * p * steps);
      std::copy(g.begin(), g.end(), out.begin() + (2 * p + 1) * steps);
    }
    if (metric.kind == MetricKind::matusita) {
      for (double& x : out) x = std::sqrt(x);
    }
    return out;
  };
  const std::vector<double> fa = flatten(a);
  const std::vector<double> fb = flatten(b);

  std::vector<double> partial(a.pair_count(), 0.0);
  parallel_for(a.pair_count(), threads, [&](std::size_t p) {
    const double* si = fa.data() + 2 * p * steps;
    const double* sj = si + steps;
    double sum = 0.0;
    for (std::size_t q = 0; q < b.pair_count(); ++q) {
      const double* sk = fb.data() + 2 * q * steps;
      const double* sl = sk + steps;
      sum += combine(diff_norm(si, sk, steps, acc), diff_norm(sj, sl, steps, acc), steps, metric);
    }
    partial[p] = sum;
  });

  ComparisonScore score;
  for (double x : partial) score.value += x;
  score.value /= static_cast<double>(a.orientations() * b.orientations());
  score.combo_count = a.pair_count() / a.orientations() * (b.pair_count() / b.orientations());
  score.steps = steps;
  return score;
}

ComparisonScore comparison_score(const Graph& a, const Graph& b, const CompareConfig& cfg,
                                 std::size_t steps) {
  cfg.validate();
  if (a.vertex_count() != b.vertex_count()) {
    throw GraphError("graphs must have equal vertex counts (" +
                     std::to_string(a.vertex_count()) + " vs " +
                     std::to_string(b.vertex_count()) + ")");
  }
  if (a.vertex_count() < 2) throw GraphError("comparison needs at least 2 vertices");
  if (steps == 0) throw std::invalid_argument("step count must be >= 1");
  const ReferenceSeries sa(a, ReferenceSeries::Side::first, cfg.enumeration, cfg.theta, cfg.phi,
                           steps, cfg.threads);
  const ReferenceSeries sb(b, ReferenceSeries::Side::second, cfg.enumeration, cfg.theta,
                           cfg.phi, steps, cfg.threads);
  return score_series(sa, sb, cfg.metric, cfg.threads);
}

ComparisonScore comparison_score(const Graph& a, const Graph& b, const CompareConfig& cfg) {
  return comparison_score(a, b, cfg, cfg.resolve_steps(a, b));
}

}  // namespace qwgsim
