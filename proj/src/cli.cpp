#include "qwgsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwgsim/baselines.hpp"
#include "qwgsim/generators.hpp"
#include "qwgsim/io.hpp"
#include "qwgsim/parallel.hpp"
#include "qwgsim/similarity.hpp"
#include "qwgsim/walk.hpp"

namespace qwgsim {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  }
  return value;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad " + what + " '" + text + "'");
}

// "auto" -> steps_policy, "diameter" -> diameter_steps, otherwise a count.
struct StepsChoice {
  enum class Kind { automatic, diameter, fixed } kind = Kind::automatic;
  std::size_t count = 0;

  static StepsChoice parse(const std::string& text) {
    if (text == "auto") return {};
    if (text == "diameter") return {Kind::diameter, 0};
    const auto n = parse_number<std::size_t>(text, "step count");
    if (n == 0) throw std::invalid_argument("step count must be >= 1");
    return {Kind::fixed, n};
  }

  void apply(CompareConfig& cfg) const {
    cfg.steps.reset();
    cfg.step_rule = kind == Kind::diameter ? StepRule::diameter : StepRule::size;
    if (kind == Kind::fixed) cfg.steps = count;
  }
};

struct CompareFlags {
  std::string metric = "euclid";
  double epsilon = 0.01;
  double theta = CompareConfig{}.theta;
  double phi = CompareConfig{}.phi;
  std::string steps = "auto";
  std::string mode = "paper";
  std::string accumulation = "l2";
  std::uint64_t seed = 0;
  std::size_t threads = 0;

  void attach(CLI::App* cmd, bool with_metric) {
    if (with_metric) {
      cmd->add_option("--metric", metric, "threshold | euclid | euclid2 | matusita")
          ->capture_default_str();
    }
    cmd->add_option("--epsilon", epsilon, "threshold metric cut-off")->capture_default_str();
    cmd->add_option("--theta", theta, "phase on the first reference node (radians)")
        ->capture_default_str();
    cmd->add_option("--phi", phi, "phase on the second reference node (radians)")
        ->capture_default_str();
    cmd->add_option("--steps", steps, "auto | diameter | N")->capture_default_str();
    cmd->add_option("--mode", mode, "paper | symmetric")->capture_default_str();
    cmd->add_option("--accumulation", accumulation, "l2 | l1")->capture_default_str();
    cmd->add_option("--seed", seed, "seed for the relabelings")->capture_default_str();
    cmd->add_option("--threads", threads, "worker threads (0 = QWGSIM_THREADS or all cores)");
  }

  CompareConfig config() const {
    CompareConfig cfg;
    cfg.metric.kind = parse_metric(metric);
    cfg.metric.epsilon = epsilon;
    cfg.metric.accumulation = parse_accumulation(accumulation);
    cfg.theta = theta;
    cfg.phi = phi;
    cfg.enumeration = parse_enumeration(mode);
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
  }
};

nlohmann::ordered_json baseline_json(const std::string& metric, const Graph& a, const Graph& b) {
  if (metric == "deltacon") return {{"metric", "deltacon"}, {"value", deltacon_similarity(a, b)}};
  if (metric == "mcs") return {{"metric", "mcs"}, {"value", mcs_distance(a, b)}};
  throw std::invalid_argument("unknown baseline '" + metric + "'");
}

void write_text(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << body;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return s.str();
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::size_t removals, std::size_t trial) {
  return Rng(seed).split(removals).split(trial).seed();
}

Graph resolve_graph_source(const std::string& source, std::uint64_t seed) {
  const auto parts = split(source, ':');
  if (parts.size() == 3 && (parts[0] == "er" || parts[0] == "sf" || parts[0] == "uniform")) {
    const auto n = parse_number<std::size_t>(parts[1], "vertex count");
    if (parts[0] == "er") return gen_er(n, parse_double(parts[2], "edge probability"), seed);
    if (parts[0] == "sf") {
      return gen_scale_free(n, parse_number<std::size_t>(parts[2], "attachment count"), seed);
    }
    return gen_uniform(n, parse_number<std::size_t>(parts[2], "edge count"), seed);
  }
  return load_graph(source);
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.trials == 0) throw std::invalid_argument("trials must be >= 1");
  struct Unit {
    MetricKind metric;
    std::size_t removals;
    std::size_t trial;
  };
  std::vector<Unit> units;
  for (MetricKind m : spec.metrics) {
    for (std::size_t r : spec.removals) {
      for (std::size_t t = 0; t < spec.trials; ++t) units.push_back({m, r, t});
    }
  }
  std::vector<ExperimentRow> rows(units.size());
  parallel_for(units.size(), spec.workers, [&](std::size_t i) {
    const Unit& u = units[i];
    ExperimentRow& row = rows[i];
    row.base_id = spec.base_id;
    row.metric = u.metric;
    row.removals = u.removals;
    row.trial = u.trial;
    row.seed = trial_seed(spec.seed, u.removals, u.trial);
    if (u.removals > spec.base.edge_count()) {
      row.skipped = true;
      row.similarity = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    const auto start = std::chrono::steady_clock::now();
    const Graph perturbed = remove_random_edges(spec.base, u.removals, row.seed);
    CompareConfig cfg = spec.compare;
    cfg.metric.kind = u.metric;
    cfg.seed = row.seed;
    cfg.threads = 1;
    const SimilarityReport report = graph_similarity(spec.base, perturbed, cfg);
    const auto stop = std::chrono::steady_clock::now();
    row.similarity = report.sim;
    row.steps = report.steps;
    row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  });
  return rows;
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "base_id,metric,removals,trial,seed,similarity,nsteps,runtime_ms\n";
  for (const auto& r : rows) {
    out << r.base_id << ',' << to_string(r.metric) << ',' << r.removals << ',' << r.trial << ','
        << r.seed << ',' << format_double(r.similarity) << ',' << r.steps << ','
        << format_double(r.runtime_ms) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  struct Acc {
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t count = 0;
  };
  // Keyed by first appearance so the summary follows the row order.
  std::vector<std::pair<std::pair<MetricKind, std::size_t>, Acc>> groups;
  for (const auto& r : rows) {
    if (r.skipped) continue;
    auto key = std::make_pair(r.metric, r.removals);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.push_back({key, Acc{}});
      it = std::prev(groups.end());
    }
    it->second.sum += r.similarity;
    it->second.lo = std::min(it->second.lo, r.similarity);
    it->second.hi = std::max(it->second.hi, r.similarity);
    ++it->second.count;
  }
  const std::string base_id = rows.empty() ? "" : rows.front().base_id;
  out << "base_id,metric,removals,trials,mean_similarity,min_similarity,max_similarity\n";
  for (const auto& [key, acc] : groups) {
    out << base_id << ',' << to_string(key.first) << ',' << key.second << ',' << acc.count << ','
        << format_double(acc.sum / static_cast<double>(acc.count)) << ','
        << format_double(acc.lo) << ',' << format_double(acc.hi) << '\n';
  }
}

std::filesystem::path summary_path(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
  p.replace_filename(p.stem().string() + "_summary" + ext);
  return p;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph similarity from coined quantum walks", "qwgsim"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a generated or builtin graph");
  std::string model;
  std::size_t gen_n = 0, gen_m = 1, gen_e = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out, gen_format = "el";
  gen->add_option("--model", model, "er | sf | uniform | complete | empty | builtin:NAME")
      ->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--p", gen_p, "edge probability (er)");
  gen->add_option("--m", gen_m, "attachments per vertex (sf)");
  gen->add_option("--e", gen_e, "edge count (uniform)");
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");
  gen->add_option("--format", gen_format, "el | g6")->capture_default_str();

  // compare
  auto* cmp = app.add_subcommand("compare", "similarity report for two graphs (JSON)");
  std::string graph_a, graph_b, cmp_baseline;
  CompareFlags cmp_flags;
  cmp->add_option("--graph-a", graph_a, "path or builtin:NAME")->required();
  cmp->add_option("--graph-b", graph_b, "path or builtin:NAME")->required();
  cmp_flags.attach(cmp, true);
  cmp->add_option("--baseline", cmp_baseline, "deltacon | mcs");

  // baseline
  auto* base = app.add_subcommand("baseline", "classical reference metric (JSON)");
  std::string base_a, base_b, base_metric;
  base->add_option("--graph-a", base_a)->required();
  base->add_option("--graph-b", base_b)->required();
  base->add_option("--metric", base_metric, "deltacon | mcs")->required();

  // walk
  auto* walk = app.add_subcommand("walk", "per-step node probabilities (CSV)");
  std::string walk_graph, walk_out;
  std::vector<std::string> walk_marks;
  std::size_t walk_steps = 10;
  walk->add_option("--graph", walk_graph)->required();
  walk->add_option("--mark", walk_marks, "NODE:ANGLE, at most twice");
  walk->add_option("--steps", walk_steps)->capture_default_str();
  walk->add_option("--out", walk_out, "output path (stdout when omitted)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "edge-removal similarity ensemble (CSV)");
  std::string exp_base, exp_removals, exp_metrics = "euclid", exp_out;
  std::size_t exp_trials = 10, exp_workers = 0;
  CompareFlags exp_flags;
  exp->add_option("--base", exp_base, "path, builtin:NAME, er:N:P, sf:N:M or uniform:N:E")
      ->required();
  exp->add_option("--removals", exp_removals, "comma-separated removal counts")->required();
  exp->add_option("--trials", exp_trials)->capture_default_str();
  exp->add_option("--metrics", exp_metrics, "comma-separated metrics")->capture_default_str();
  exp->add_option("--out", exp_out, "CSV path")->required();
  exp->add_option("--workers", exp_workers, "worker pool size (0 = QWGSIM_THREADS or all cores)");
  exp_flags.attach(exp, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      Graph g;
      if (model == "er") {
        g = gen_er(gen_n, gen_p, gen_seed);
      } else if (model == "sf") {
        g = gen_scale_free(gen_n, gen_m, gen_seed);
      } else if (model == "uniform") {
        g = gen_uniform(gen_n, gen_e, gen_seed);
      } else if (model == "complete") {
        g = complete_graph(gen_n);
      } else if (model == "empty") {
        g = empty_graph(gen_n);
      } else if (model.rfind("builtin:", 0) == 0) {
        g = builtin_graph(model.substr(8));
      } else {
        throw std::invalid_argument("unknown model '" + model + "'");
      }
      std::string body;
      if (gen_format == "el") {
        body = format_edge_list(g);
      } else if (gen_format == "g6") {
        body = graph6_encode(g) + "\n";
      } else {
        throw std::invalid_argument("unknown format '" + gen_format + "'");
      }
      write_text(gen_out, body, out);
    } else if (*cmp) {
      const Graph a = load_graph(graph_a);
      const Graph b = load_graph(graph_b);
      CompareConfig cfg = cmp_flags.config();
      StepsChoice::parse(cmp_flags.steps).apply(cfg);
      const SimilarityReport report = graph_similarity(a, b, cfg);
      nlohmann::ordered_json j = to_json(report);
      j["graph_a"] = graph_a;
      j["graph_b"] = graph_b;
      if (!cmp_baseline.empty()) j["baseline"] = baseline_json(cmp_baseline, a, b);
      out << j.dump(2) << '\n';
    } else if (*base) {
      out << baseline_json(base_metric, load_graph(base_a), load_graph(base_b)).dump(2) << '\n';
    } else if (*walk) {
      if (walk_marks.size() > 2) throw std::invalid_argument("at most two --mark options");
      std::vector<PhaseMark> marks;
      for (const auto& m : walk_marks) {
        const auto parts = split(m, ':');
        if (parts.size() != 2) throw std::invalid_argument("mark must be NODE:ANGLE, got '" + m + "'");
        marks.push_back({parse_number<Vertex>(parts[0], "mark node"),
                         parse_double(parts[1], "mark angle")});
      }
      const PhaseMarks pm = marks.empty()      ? PhaseMarks()
                            : marks.size() == 1 ? PhaseMarks(marks[0])
                                                : PhaseMarks(marks[0], marks[1]);
      const Graph g = load_graph(walk_graph);
      const auto trace = walk_trace(g, pm, walk_steps);
      std::ostringstream csv;
      csv << "t,vertex,probability\n";
      for (std::size_t t = 0; t < trace.size(); ++t) {
        for (std::size_t v = 0; v < trace[t].size(); ++v) {
          csv << t + 1 << ',' << v << ',' << format_double(trace[t][v]) << '\n';
        }
      }
      write_text(walk_out, csv.str(), out);
    } else if (*exp) {
      ExperimentSpec spec;
      spec.base_id = exp_base;
      spec.seed = exp_flags.seed;
      spec.base = resolve_graph_source(exp_base, exp_flags.seed);
      for (const auto& r : split(exp_removals, ',')) {
        spec.removals.push_back(parse_number<std::size_t>(r, "removal count"));
      }
      spec.metrics.clear();
      for (const auto& m : split(exp_metrics, ',')) spec.metrics.push_back(parse_metric(m));
      spec.trials = exp_trials;
      spec.workers = exp_workers;
      spec.compare = exp_flags.config();
      StepsChoice::parse(exp_flags.steps).apply(spec.compare);
      for (std::size_t r : spec.removals) {
        if (r > spec.base.edge_count()) {
          err << "warning: removal count " << r << " exceeds the " << spec.base.edge_count()
              << " edges of the base graph; rows marked nan\n";
        }
      }
      const auto rows = run_experiment(spec);
      std::ostringstream csv, summary;
      write_experiment_csv(csv, rows);
      write_summary_csv(summary, rows);
      write_text(exp_out, csv.str(), out);
      write_text(summary_path(exp_out).string(), summary.str(), out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace qwgsim
