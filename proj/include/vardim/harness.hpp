#pragma once

#include <map>
#include <string>
#include <vector>

#include "vardim/geometry.hpp"
#include "vardim/lattice.hpp"

#include <json.hpp>

namespace vardim {

// Driver configuration. Experiments:
//   build, balance, measures, geometry, generator, occupation, tightness,
//   resurrection, variance, reversal.
struct ExperimentConfig {
  std::string experiment;
  int k = 0;        // 0 = experiment default
  int k_hi = 0;     // 0 = experiment default (range experiments)
  Rat eps{1};
  Rat R{20};
  Rat L{20};
  long long paths = 0;   // 0 = experiment default
  double t_max = 0.0;    // 0 = experiment default
  double theta = 0.0;    // 0 = experiment default
  std::vector<double> deltas;  // tightness thresholds; empty = default grid
  std::uint64_t seed = 20250825;
  std::string out;             // report sink; empty = stdout only
  std::string format = "json"; // json | csv
  int threads = 1;

  LatticeParams lattice(int level) const { return LatticeParams{level, eps, R, L}; }
  void validate() const;  // throws std::invalid_argument
};

// Parses "key=value" lines (# comments); later apply_override calls win.
ExperimentConfig parse_config_file(const std::string& path);
void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct MetricRow {
  std::string name;
  double value = 0.0;
  std::string band;  // human-readable tolerance / acceptance band
  bool pass = false;
};

struct Report {
  std::string experiment;
  nlohmann::json config_echo;
  std::vector<MetricRow> rows;
  double wall_seconds = 0.0;

  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Process-wide cache of built graphs keyed by parameters (graphs are
// immutable and shareable; construction is the dominant fixed cost).
const LatticeGraph& cached_graph(const LatticeParams& params);

// Runs one experiment; deterministic given (config, seed). Writes the report
// to cfg.out when set.
Report run(const ExperimentConfig& cfg);

}  // namespace vardim
