// vardimwalk: experiment driver and audit-dump tool for varying-dimension
// lattice random walks.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vardim/harness.hpp"
#include "vardim/kernel.hpp"
#include "vardim/measures.hpp"
#include "vardim/path.hpp"
#include "vardim/walker.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Varying-dimension lattice walk laboratory: builds the darned plane+rod "
      "lattice spaces, runs exact and Monte Carlo verification experiments, "
      "and dumps audit artifacts."};

  std::string experiment;
  app.add_option("experiment", experiment,
                 "Experiment: build, balance, measures, geometry, generator, "
                 "occupation, tightness, resurrection, variance, reversal");

  std::string config_path, epsilon, radius, rod_length, delta_list;
  int k = 0, k_hi = 0, threads = 0;
  long long paths = -1;
  double t_max = -1.0, theta = -1.0;
  long long seed = -1;
  std::string out, format;
  app.add_option("--config", config_path, "Config file with key=value lines");
  app.add_option("--k", k, "Mesh level (h = 2^-k)");
  app.add_option("--k-hi", k_hi, "Upper mesh level for range experiments");
  app.add_option("--epsilon", epsilon, "Disk radius (rational, e.g. 1 or 3/2)");
  app.add_option("--radius", radius, "Planar domain radius (rational)");
  app.add_option("--rod-length", rod_length, "Rod length (rational)");
  app.add_option("--paths", paths, "Monte Carlo path count");
  app.add_option("--t-max", t_max, "Time horizon");
  app.add_option("--theta", theta, "Partition separation for the path modulus");
  app.add_option("--delta", delta_list, "Comma-separated modulus thresholds");
  app.add_option("--seed", seed, "Master RNG seed");
  app.add_option("--out", out, "Report output file");
  app.add_option("--format", format, "Report format: json or csv");
  app.add_option("--threads", threads, "Worker threads (results are thread-count independent)");

  std::string dump_graph, dump_measures, dump_kernel, dump_path;
  app.add_option("--dump-graph", dump_graph, "Write the graph dump to this file and exit");
  app.add_option("--dump-measures", dump_measures, "Write the measures CSV and exit");
  app.add_option("--dump-kernel", dump_kernel, "Write the reflected-kernel CSV and exit");
  app.add_option("--dump-path", dump_path, "Simulate one reflected path, write CSV, and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    vardim::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = vardim::parse_config_file(config_path);
    if (!experiment.empty()) cfg.experiment = experiment;
    auto ov = [&cfg](const std::string& key, const std::string& value) {
      vardim::apply_override(cfg, key, value);
    };
    if (k > 0) ov("k", std::to_string(k));
    if (k_hi > 0) ov("k_hi", std::to_string(k_hi));
    if (!epsilon.empty()) ov("epsilon", epsilon);
    if (!radius.empty()) ov("radius", radius);
    if (!rod_length.empty()) ov("rod_length", rod_length);
    if (paths >= 0) ov("paths", std::to_string(paths));
    if (t_max >= 0) ov("t_max", std::to_string(t_max));
    if (theta >= 0) ov("theta", std::to_string(theta));
    if (!delta_list.empty()) ov("delta", delta_list);
    if (seed >= 0) ov("seed", std::to_string(seed));
    if (!out.empty()) ov("out", out);
    if (!format.empty()) ov("format", format);
    if (threads > 0) ov("threads", std::to_string(threads));

    const bool dumping = !dump_graph.empty() || !dump_measures.empty() || !dump_kernel.empty() ||
                         !dump_path.empty();
    if (dumping) {
      const int level = cfg.k > 0 ? cfg.k : 3;
      const vardim::LatticeGraph& g = vardim::cached_graph(cfg.lattice(level));
      auto open = [](const std::string& path) {
        std::ofstream os(path);
        if (!os) throw std::invalid_argument("cannot open output file: " + path);
        return os;
      };
      if (!dump_graph.empty()) {
        auto os = open(dump_graph);
        vardim::dump_graph(g, os);
      }
      if (!dump_measures.empty()) {
        auto os = open(dump_measures);
        const vardim::MeasureTable t = vardim::measures(g);
        vardim::write_measures_csv(g, t, os);
      }
      if (!dump_kernel.empty()) {
        auto os = open(dump_kernel);
        const vardim::JumpKernel kern = vardim::make_kernel(g, vardim::KernelVariant::Reflected);
        vardim::write_kernel_csv(kern, os);
      }
      if (!dump_path.empty()) {
        auto os = open(dump_path);
        const vardim::JumpKernel kern = vardim::make_kernel(g, vardim::KernelVariant::Reflected);
        const double horizon = cfg.t_max > 0 ? cfg.t_max : 1.0;
        vardim::RngStream rng(cfg.seed, 0);
        const vardim::Path p = vardim::simulate_reflected(kern, vardim::kStarId, horizon, rng);
        vardim::write_path_csv(p, os);
      }
      if (cfg.experiment.empty()) return 0;
    }

    if (cfg.experiment.empty()) {
      std::cerr << "error: no experiment given (and no dump requested)\n";
      return 2;
    }

    const vardim::Report rep = vardim::run(cfg);
    if (cfg.format == "csv")
      std::cout << rep.to_csv();
    else
      std::cout << rep.to_json().dump(2) << '\n';
    std::cerr << "experiment " << rep.experiment << ": " << (rep.pass() ? "PASS" : "FAIL")
              << " (" << rep.rows.size() << " checks, " << rep.wall_seconds << "s)\n";
    return rep.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
