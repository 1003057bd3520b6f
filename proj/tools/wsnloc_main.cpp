#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wsnloc/bench.hpp"
#include "wsnloc/errors.hpp"
#include "wsnloc/io.hpp"
#include "wsnloc/mds.hpp"
#include "wsnloc/sdp.hpp"
#include "wsnloc/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

struct GenerateOptions {
  std::string topology;
  int n = 64;
  int side = 8;
  int rows = 8;
  int cols = 8;
  double r = 0.5;
  std::optional<double> noise_std;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateOptions& opt) {
  const wsnloc::TopologyKind kind = wsnloc::topology_from_string(opt.topology);
  wsnloc::Deployment dep;
  switch (kind) {
    case wsnloc::TopologyKind::random:
      dep = wsnloc::gen_random(opt.n, opt.r, opt.seed);
      break;
    case wsnloc::TopologyKind::square_grid: {
      const double std = opt.noise_std.value_or(
          wsnloc::kDefaultNoiseFraction * wsnloc::square_grid_spacing(opt.side, opt.r));
      dep = wsnloc::gen_square_grid(opt.side, opt.r, wsnloc::GridNoise{std}, opt.seed);
      break;
    }
    case wsnloc::TopologyKind::hex_grid: {
      const double std = opt.noise_std.value_or(0.0);  // hex benchmarks run noise-free
      dep = wsnloc::gen_hex_grid(opt.rows, opt.cols, opt.r, wsnloc::GridNoise{std}, opt.seed);
      break;
    }
  }
  write_file(opt.out, wsnloc::deployment_to_json(dep) + "\n");
  std::printf("n=%d kind=%s seed=%llu\n", dep.n(), wsnloc::to_string(dep.kind).c_str(),
              static_cast<unsigned long long>(dep.seed));
  return kExitOk;
}

struct LocalizeOptions {
  std::string in;
  double range = 0.0;
  int anchors = -1;  // -1: keep the anchors stored in the file
  std::string algo;
  std::string mode = "range";
  std::uint64_t seed = 1;
  double tol = wsnloc::kDefaultSdpTol;
  int max_iter = wsnloc::kDefaultSdpMaxIter;
  std::string out;
  std::string dump_sdp;
};

int cmd_localize(const LocalizeOptions& opt) {
  wsnloc::Deployment dep = wsnloc::deployment_from_json(read_file(opt.in));
  if (opt.anchors >= 0) dep = wsnloc::select_anchors(std::move(dep), opt.anchors, opt.seed);
  if (static_cast<int>(dep.anchor_indices.size()) < 3) {
    throw std::invalid_argument("localization requires at least 3 anchors (use --anchors)");
  }
  const wsnloc::Algorithm algorithm = wsnloc::algorithm_from_string(opt.algo);
  const wsnloc::DistanceMode mode =
      opt.mode == "hop" ? wsnloc::DistanceMode::hop_count : wsnloc::DistanceMode::true_range;
  if (algorithm == wsnloc::Algorithm::sdp && mode == wsnloc::DistanceMode::hop_count) {
    throw wsnloc::UnsupportedModeError("sdp does not support hop mode: hop counts are not distances");
  }

  const wsnloc::NetworkGraph graph = wsnloc::build_graph(dep, opt.range, mode);
  if (!wsnloc::is_connected(graph)) {
    // Report one unreachable pair, matching the shortest-path error.
    wsnloc::shortest_paths(graph);
  }

  std::vector<wsnloc::Point2> anchor_truth;
  for (int idx : dep.anchor_indices) anchor_truth.push_back(dep.positions[idx]);

  if (!opt.dump_sdp.empty() && algorithm == wsnloc::Algorithm::sdp) {
    const wsnloc::SdpProblem problem = wsnloc::build_problem(graph, anchor_truth);
    write_file(opt.dump_sdp, wsnloc::dump_problem(problem));
  }

  wsnloc::LocalizationResult result;
  if (algorithm == wsnloc::Algorithm::mds_map) {
    result = wsnloc::mds_map(graph, anchor_truth);
  } else {
    result = wsnloc::sdp_localize(graph, anchor_truth, opt.tol, opt.max_iter);
  }

  const std::string json = wsnloc::result_to_json(result) + "\n";
  if (!opt.out.empty()) {
    write_file(opt.out, json);
  } else {
    std::fputs(json.c_str(), stdout);
  }
  const double error = wsnloc::estimation_error(result, dep, opt.range);
  std::printf("error_over_R=%.6g connectivity=%.6g\n", error, wsnloc::avg_connectivity(graph));
  if (!result.converged) {
    std::fprintf(stderr, "warning: sdp solver did not converge within %d iterations\n",
                 opt.max_iter);
  }
  return kExitOk;
}

struct SweepOptions {
  std::string config_path;
  std::string figure;
  std::string out = "report.csv";
  std::string plot_out;
  std::optional<int> rounds;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> topology;
  int jobs = 0;
};

int cmd_sweep(const SweepOptions& opt) {
  wsnloc::ExperimentConfig config;
  if (!opt.config_path.empty()) {
    config = wsnloc::experiment_config_from_json(read_file(opt.config_path));
  }
  if (!opt.figure.empty()) {
    // Presets for the three benchmark figures: identical sweep parameters,
    // different topology.
    if (opt.figure == "fig2") {
      config.topology = wsnloc::TopologyKind::random;
    } else if (opt.figure == "fig4") {
      config.topology = wsnloc::TopologyKind::square_grid;
    } else if (opt.figure == "fig6") {
      config.topology = wsnloc::TopologyKind::hex_grid;
    } else {
      throw std::invalid_argument("unknown figure preset: " + opt.figure);
    }
  }
  if (opt.topology) config.topology = wsnloc::topology_from_string(*opt.topology);
  if (opt.rounds) config.rounds = *opt.rounds;
  if (opt.seed) config.base_seed = *opt.seed;

  const wsnloc::Report report = wsnloc::run_sweep(config, opt.jobs);
  write_file(opt.out, wsnloc::report_to_csv(report));
  std::printf("wrote %s (%zu rows)\n", opt.out.c_str(), report.cells.size());

  if (!opt.figure.empty()) {
    const std::string plot_path = opt.plot_out.empty() ? opt.out + ".plot.csv" : opt.plot_out;
    write_file(plot_path, wsnloc::plot_data_csv(report));
    std::printf("wrote %s\n", plot_path.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wsnloc: MDS-MAP and SDP-relaxation localization benchmark"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "generate a deployment file");
  generate->add_option("--topology", gen.topology, "random | square-grid | hex-grid")->required();
  generate->add_option("--n", gen.n, "node count (random topology)");
  generate->add_option("--side", gen.side, "nodes per side (square grid)");
  generate->add_option("--rows", gen.rows, "rows (hex grid)");
  generate->add_option("--cols", gen.cols, "columns (hex grid)");
  generate->add_option("--r", gen.r, "arena side length");
  generate->add_option("--noise-std", gen.noise_std,
                       "grid placement noise std (default 0.1 x spacing)");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("-o,--out", gen.out, "output deployment JSON path")->required();

  LocalizeOptions loc;
  CLI::App* localize = app.add_subcommand("localize", "run one localization");
  localize->add_option("--in", loc.in, "deployment JSON path")
      ->required()
      ->check(CLI::ExistingFile);
  localize->add_option("--range", loc.range, "radio range R")->required();
  localize->add_option("--anchors", loc.anchors, "anchor count to draw (overrides file anchors)");
  localize->add_option("--algo", loc.algo, "mds-map | sdp")->required();
  localize->add_option("--mode", loc.mode, "range | hop")->check(CLI::IsMember({"range", "hop"}));
  localize->add_option("--seed", loc.seed, "anchor selection seed");
  localize->add_option("--tol", loc.tol, "sdp solver tolerance");
  localize->add_option("--max-iter", loc.max_iter, "sdp solver iteration cap");
  localize->add_option("-o,--out", loc.out, "output result JSON path (default: stdout)");
  localize->add_option("--dump-sdp", loc.dump_sdp, "write the sdp constraint system to a file");

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a benchmark sweep");
  sweep_cmd->add_option("--config", sweep.config_path, "ExperimentConfig JSON path")
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--figure", sweep.figure, "fig2 | fig4 | fig6 preset");
  sweep_cmd->add_option("-o,--out", sweep.out, "report CSV path");
  sweep_cmd->add_option("--plot-out", sweep.plot_out, "plot-data CSV path (with --figure)");
  sweep_cmd->add_option("--rounds", sweep.rounds, "override rounds");
  sweep_cmd->add_option("--seed", sweep.seed, "override base seed");
  sweep_cmd->add_option("--topology", sweep.topology, "override topology");
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (localize->parsed()) return cmd_localize(loc);
    return cmd_sweep(sweep);
  } catch (const wsnloc::GraphDisconnectedError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInfeasible;
  } catch (const wsnloc::InfeasibleConfigurationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
