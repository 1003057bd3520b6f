#include "wsnloc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "wsnloc/errors.hpp"
#include "wsnloc/mds.hpp"
#include "wsnloc/rng.hpp"
#include "wsnloc/topology.hpp"

namespace wsnloc {

namespace {

constexpr std::uint64_t kAnchorStream = 0xA17C4052EEDull;

void validate(const ExperimentConfig& config) {
  if (config.rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (config.radio_ranges.empty()) throw std::invalid_argument("radio_ranges must be nonempty");
  for (double range : config.radio_ranges) {
    if (!(range > 0.0)) throw std::invalid_argument("radio ranges must be positive");
  }
  if (config.anchor_counts.empty()) throw std::invalid_argument("anchor_counts must be nonempty");
  for (int anchors : config.anchor_counts) {
    if (anchors < 3) throw std::invalid_argument("anchor counts must be >= 3");
  }
}

std::uint64_t trial_seed(std::uint64_t base_seed, double radio_range, int anchors, int round,
                         int attempt) {
  std::uint64_t h = base_seed;
  h = mix_seed(h, std::bit_cast<std::uint64_t>(radio_range));
  h = mix_seed(h, static_cast<std::uint64_t>(anchors));
  h = mix_seed(h, static_cast<std::uint64_t>(round));
  h = mix_seed(h, static_cast<std::uint64_t>(attempt));
  return h;
}

}  // namespace

double resolved_noise_std(const ExperimentConfig& config) {
  if (config.noise_std) return *config.noise_std;
  switch (config.topology) {
    case TopologyKind::random:
      return 0.0;
    case TopologyKind::square_grid:
      return kDefaultNoiseFraction * square_grid_spacing(config.side_count, config.r);
    case TopologyKind::hex_grid:
      // The hex lattice is benchmarked noise-free: its 3-spacing shell sits
      // exactly at R=0.20, so any placement noise drops half of that shell
      // and pulls the connectivity below the reference values.
      return 0.0;
  }
  return 0.0;
}

Deployment make_deployment(const ExperimentConfig& config, std::uint64_t seed) {
  switch (config.topology) {
    case TopologyKind::random:
      return gen_random(config.n, config.r, seed);
    case TopologyKind::square_grid:
      return gen_square_grid(config.side_count, config.r, GridNoise{resolved_noise_std(config)},
                             seed);
    case TopologyKind::hex_grid:
      return gen_hex_grid(config.rows, config.cols, config.r, GridNoise{resolved_noise_std(config)},
                          seed);
  }
  throw std::invalid_argument("unknown topology kind");
}

double estimation_error(const LocalizationResult& result, const Deployment& truth,
                        double radio_range) {
  if (!(radio_range > 0.0)) throw std::invalid_argument("radio range must be positive");
  if (result.estimated.rows() != truth.n()) {
    throw std::invalid_argument("result does not cover all nodes");
  }
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < truth.n(); ++i) {
    if (truth.is_anchor(i)) continue;
    const double dx = result.estimated(i, 0) - truth.positions[i].x;
    const double dy = result.estimated(i, 1) - truth.positions[i].y;
    sum += std::sqrt(dx * dx + dy * dy);
    ++count;
  }
  if (count == 0) throw std::invalid_argument("no non-anchor nodes to score");
  return sum / count / radio_range;
}

TrialResult run_trial(const ExperimentConfig& config, double radio_range, int anchors, int round) {
  validate(config);

  TrialResult trial;
  trial.round = round;

  Deployment deployment;
  NetworkGraph graph(0, 1.0, DistanceMode::true_range, {}, {});
  bool connected = false;
  for (int attempt = 0; attempt < 100; ++attempt) {
    const std::uint64_t seed = trial_seed(config.base_seed, radio_range, anchors, round, attempt);
    deployment = make_deployment(config, seed);
    deployment = select_anchors(std::move(deployment), anchors, mix_seed(seed, kAnchorStream));
    graph = build_graph(deployment, radio_range, DistanceMode::true_range);
    if (is_connected(graph)) {
      connected = true;
      break;
    }
    ++trial.regenerated;
  }
  if (!connected) {
    throw InfeasibleConfigurationError(
        "100 consecutive disconnected deployments at range " + std::to_string(radio_range) +
        ", anchors " + std::to_string(anchors) + ", round " + std::to_string(round));
  }

  trial.connectivity = avg_connectivity(graph);

  std::vector<Point2> anchor_truth;
  anchor_truth.reserve(deployment.anchor_indices.size());
  for (int idx : deployment.anchor_indices) anchor_truth.push_back(deployment.positions[idx]);

  for (Algorithm algorithm : config.algorithms) {
    LocalizationResult result;
    if (algorithm == Algorithm::mds_map) {
      result = mds_map(graph, anchor_truth);
    } else {
      result = sdp_localize(graph, anchor_truth, config.sdp_tol, config.sdp_max_iter);
    }
    AlgorithmOutcome outcome;
    outcome.error_over_r = estimation_error(result, deployment, radio_range);
    outcome.converged = result.converged;
    trial.outcomes.emplace_back(algorithm, outcome);
  }
  return trial;
}

Report run_sweep(const ExperimentConfig& config, int jobs) {
  validate(config);

  struct Cell {
    double range;
    int anchors;
  };
  std::vector<Cell> cells;
  for (double range : config.radio_ranges) {
    for (int anchors : config.anchor_counts) cells.push_back({range, anchors});
  }

  const int trials_per_cell = config.rounds;
  const int total = static_cast<int>(cells.size()) * trials_per_cell;
  std::vector<TrialResult> trials(static_cast<std::size_t>(total));

  const auto run_one = [&](int index) {
    const Cell& cell = cells[static_cast<std::size_t>(index) / trials_per_cell];
    const int round = index % trials_per_cell;
    trials[index] = run_trial(config, cell.range, cell.anchors, round);
  };

  int workers = jobs;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, total));
  if (workers == 1) {
    for (int i = 0; i < total; ++i) run_one(i);
  } else {
    // Trials are pure functions of (config, cell, round); scheduling cannot
    // change the Report.
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const int index = next.fetch_add(1);
          if (index >= total) return;
          try {
            run_one(index);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  Report report;
  report.config = config;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const TrialResult* first = &trials[c * static_cast<std::size_t>(trials_per_cell)];
    for (std::size_t alg = 0; alg < config.algorithms.size(); ++alg) {
      ReportCell cell;
      cell.topology = config.topology;
      cell.radio_range = cells[c].range;
      cell.anchors = cells[c].anchors;
      cell.algorithm = config.algorithms[alg];
      cell.rounds = trials_per_cell;

      double error_sum = 0.0;
      double connectivity_sum = 0.0;
      for (int t = 0; t < trials_per_cell; ++t) {
        const TrialResult& trial = first[t];
        error_sum += trial.outcomes[alg].second.error_over_r;
        connectivity_sum += trial.connectivity;
        cell.regenerated += trial.regenerated;
        if (!trial.outcomes[alg].second.converged) ++cell.nonconverged;
      }
      cell.mean_error_over_r = error_sum / trials_per_cell;
      cell.mean_connectivity = connectivity_sum / trials_per_cell;

      double variance = 0.0;
      for (int t = 0; t < trials_per_cell; ++t) {
        const double d = first[t].outcomes[alg].second.error_over_r - cell.mean_error_over_r;
        variance += d * d;
      }
      cell.stddev = trials_per_cell > 1 ? std::sqrt(variance / (trials_per_cell - 1)) : 0.0;
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace wsnloc
