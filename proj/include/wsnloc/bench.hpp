#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wsnloc/deployment.hpp"
#include "wsnloc/localization.hpp"
#include "wsnloc/netgraph.hpp"
#include "wsnloc/sdp.hpp"

namespace wsnloc {

struct ExperimentConfig {
  TopologyKind topology = TopologyKind::random;
  int n = 64;          // random topology
  int side_count = 8;  // square grid
  int rows = 8;        // hex grid
  int cols = 8;
  double r = 0.5;
  std::vector<double> radio_ranges = {0.15, 0.18, 0.20, 0.25};
  std::vector<int> anchor_counts = {4, 5, 6, 10};
  int rounds = 20;
  std::uint64_t base_seed = 1;
  std::vector<Algorithm> algorithms = {Algorithm::mds_map, Algorithm::sdp};
  // Placement noise for grid kinds. Defaults: 0.1 x lattice spacing for the
  // square grid, none for the hex grid (see resolved_noise_std).
  std::optional<double> noise_std;
  double sdp_tol = kDefaultSdpTol;
  int sdp_max_iter = kDefaultSdpMaxIter;
};

struct AlgorithmOutcome {
  double error_over_r = 0.0;
  bool converged = true;
};

struct TrialResult {
  int round = 0;
  double connectivity = 0.0;
  int regenerated = 0;  // deployments discarded for disconnection
  std::vector<std::pair<Algorithm, AlgorithmOutcome>> outcomes;
};

struct ReportCell {
  TopologyKind topology = TopologyKind::random;
  double radio_range = 0.0;
  int anchors = 0;
  Algorithm algorithm = Algorithm::mds_map;
  double mean_error_over_r = 0.0;
  double stddev = 0.0;
  double mean_connectivity = 0.0;
  int rounds = 0;
  int regenerated = 0;
  int nonconverged = 0;
};

struct Report {
  ExperimentConfig config;
  std::vector<ReportCell> cells;  // range-major, then anchors, then algorithm
};

double resolved_noise_std(const ExperimentConfig& config);

// Ground-truth deployment for the configured topology (no anchors yet).
Deployment make_deployment(const ExperimentConfig& config, std::uint64_t seed);

// Mean Euclidean position error over non-anchor nodes, in multiples of R.
double estimation_error(const LocalizationResult& result, const Deployment& truth,
                        double radio_range);

// One seeded trial: deployment + anchors + graph (regenerated with a fresh
// sub-seed while disconnected, up to 100 attempts), then every configured
// algorithm on the identical graph.
TrialResult run_trial(const ExperimentConfig& config, double radio_range, int anchors, int round);

// Full cross product radio_ranges x anchor_counts x rounds. Trials are
// independent; jobs > 1 runs them on a thread pool without affecting the
// resulting Report.
Report run_sweep(const ExperimentConfig& config, int jobs = 1);

}  // namespace wsnloc
