// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "support/oracles.hpp"
#include "wsnloc/bench.hpp"
#include "wsnloc/io.hpp"
#include "wsnloc/mds.hpp"
#include "wsnloc/rng.hpp"
#include "wsnloc/sdp.hpp"
#include "wsnloc/topology.hpp"

using namespace wsnloc;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

Deployment deployment_for(TopologyKind kind, std::uint64_t seed) {
  ExperimentConfig config;
  config.topology = kind;
  return make_deployment(config, seed);  // benchmark noise defaults
}

// Mean connectivity over 100 seeds for each radio range.
std::vector<double> connectivity_means(TopologyKind kind, const std::vector<double>& ranges) {
  std::vector<double> means;
  for (double range : ranges) {
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      sum += avg_connectivity(build_graph(deployment_for(kind, seed), range,
                                          DistanceMode::true_range));
    }
    means.push_back(sum / 100.0);
  }
  return means;
}

void check_connectivity(const std::string& name, TopologyKind kind,
                        const std::vector<double>& expected, double band) {
  const std::vector<double> ranges = {0.15, 0.18, 0.20, 0.25};
  const std::vector<double> means = connectivity_means(kind, ranges);
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (std::abs(means[i] - expected[i]) > band) pass = false;
    if (!detail.empty()) detail += ", ";
    detail += "R=" + fmt(ranges[i]) + ": " + fmt(means[i]) + " (target " + fmt(expected[i]) +
              " +/- " + fmt(band) + ")";
  }
  report(name, pass, detail);
}

const ReportCell* find_cell(const Report& report, double range, int anchors,
                            Algorithm algorithm) {
  for (const ReportCell& cell : report.cells) {
    if (cell.radio_range == range && cell.anchors == anchors && cell.algorithm == algorithm) {
      return &cell;
    }
  }
  return nullptr;
}

double pooled_mean(const Report& report, double range, Algorithm algorithm) {
  double sum = 0.0;
  int count = 0;
  for (const ReportCell& cell : report.cells) {
    if (cell.radio_range == range && cell.algorithm == algorithm) {
      sum += cell.mean_error_over_r;
      ++count;
    }
  }
  return count > 0 ? sum / count : 0.0;
}

}  // namespace

int main() {
  const int jobs = std::max(1u, std::thread::hardware_concurrency());
  std::printf("acceptance suite (%d worker threads)\n", jobs);

  // Criterion 1: connectivity reproduction, random topology.
  check_connectivity("criterion 1 (random connectivity)", TopologyKind::random,
                     {13.31, 18.21, 21.55, 29.75}, 1.5);

  // Criterion 2: connectivity reproduction, square and hexagonal grids.
  check_connectivity("criterion 2a (square-grid connectivity)", TopologyKind::square_grid,
                     {12.97, 18.07, 21.19, 30.14}, 1.5);
  check_connectivity("criterion 2b (hex-grid connectivity)", TopologyKind::hex_grid,
                     {14.94, 20.35, 24.075, 33.45}, 2.0);

  // Default 20-round sweeps for criteria 3-5.
  std::fprintf(stderr, "running default sweeps (random, square, hex)...\n");
  ExperimentConfig config;  // defaults: n=64, r=0.5, 20 rounds, both algorithms
  const Report random_report = run_sweep(config, jobs);
  std::fprintf(stderr, "random sweep done\n");
  config.topology = TopologyKind::square_grid;
  const Report square_report = run_sweep(config, jobs);
  std::fprintf(stderr, "square sweep done\n");
  config.topology = TopologyKind::hex_grid;
  const Report hex_report = run_sweep(config, jobs);
  std::fprintf(stderr, "hex sweep done\n");

  // Criterion 3: MDS-MAP error band on the random topology.
  {
    const ReportCell* cell = find_cell(random_report, 0.15, 4, Algorithm::mds_map);
    const bool pass = cell != nullptr && cell->mean_error_over_r >= 0.08 &&
                      cell->mean_error_over_r <= 0.20;
    report("criterion 3 (mds error band)", pass,
           "R=0.15 anchors=4 mean=" + fmt(cell ? cell->mean_error_over_r : -1.0) +
               "R (band [0.08R, 0.20R], paper 0.1302R)");
  }

  // Criterion 4: SDP error bands on the random topology.
  {
    const ReportCell* low = find_cell(random_report, 0.15, 4, Algorithm::sdp);
    bool pass = low != nullptr && low->mean_error_over_r >= 0.04 && low->mean_error_over_r <= 0.11;
    std::string detail = "R=0.15 anchors=4 mean=" + fmt(low ? low->mean_error_over_r : -1.0) +
                         "R (band [0.04R, 0.11R], paper 0.0721R)";
    for (int anchors : {4, 5, 6, 10}) {
      const ReportCell* cell = find_cell(random_report, 0.25, anchors, Algorithm::sdp);
      const bool ok = cell != nullptr && cell->mean_error_over_r <= 0.02;
      if (!ok) pass = false;
      detail += "; R=0.25 anchors=" + std::to_string(anchors) + ": " +
                fmt(cell ? cell->mean_error_over_r : -1.0) + "R (<= 0.02R)";
    }
    report("criterion 4 (sdp error bands)", pass, detail);
  }

  // Criterion 5a: SDP <= MDS in every random-topology cell.
  {
    bool pass = true;
    std::string worst;
    for (double range : random_report.config.radio_ranges) {
      for (int anchors : random_report.config.anchor_counts) {
        const ReportCell* sdp_cell = find_cell(random_report, range, anchors, Algorithm::sdp);
        const ReportCell* mds_cell = find_cell(random_report, range, anchors, Algorithm::mds_map);
        if (sdp_cell == nullptr || mds_cell == nullptr ||
            sdp_cell->mean_error_over_r > mds_cell->mean_error_over_r) {
          pass = false;
          worst += " (R=" + fmt(range) + ", m=" + std::to_string(anchors) + ": sdp " +
                   fmt(sdp_cell->mean_error_over_r) + " vs mds " +
                   fmt(mds_cell->mean_error_over_r) + ")";
        }
      }
    }
    report("criterion 5a (sdp <= mds per random cell)", pass,
           pass ? "all 16 cells ordered" : "violations:" + worst);
  }

  // Criterion 5b: per algorithm and topology, error decreases from R=0.15 to R=0.25.
  {
    bool pass = true;
    std::string detail;
    const std::vector<std::pair<std::string, const Report*>> reports = {
        {"random", &random_report}, {"square", &square_report}, {"hex", &hex_report}};
    for (const auto& [name, rep] : reports) {
      for (Algorithm algorithm : {Algorithm::mds_map, Algorithm::sdp}) {
        const double lo = pooled_mean(*rep, 0.15, algorithm);
        const double hi = pooled_mean(*rep, 0.25, algorithm);
        if (!(hi < lo)) pass = false;
        detail += name + "/" + to_string(algorithm) + ": " + fmt(lo) + "R -> " + fmt(hi) + "R; ";
      }
    }
    report("criterion 5b (error decreases with connectivity)", pass, detail);
  }

  // Criterion 5c: square-grid errors <= random errors at matched range.
  {
    bool pass = true;
    std::string detail;
    for (double range : random_report.config.radio_ranges) {
      for (Algorithm algorithm : {Algorithm::mds_map, Algorithm::sdp}) {
        const double grid = pooled_mean(square_report, range, algorithm);
        const double rnd = pooled_mean(random_report, range, algorithm);
        if (grid > rnd) {
          pass = false;
          detail += "R=" + fmt(range) + "/" + to_string(algorithm) + ": grid " + fmt(grid) +
                    " > random " + fmt(rnd) + "; ";
        }
      }
    }
    report("criterion 5c (grid beats random at matched range)", pass,
           pass ? "all ranges and algorithms ordered" : detail);
  }

  // Criterion 5 supplement: replication study on the paper cell (R=0.15, 4
  // anchors): SDP beats MDS in at least 80% of replications.
  {
    int sdp_wins = 0;
    const int replications = 5;
    for (std::uint64_t seed = 1; seed <= replications; ++seed) {
      ExperimentConfig cell_config;
      cell_config.radio_ranges = {0.15};
      cell_config.anchor_counts = {4};
      cell_config.base_seed = seed;
      const Report rep = run_sweep(cell_config, jobs);
      const ReportCell* sdp_cell = find_cell(rep, 0.15, 4, Algorithm::sdp);
      const ReportCell* mds_cell = find_cell(rep, 0.15, 4, Algorithm::mds_map);
      if (sdp_cell && mds_cell && sdp_cell->mean_error_over_r <= mds_cell->mean_error_over_r) {
        ++sdp_wins;
      }
      std::fprintf(stderr, "replication %llu done\n", static_cast<unsigned long long>(seed));
    }
    report("criterion 5 replication (sdp <= mds across base seeds)",
           sdp_wins * 5 >= replications * 4,
           std::to_string(sdp_wins) + "/" + std::to_string(replications) + " replications");
  }

  // Criterion 6a: classical MDS exact recovery on a complete exact matrix.
  {
    Rng rng(2024);
    Eigen::MatrixX2d pts(10, 2);
    for (int i = 0; i < 10; ++i) {
      pts(i, 0) = rng.uniform(0.0, 1.0);
      pts(i, 1) = rng.uniform(0.0, 1.0);
    }
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(10, 10);
    for (int i = 0; i < 10; ++i) {
      for (int j = i + 1; j < 10; ++j) d(i, j) = d(j, i) = (pts.row(i) - pts.row(j)).norm();
    }
    const RelativeMap map = classical_mds(DistanceMatrix{d}, 2);
    std::vector<int> idx(10);
    std::vector<Point2> truth;
    for (int i = 0; i < 10; ++i) {
      idx[i] = i;
      truth.push_back({pts(i, 0), pts(i, 1)});
    }
    const Transform2 t = fit_anchors(map, idx, truth);
    const double max_err = (t.apply_rows(map.coords) - pts).rowwise().norm().maxCoeff();
    report("criterion 6a (mds exact recovery)", max_err < 1e-8,
           "max aligned error " + fmt(max_err) + " (< 1e-8)");
  }

  // Criterion 6b: SDP trilateration against the closed-form oracle.
  {
    Deployment dep;
    dep.side = 1.0;
    dep.positions = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}, {0.15, 0.2}};
    dep.anchor_indices = {0, 1, 2};
    const NetworkGraph g = build_graph(dep, 1.0, DistanceMode::true_range);
    std::vector<Point2> anchor_truth = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}};
    const LocalizationResult result = sdp_localize(g, anchor_truth, 1e-9, 20000);

    const Eigen::Vector2d truth(0.15, 0.2);
    const Eigen::Vector2d oracle = test::trilaterate_oracle(
        {0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}, (Eigen::Vector2d(0, 0) - truth).norm(),
        (Eigen::Vector2d(0.5, 0) - truth).norm(), (Eigen::Vector2d(0, 0.5) - truth).norm());
    const double err = (result.estimated.row(3).transpose() - oracle).norm();
    report("criterion 6b (sdp trilateration)", result.converged && err < 1e-6,
           "error vs closed form " + fmt(err) + " (< 1e-6)");
  }

  // Criterion 6c: shortest paths equal the Floyd-Warshall oracle exactly.
  {
    int instances = 0;
    long long mismatches = 0;
    for (std::uint64_t seed = 1; instances < 100 && seed < 10000; ++seed) {
      const Deployment dep = gen_random(20, 0.5, seed);
      const NetworkGraph g = build_graph(dep, 0.25, DistanceMode::true_range);
      if (!is_connected(g)) continue;
      ++instances;
      const DistanceMatrix lib = shortest_paths(g);
      const Eigen::MatrixXd oracle = test::floyd_warshall_reference(g);
      for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
          if (lib(i, j) != oracle(i, j)) ++mismatches;
        }
      }
    }
    report("criterion 6c (dijkstra vs floyd-warshall)", instances == 100 && mismatches == 0,
           std::to_string(instances) + " instances, " + std::to_string(mismatches) +
               " mismatching entries");
  }

  // Criterion 7: invariant spot checks at their quantified tolerances.
  {
    bool pass = true;
    std::string detail;

    // Double centering: zero row sums, exact symmetry.
    for (std::uint64_t seed = 1; seed <= 20 && pass; ++seed) {
      const Deployment dep = gen_random(12, 0.5, seed);
      Eigen::MatrixXd d(12, 12);
      d.setZero();
      for (int i = 0; i < 12; ++i) {
        for (int j = i + 1; j < 12; ++j) {
          d(i, j) = d(j, i) = distance(dep.positions[i], dep.positions[j]);
        }
      }
      const Eigen::MatrixXd b = double_center(d.cwiseProduct(d));
      if (b.rowwise().sum().cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, b.norm()) ||
          !(b.array() == b.transpose().array()).all()) {
        pass = false;
        detail += "double-centering invariant failed; ";
      }
    }

    // Procrustes round trip.
    {
      Rng rng(77);
      RelativeMap map;
      map.coords.resize(6, 2);
      for (int i = 0; i < 6; ++i) {
        map.coords(i, 0) = rng.uniform(0.0, 1.0);
        map.coords(i, 1) = rng.uniform(0.0, 1.0);
      }
      Eigen::Matrix2d rot;
      rot << 0, -1, 1, 0;
      std::vector<int> idx = {0, 1, 2, 3, 4, 5};
      std::vector<Point2> truth;
      for (int i = 0; i < 6; ++i) {
        const Eigen::Vector2d y = rot * map.coords.row(i).transpose() + Eigen::Vector2d(1, 2);
        truth.push_back({y(0), y(1)});
      }
      const Transform2 t = fit_anchors(map, idx, truth);
      const double err = ((t.apply_rows(map.coords)) -
                          [&] {
                            Eigen::MatrixX2d m(6, 2);
                            for (int i = 0; i < 6; ++i) m.row(i) << truth[i].x, truth[i].y;
                            return m;
                          }())
                             .cwiseAbs()
                             .maxCoeff();
      if (err > 1e-9) {
        pass = false;
        detail += "procrustes round trip error " + fmt(err) + "; ";
      }
    }

    // SDP solution invariants on a mid-size instance.
    {
      Deployment dep = select_anchors(gen_random(24, 0.5, 5), 4, 6);
      const NetworkGraph g = build_graph(dep, 0.25, DistanceMode::true_range);
      std::vector<Point2> anchor_truth;
      for (int idx : dep.anchor_indices) anchor_truth.push_back(dep.positions[idx]);
      const SdpProblem problem = build_problem(g, anchor_truth);
      const SdpSolution solution = solve_feasibility(problem, 1e-7, 20000);
      if (!(solution.Z.array() == solution.Z.transpose().array()).all()) {
        pass = false;
        detail += "Z not exactly symmetric; ";
      }
      if (solution.psd_residual > 1e-7) {
        pass = false;
        detail += "psd residual " + fmt(solution.psd_residual) + "; ";
      }
      if (solution.relaxation_gap < -1e-8) {
        pass = false;
        detail += "relaxation gap " + fmt(solution.relaxation_gap) + "; ";
      }
    }

    // Sweep determinism under parallel execution (includes sdp).
    {
      ExperimentConfig small;
      small.n = 24;
      small.radio_ranges = {0.25};
      small.anchor_counts = {4};
      small.rounds = 2;
      const Report serial = run_sweep(small, 1);
      const Report parallel = run_sweep(small, jobs);
      bool equal = serial.cells.size() == parallel.cells.size();
      for (std::size_t i = 0; equal && i < serial.cells.size(); ++i) {
        equal = serial.cells[i].mean_error_over_r == parallel.cells[i].mean_error_over_r &&
                serial.cells[i].stddev == parallel.cells[i].stddev &&
                serial.cells[i].mean_connectivity == parallel.cells[i].mean_connectivity;
      }
      if (!equal) {
        pass = false;
        detail += "parallel sweep diverged from serial; ";
      }
    }

    report("criterion 7 (invariant suites)", pass, pass ? "all invariants hold" : detail);
  }

  const std::string summary =
      failures == 0 ? "ACCEPTANCE: all criteria passed"
                    : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed";
  std::printf("%s\n", summary.c_str());
  return failures == 0 ? 0 : 1;
}
