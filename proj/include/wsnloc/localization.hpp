#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace wsnloc {

enum class Algorithm { mds_map, sdp };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

struct Diagnostics {
  // mds_map: full spectrum of the double-centered matrix, descending.
  std::vector<double> eigenvalues;
  // sdp solver outputs.
  double constraint_residual = 0.0;
  double psd_residual = 0.0;
  double relaxation_gap = 0.0;
  int iterations = 0;
};

// Estimated positions in the absolute frame. Anchor rows are estimates too
// for mds_map (anchors constrain the transform, they are not pinned); the
// sdp result carries the known anchor positions verbatim.
struct LocalizationResult {
  Eigen::MatrixX2d estimated;
  Algorithm algorithm = Algorithm::mds_map;
  bool converged = true;
  Diagnostics diagnostics;
};

}  // namespace wsnloc
