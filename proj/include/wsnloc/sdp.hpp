#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "wsnloc/geometry.hpp"
#include "wsnloc/localization.hpp"
#include "wsnloc/netgraph.hpp"

namespace wsnloc {

inline constexpr double kDefaultSdpTol = 1e-7;
inline constexpr int kDefaultSdpMaxIter = 20000;

enum class ConstraintTag { identity_block, anchor_edge, unknown_edge };

std::string to_string(ConstraintTag tag);

struct MatEntry {
  int row = 0;  // row <= col, upper triangle of a symmetric matrix
  int col = 0;
  double value = 0.0;
};

// One linear constraint A . Z = rhs with A . B = trace(AB).
struct SdpConstraint {
  ConstraintTag tag = ConstraintTag::identity_block;
  int node_i = -1;  // original node index (the anchor for anchor_edge)
  int node_j = -1;  // original node index (unknown endpoint)
  std::vector<MatEntry> entries;
  double rhs = 0.0;
};

// Feasibility SDP on the block matrix Z = [[I_2, X], [X^T, Y]] (z_size =
// 2 + n_unknown): three identity-block constraints, one rank-one outer
// product constraint per edge with at least one unknown endpoint.
struct SdpProblem {
  int dim = 2;
  int n_unknown = 0;
  int z_size = 0;
  std::vector<SdpConstraint> constraints;
  std::vector<int> unknown_to_original;  // unknown column -> original node index
  std::vector<int> anchor_indices;       // sorted original node indices
  Eigen::MatrixX2d anchor_positions;     // aligned with anchor_indices
};

struct SdpSolution {
  Eigen::MatrixXd Z;          // z_size x z_size, exactly symmetric
  Eigen::Matrix2Xd X;         // 2 x n_unknown extracted positions
  Eigen::MatrixXd Y;          // n_unknown x n_unknown Gram block
  double constraint_residual = 0.0;  // max_i |A_i . Z - b_i|
  double psd_residual = 0.0;         // max(0, -lambda_min(Z))
  double relaxation_gap = 0.0;       // trace(Y - X^T X)
  int iterations = 0;
  bool converged = false;
};

// Assemble the feasibility problem from the graph. Unknown nodes are
// renumbered 0..n_unknown-1 preserving original order; anchor-anchor edges
// are excluded. Requires true_range mode and at least one unknown node.
SdpProblem build_problem(const NetworkGraph& graph, const std::vector<Point2>& anchor_truth);

// Projection splitting between the constraint affine set and the PSD cone
// (Douglas-Rachford iteration): the affine step solves a least-squares
// system over the precomputed constraint Gram matrix, the cone step clamps
// negative eigenvalues of the reflected iterate, and the accumulated
// correction drives both projections to the intersection when it is
// nonempty. Non-convergence at max_iter is reported through the converged
// flag, not an error.
SdpSolution solve_feasibility(const SdpProblem& problem, double tol = kDefaultSdpTol,
                              int max_iter = kDefaultSdpMaxIter);

// Read the position estimates out of the X block and map them back to the
// original node indices; anchors carry their known positions.
LocalizationResult extract_positions(const SdpSolution& solution, const SdpProblem& problem);

LocalizationResult sdp_localize(const NetworkGraph& graph, const std::vector<Point2>& anchor_truth,
                                double tol = kDefaultSdpTol, int max_iter = kDefaultSdpMaxIter);

// Text dump of the constraint system (tag, rhs, nonzero triples per
// constraint) for cross-checking against external SDP tools.
std::string dump_problem(const SdpProblem& problem);

}  // namespace wsnloc
