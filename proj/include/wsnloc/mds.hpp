#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wsnloc/geometry.hpp"
#include "wsnloc/localization.hpp"
#include "wsnloc/netgraph.hpp"

namespace wsnloc {

// Output of classical MDS: node coordinates in an arbitrary centered frame,
// correct up to rotation, reflection and (with hop distances) scale.
struct RelativeMap {
  Eigen::MatrixXd coords;            // n x dim, column means zero
  Eigen::VectorXd eigenvalues_used;  // top-dim eigenvalues, unclamped
  Eigen::VectorXd eigenvalues_all;   // full spectrum, descending
};

// Similarity transform p -> scale * orthogonal * p + translation, with
// orthogonal in O(2) (reflection allowed).
struct Transform2 {
  double scale = 1.0;
  Eigen::Matrix2d orthogonal = Eigen::Matrix2d::Identity();
  Eigen::Vector2d translation = Eigen::Vector2d::Zero();

  Eigen::Vector2d apply(const Eigen::Vector2d& p) const {
    return scale * (orthogonal * p) + translation;
  }
  Eigen::MatrixX2d apply_rows(const Eigen::MatrixXd& points) const;
};

// B = -1/2 (p2_ij - rowmean_i - rowmean_j + grandmean), computed on the
// matrix of squared proximities. Exactly symmetric; every row sums to zero.
Eigen::MatrixXd double_center(const Eigen::MatrixXd& proximity_squared);

// Classical MDS: eigendecompose the double-centered squared distances and
// keep the top-dim eigenpairs, clamping negative retained eigenvalues to
// zero when forming coordinates (the full spectrum is reported unclamped).
RelativeMap classical_mds(const DistanceMatrix& distances, int dim = 2);

// Least-squares similarity transform mapping the relative coordinates of the
// anchors onto their true positions. Closed form via centroid removal and
// SVD of the 2x2 cross-covariance; reflection is representable.
Transform2 fit_anchors(const RelativeMap& relative, const std::vector<int>& anchor_indices,
                       const std::vector<Point2>& anchor_truth);

// Three-step pipeline: all-pairs shortest paths, classical MDS in 2-D,
// anchor-based transform of the relative map to the absolute frame.
LocalizationResult mds_map(const NetworkGraph& graph, const std::vector<Point2>& anchor_truth);

}  // namespace wsnloc
