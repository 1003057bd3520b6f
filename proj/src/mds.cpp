#include "wsnloc/mds.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsnloc/errors.hpp"

namespace wsnloc {

Eigen::MatrixX2d Transform2::apply_rows(const Eigen::MatrixXd& points) const {
  Eigen::MatrixX2d out = scale * (points * orthogonal.transpose());
  out.rowwise() += translation.transpose();
  return out;
}

Eigen::MatrixXd double_center(const Eigen::MatrixXd& proximity_squared) {
  if (proximity_squared.rows() != proximity_squared.cols()) {
    throw std::invalid_argument("double_center input must be square");
  }
  const int n = static_cast<int>(proximity_squared.rows());
  const Eigen::VectorXd row_mean = proximity_squared.rowwise().mean();
  const double grand_mean = proximity_squared.mean();

  Eigen::MatrixXd b(n, n);
  // Filled per unordered pair so symmetry holds bit-exactly.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v =
          -0.5 * (proximity_squared(i, j) - row_mean(i) - row_mean(j) + grand_mean);
      b(i, j) = v;
      b(j, i) = v;
    }
  }
  return b;
}

RelativeMap classical_mds(const DistanceMatrix& distances, int dim) {
  if (dim < 1 || dim > 2) throw std::invalid_argument("dim must be 1 or 2");
  const int n = distances.n();
  const Eigen::MatrixXd squared = distances.entries().cwiseProduct(distances.entries());
  const Eigen::MatrixXd b = double_center(squared);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of the centered matrix failed");
  }

  RelativeMap map;
  map.eigenvalues_all = solver.eigenvalues().reverse();
  map.eigenvalues_used = map.eigenvalues_all.head(std::min(dim, n));
  if (map.eigenvalues_used.size() < dim) {
    // dim can exceed n only for n < 2; pad so callers see a fixed width.
    Eigen::VectorXd padded = Eigen::VectorXd::Zero(dim);
    padded.head(map.eigenvalues_used.size()) = map.eigenvalues_used;
    map.eigenvalues_used = padded;
  }

  map.coords = Eigen::MatrixXd::Zero(n, dim);
  for (int k = 0; k < dim && k < n; ++k) {
    const double lambda = std::max(map.eigenvalues_all(k), 0.0);
    map.coords.col(k) = solver.eigenvectors().col(n - 1 - k) * std::sqrt(lambda);
  }
  return map;
}

Transform2 fit_anchors(const RelativeMap& relative, const std::vector<int>& anchor_indices,
                       const std::vector<Point2>& anchor_truth) {
  const int m = static_cast<int>(anchor_indices.size());
  if (anchor_truth.size() != anchor_indices.size()) {
    throw std::invalid_argument("anchor_truth size must match anchor_indices size");
  }
  if (m < 3) throw InsufficientAnchorsError(m);
  if (relative.coords.cols() != 2) {
    throw std::invalid_argument("anchor fit requires 2-D relative coordinates");
  }

  Eigen::MatrixX2d source(m, 2);
  Eigen::MatrixX2d target(m, 2);
  for (int k = 0; k < m; ++k) {
    const int idx = anchor_indices[k];
    if (idx < 0 || idx >= relative.coords.rows()) {
      throw std::invalid_argument("anchor index out of range");
    }
    source.row(k) = relative.coords.row(idx);
    target.row(k) << anchor_truth[k].x, anchor_truth[k].y;
  }

  const Eigen::RowVector2d source_mean = source.colwise().mean();
  const Eigen::RowVector2d target_mean = target.colwise().mean();
  const Eigen::MatrixX2d source_c = source.rowwise() - source_mean;
  const Eigen::MatrixX2d target_c = target.rowwise() - target_mean;

  const auto collinear = [](const Eigen::MatrixX2d& pts) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(pts);
    const Eigen::VectorXd s = svd.singularValues();
    return s(0) == 0.0 || s(1) <= 1e-12 * s(0);
  };
  if (collinear(source_c) && collinear(target_c)) {
    throw DegenerateAnchorsError(
        "anchors are collinear in both frames; the reflection is undetermined");
  }

  const double source_var = source_c.squaredNorm();
  if (source_var == 0.0) {
    throw DegenerateAnchorsError("anchors coincide in the relative frame; scale is undetermined");
  }

  // Orthogonal alignment over O(2): the optimal Q is U V^T of the 2x2
  // cross-covariance with no determinant correction, so reflections are
  // picked when they fit better.
  const Eigen::Matrix2d cross = target_c.transpose() * source_c;
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2d q = svd.matrixU() * svd.matrixV().transpose();
  const double scale = svd.singularValues().sum() / source_var;
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DegenerateAnchorsError("anchor geometry admits no positive alignment scale");
  }

  Transform2 t;
  t.scale = scale;
  t.orthogonal = q;
  t.translation = target_mean.transpose() - scale * (q * source_mean.transpose());
  return t;
}

LocalizationResult mds_map(const NetworkGraph& graph, const std::vector<Point2>& anchor_truth) {
  const DistanceMatrix dist = shortest_paths(graph);
  const RelativeMap relative = classical_mds(dist, 2);
  const Transform2 transform = fit_anchors(relative, graph.anchor_indices(), anchor_truth);

  LocalizationResult result;
  result.algorithm = Algorithm::mds_map;
  result.estimated = transform.apply_rows(relative.coords);
  result.converged = true;
  result.diagnostics.eigenvalues.assign(relative.eigenvalues_all.data(),
                                        relative.eigenvalues_all.data() +
                                            relative.eigenvalues_all.size());
  return result;
}

}  // namespace wsnloc
