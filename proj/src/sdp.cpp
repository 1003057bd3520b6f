#include "wsnloc/sdp.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "wsnloc/errors.hpp"

namespace wsnloc {

std::string to_string(ConstraintTag tag) {
  switch (tag) {
    case ConstraintTag::identity_block: return "identity_block";
    case ConstraintTag::anchor_edge: return "anchor_edge";
    case ConstraintTag::unknown_edge: return "unknown_edge";
  }
  return "identity_block";
}

namespace {

// Upper triangle of the outer product v v^T restricted to the nonzero
// pattern of v; exact zeros are dropped.
std::vector<MatEntry> outer_product_entries(const std::vector<std::pair<int, double>>& v) {
  std::vector<MatEntry> entries;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a; b < v.size(); ++b) {
      const double value = v[a].second * v[b].second;
      if (value != 0.0) entries.push_back({v[a].first, v[b].first, value});
    }
  }
  return entries;
}

}  // namespace

SdpProblem build_problem(const NetworkGraph& graph, const std::vector<Point2>& anchor_truth) {
  if (graph.mode() != DistanceMode::true_range) {
    throw UnsupportedModeError("sdp requires true_range distances; hop counts are not distances");
  }
  const int n = graph.n();
  const int m = graph.anchor_count();
  if (anchor_truth.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("anchor_truth size must match the graph anchor set");
  }
  const int n_unknown = n - m;
  if (n_unknown < 1) throw std::invalid_argument("sdp needs at least one unknown node");

  SdpProblem problem;
  problem.dim = 2;
  problem.n_unknown = n_unknown;
  problem.z_size = 2 + n_unknown;
  problem.anchor_indices = graph.anchor_indices();
  problem.anchor_positions.resize(m, 2);
  for (int k = 0; k < m; ++k) {
    problem.anchor_positions(k, 0) = anchor_truth[k].x;
    problem.anchor_positions(k, 1) = anchor_truth[k].y;
  }

  // Renumber unknowns 0..n_unknown-1 preserving original order.
  std::vector<int> unknown_of(static_cast<std::size_t>(n), -1);
  std::vector<int> anchor_slot(static_cast<std::size_t>(n), -1);
  problem.unknown_to_original.reserve(static_cast<std::size_t>(n_unknown));
  for (int node = 0, next = 0; node < n; ++node) {
    if (!graph.is_anchor(node)) {
      unknown_of[node] = next++;
      problem.unknown_to_original.push_back(node);
    }
  }
  for (int k = 0; k < m; ++k) anchor_slot[problem.anchor_indices[k]] = k;

  // Z_11 = 1, Z_22 = 1, Z_12 = 0.
  SdpConstraint c11{ConstraintTag::identity_block, -1, -1, {{0, 0, 1.0}}, 1.0};
  SdpConstraint c22{ConstraintTag::identity_block, -1, -1, {{1, 1, 1.0}}, 1.0};
  SdpConstraint c12{ConstraintTag::identity_block, -1, -1, {{0, 1, 0.5}}, 0.0};
  problem.constraints.push_back(std::move(c11));
  problem.constraints.push_back(std::move(c22));
  problem.constraints.push_back(std::move(c12));

  for (const Edge& e : graph.unknown_anchor_edges()) {
    const bool i_anchor = graph.is_anchor(e.i);
    const int anchor = i_anchor ? e.i : e.j;
    const int unknown = i_anchor ? e.j : e.i;
    const int slot = anchor_slot[anchor];
    // Constraint vector (a_k; e_j): anchor coordinates in the identity
    // block, -1 on the unknown's column, encoding |a_k - x_j|^2 = d^2.
    std::vector<std::pair<int, double>> v;
    if (problem.anchor_positions(slot, 0) != 0.0) v.push_back({0, problem.anchor_positions(slot, 0)});
    if (problem.anchor_positions(slot, 1) != 0.0) v.push_back({1, problem.anchor_positions(slot, 1)});
    v.push_back({2 + unknown_of[unknown], -1.0});
    SdpConstraint c;
    c.tag = ConstraintTag::anchor_edge;
    c.node_i = anchor;
    c.node_j = unknown;
    c.entries = outer_product_entries(v);
    c.rhs = e.d * e.d;
    problem.constraints.push_back(std::move(c));
  }

  for (const Edge& e : graph.unknown_unknown_edges()) {
    // Constraint vector (0; e_ij) with +1 / -1 on the two unknown columns.
    const int ui = unknown_of[e.i];
    const int uj = unknown_of[e.j];
    std::vector<std::pair<int, double>> v = {{2 + ui, 1.0}, {2 + uj, -1.0}};
    SdpConstraint c;
    c.tag = ConstraintTag::unknown_edge;
    c.node_i = e.i;
    c.node_j = e.j;
    c.entries = outer_product_entries(v);
    c.rhs = e.d * e.d;
    problem.constraints.push_back(std::move(c));
  }
  return problem;
}

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// Packed upper-triangle (svec) coordinates: the matrix inner product
// A . B = tr(AB) equals the dot product of the packed vectors because
// off-diagonal entries are weighted by sqrt(2).
int svec_size(int z) { return z * (z + 1) / 2; }

int svec_index(int row, int col) { return col * (col + 1) / 2 + row; }  // row <= col

Eigen::VectorXd svec(const Eigen::MatrixXd& m) {
  const int z = static_cast<int>(m.rows());
  Eigen::VectorXd v(svec_size(z));
  for (int col = 0; col < z; ++col) {
    for (int row = 0; row <= col; ++row) {
      v(svec_index(row, col)) = row == col ? m(row, col) : kSqrt2 * m(row, col);
    }
  }
  return v;
}

Eigen::MatrixXd unsvec(const Eigen::VectorXd& v, int z) {
  Eigen::MatrixXd m(z, z);
  for (int col = 0; col < z; ++col) {
    for (int row = 0; row <= col; ++row) {
      const double value = v(svec_index(row, col));
      if (row == col) {
        m(row, col) = value;
      } else {
        m(row, col) = value / kSqrt2;
        m(col, row) = m(row, col);
      }
    }
  }
  return m;
}

Eigen::MatrixXd starting_point(const SdpProblem& problem) {
  const int z = problem.z_size;
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  if (problem.anchor_positions.rows() > 0) {
    centroid = problem.anchor_positions.colwise().mean().transpose();
  }
  // Z0 = [[I, X0], [X0^T, X0^T X0]] with every unknown at the anchor
  // centroid: a PSD point whose projection onto the feasible set keeps
  // under-constrained nodes near the centroid.
  Eigen::MatrixXd z0 = Eigen::MatrixXd::Zero(z, z);
  z0(0, 0) = 1.0;
  z0(1, 1) = 1.0;
  const double gram = centroid.squaredNorm();
  for (int u = 0; u < problem.n_unknown; ++u) {
    z0(0, 2 + u) = centroid(0);
    z0(2 + u, 0) = centroid(0);
    z0(1, 2 + u) = centroid(1);
    z0(2 + u, 1) = centroid(1);
    for (int w = 0; w < problem.n_unknown; ++w) z0(2 + u, 2 + w) = gram;
  }
  return z0;
}

}  // namespace

SdpSolution solve_feasibility(const SdpProblem& problem, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const int z = problem.z_size;
  const int nvec = svec_size(z);
  const int n_constraints = static_cast<int>(problem.constraints.size());

  // Constraint operator as sparse rows over svec coordinates.
  Eigen::SparseMatrix<double, Eigen::RowMajor> a(n_constraints, nvec);
  {
    std::vector<Eigen::Triplet<double>> triplets;
    for (int c = 0; c < n_constraints; ++c) {
      for (const MatEntry& entry : problem.constraints[c].entries) {
        const double coeff =
            entry.row == entry.col ? entry.value : kSqrt2 * entry.value;
        triplets.emplace_back(c, svec_index(entry.row, entry.col), coeff);
      }
    }
    a.setFromTriplets(triplets.begin(), triplets.end());
  }
  Eigen::VectorXd b(n_constraints);
  for (int c = 0; c < n_constraints; ++c) b(c) = problem.constraints[c].rhs;

  // Gram matrix of the constraint rows, factored once. The tiny ridge keeps
  // the factorization valid when rows are linearly dependent; the solve then
  // approximates the least-norm multiplier.
  Eigen::SparseMatrix<double> gram = (a * Eigen::SparseMatrix<double>(a.transpose())).pruned();
  double max_diag = 0.0;
  for (int c = 0; c < n_constraints; ++c) max_diag = std::max(max_diag, gram.coeff(c, c));
  const double ridge = 1e-12 * std::max(max_diag, 1.0);
  {
    Eigen::SparseMatrix<double> identity(n_constraints, n_constraints);
    identity.setIdentity();
    gram += ridge * identity;
  }
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> gram_solver(gram);
  if (gram_solver.info() != Eigen::Success) {
    throw std::runtime_error("constraint Gram factorization failed");
  }

  // Douglas-Rachford splitting over (affine set, PSD cone): each pass
  // projects the driver onto the affine set, projects the reflected point
  // onto the cone, and folds the difference back into the driver. The
  // cone-side iterate y is PSD by construction, so the constraint residual
  // on y is the convergence measure.
  Eigen::VectorXd driver = svec(starting_point(problem));
  Eigen::VectorXd y = driver;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;

  double constraint_residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  int iterations = 0;
  while (iterations < max_iter) {
    ++iterations;
    const Eigen::VectorXd x = driver - a.transpose() * gram_solver.solve(a * driver - b);
    eig.compute(unsvec(2.0 * x - driver, z));
    if (eig.info() != Eigen::Success) throw std::runtime_error("psd projection failed");
    const Eigen::VectorXd clamped = eig.eigenvalues().cwiseMax(0.0);
    y = svec(eig.eigenvectors() * clamped.asDiagonal() * eig.eigenvectors().transpose());
    driver += y - x;

    constraint_residual = (a * y - b).lpNorm<Eigen::Infinity>();
    if (constraint_residual <= tol) {
      converged = true;
      break;
    }
  }

  SdpSolution solution;
  solution.Z = unsvec(y, z);
  solution.iterations = iterations;
  solution.constraint_residual = constraint_residual;
  eig.compute(solution.Z);
  solution.psd_residual = std::max(0.0, -eig.eigenvalues().minCoeff());
  solution.converged = converged && solution.psd_residual <= tol;
  solution.X = solution.Z.block(0, 2, 2, problem.n_unknown);
  solution.Y = solution.Z.block(2, 2, problem.n_unknown, problem.n_unknown);
  solution.relaxation_gap = (solution.Y - solution.X.transpose() * solution.X).trace();
  return solution;
}

LocalizationResult extract_positions(const SdpSolution& solution, const SdpProblem& problem) {
  const int n = problem.n_unknown + static_cast<int>(problem.anchor_indices.size());
  LocalizationResult result;
  result.algorithm = Algorithm::sdp;
  result.converged = solution.converged;
  result.estimated.resize(n, 2);
  for (int u = 0; u < problem.n_unknown; ++u) {
    result.estimated.row(problem.unknown_to_original[u]) = solution.X.col(u).transpose();
  }
  for (std::size_t k = 0; k < problem.anchor_indices.size(); ++k) {
    result.estimated.row(problem.anchor_indices[k]) = problem.anchor_positions.row(k);
  }
  result.diagnostics.constraint_residual = solution.constraint_residual;
  result.diagnostics.psd_residual = solution.psd_residual;
  result.diagnostics.relaxation_gap = solution.relaxation_gap;
  result.diagnostics.iterations = solution.iterations;
  return result;
}

LocalizationResult sdp_localize(const NetworkGraph& graph, const std::vector<Point2>& anchor_truth,
                                double tol, int max_iter) {
  const SdpProblem problem = build_problem(graph, anchor_truth);
  const SdpSolution solution = solve_feasibility(problem, tol, max_iter);
  return extract_positions(solution, problem);
}

std::string dump_problem(const SdpProblem& problem) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof(line), "z_size %d n_unknown %d constraints %zu\n", problem.z_size,
                problem.n_unknown, problem.constraints.size());
  out += line;
  for (std::size_t c = 0; c < problem.constraints.size(); ++c) {
    const SdpConstraint& constraint = problem.constraints[c];
    std::snprintf(line, sizeof(line), "constraint %zu %s i=%d j=%d rhs=%.17g\n", c,
                  to_string(constraint.tag).c_str(), constraint.node_i, constraint.node_j,
                  constraint.rhs);
    out += line;
    for (const MatEntry& entry : constraint.entries) {
      std::snprintf(line, sizeof(line), "  %d %d %.17g\n", entry.row, entry.col, entry.value);
      out += line;
    }
  }
  return out;
}

}  // namespace wsnloc
