#pragma once

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wsnloc/netgraph.hpp"

namespace wsnloc::test {

// Independent all-pairs oracle: Floyd-Warshall with path reconstruction.
// Each entry is evaluated by re-summing edge weights along the reconstructed
// path starting from the smaller endpoint, the same accumulation the
// library's per-source Dijkstra produces, so agreement is checked exactly.
inline Eigen::MatrixXd floyd_warshall_reference(const NetworkGraph& graph) {
  const int n = graph.n();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd direct = Eigen::MatrixXd::Constant(n, n, kInf);
  Eigen::MatrixXd dist = Eigen::MatrixXd::Constant(n, n, kInf);
  Eigen::MatrixXi next = Eigen::MatrixXi::Constant(n, n, -1);
  for (int i = 0; i < n; ++i) {
    direct(i, i) = 0.0;
    dist(i, i) = 0.0;
    next(i, i) = i;
  }
  for (const Edge& e : graph.edges()) {
    direct(e.i, e.j) = direct(e.j, e.i) = e.d;
    dist(e.i, e.j) = dist(e.j, e.i) = e.d;
    next(e.i, e.j) = e.j;
    next(e.j, e.i) = e.i;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (dist(i, k) == kInf) continue;
      for (int j = 0; j < n; ++j) {
        const double cand = dist(i, k) + dist(k, j);
        if (cand < dist(i, j)) {
          dist(i, j) = cand;
          next(i, j) = next(i, k);
        }
      }
    }
  }

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (next(i, j) < 0) throw std::runtime_error("oracle: graph is disconnected");
      double sum = 0.0;
      int cur = i;
      while (cur != j) {
        const int step = next(cur, j);
        sum += direct(cur, step);
        cur = step;
      }
      out(i, j) = sum;
      out(j, i) = sum;
    }
  }
  return out;
}

// Closed-form trilateration from three circle equations: subtracting the
// first equation from the others gives a 2x2 linear system in the position.
inline Eigen::Vector2d trilaterate_oracle(const Eigen::Vector2d& a1, const Eigen::Vector2d& a2,
                                          const Eigen::Vector2d& a3, double d1, double d2,
                                          double d3) {
  Eigen::Matrix2d m;
  m.row(0) = 2.0 * (a2 - a1).transpose();
  m.row(1) = 2.0 * (a3 - a1).transpose();
  Eigen::Vector2d rhs;
  rhs(0) = d1 * d1 - d2 * d2 + a2.squaredNorm() - a1.squaredNorm();
  rhs(1) = d1 * d1 - d3 * d3 + a3.squaredNorm() - a1.squaredNorm();
  return m.colPivHouseholderQr().solve(rhs);
}

}  // namespace wsnloc::test
