#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "wsnloc/deployment.hpp"

namespace wsnloc {

// true_range: edges carry the exact Euclidean distance.
// hop_count:  edges carry weight 1 (connectivity-only information).
enum class DistanceMode { true_range, hop_count };

std::string to_string(DistanceMode mode);

struct Edge {
  int i = 0;  // i < j
  int j = 0;
  double d = 0.0;
};

// Range-limited connectivity graph. Edge list is sorted by (i, j) with no
// duplicates or self-loops; immutable after construction.
class NetworkGraph {
 public:
  NetworkGraph(int n, double radio_range, DistanceMode mode, std::vector<Edge> edges,
               std::vector<int> anchor_indices);

  int n() const { return n_; }
  double radio_range() const { return radio_range_; }
  DistanceMode mode() const { return mode_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& anchor_indices() const { return anchor_indices_; }
  int anchor_count() const { return static_cast<int>(anchor_indices_.size()); }
  bool is_anchor(int node) const;

  // Edge partition used by the SDP constraints: exactly one endpoint is an
  // anchor / both endpoints are unknown. Anchor-anchor edges belong to
  // neither set.
  std::vector<Edge> unknown_anchor_edges() const;
  std::vector<Edge> unknown_unknown_edges() const;

 private:
  int n_;
  double radio_range_;
  DistanceMode mode_;
  std::vector<Edge> edges_;
  std::vector<int> anchor_indices_;
};

// Dense symmetric all-pairs distance estimate: zero diagonal, exact
// symmetry, finite nonnegative entries.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Eigen::MatrixXd entries);

  int n() const { return static_cast<int>(entries_.rows()); }
  double operator()(int i, int j) const { return entries_(i, j); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

// Edge (i, j) present iff the true inter-node distance is <= radio_range
// (boundary inclusive).
NetworkGraph build_graph(const Deployment& deployment, double radio_range, DistanceMode mode);

// Average number of one-hop neighbors: 2 |E| / n.
double avg_connectivity(const NetworkGraph& graph);

bool is_connected(const NetworkGraph& graph);

// All-pairs shortest paths by repeated single-source Dijkstra runs over a
// binary heap. Entry (i, j) with i < j is the accumulated weight of the
// path found from source i; the lower triangle mirrors it exactly.
DistanceMatrix shortest_paths(const NetworkGraph& graph);

}  // namespace wsnloc
