#include "wsnloc/netgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "wsnloc/errors.hpp"

namespace wsnloc {

std::string to_string(DistanceMode mode) {
  return mode == DistanceMode::true_range ? "true_range" : "hop_count";
}

NetworkGraph::NetworkGraph(int n, double radio_range, DistanceMode mode, std::vector<Edge> edges,
                           std::vector<int> anchor_indices)
    : n_(n),
      radio_range_(radio_range),
      mode_(mode),
      edges_(std::move(edges)),
      anchor_indices_(std::move(anchor_indices)) {
  if (n_ < 0) throw std::invalid_argument("node count must be nonnegative");
  if (radio_range_ <= 0.0) throw std::invalid_argument("radio range must be positive");
  for (const Edge& e : edges_) {
    if (e.i < 0 || e.j >= n_ || e.i >= e.j) {
      throw std::invalid_argument("edge endpoints must satisfy 0 <= i < j < n");
    }
    if (!(e.d >= 0.0) || !std::isfinite(e.d)) {
      throw std::invalid_argument("edge distances must be finite and nonnegative");
    }
  }
  if (!std::is_sorted(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
      })) {
    throw std::invalid_argument("edge list must be sorted by (i, j)");
  }
  std::sort(anchor_indices_.begin(), anchor_indices_.end());
  for (std::size_t k = 0; k < anchor_indices_.size(); ++k) {
    if (anchor_indices_[k] < 0 || anchor_indices_[k] >= n_) {
      throw std::invalid_argument("anchor index out of range");
    }
    if (k > 0 && anchor_indices_[k] == anchor_indices_[k - 1]) {
      throw std::invalid_argument("anchor indices must be distinct");
    }
  }
}

bool NetworkGraph::is_anchor(int node) const {
  return std::binary_search(anchor_indices_.begin(), anchor_indices_.end(), node);
}

std::vector<Edge> NetworkGraph::unknown_anchor_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (is_anchor(e.i) != is_anchor(e.j)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> NetworkGraph::unknown_unknown_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (!is_anchor(e.i) && !is_anchor(e.j)) out.push_back(e);
  }
  return out;
}

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("distance matrix must be square");
  }
  const int n = static_cast<int>(entries_.rows());
  for (int i = 0; i < n; ++i) {
    if (entries_(i, i) != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (int j = i + 1; j < n; ++j) {
      const double d = entries_(i, j);
      if (!std::isfinite(d) || d < 0.0) {
        throw std::invalid_argument("distance matrix entries must be finite and nonnegative");
      }
      if (d != entries_(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
}

NetworkGraph build_graph(const Deployment& deployment, double radio_range, DistanceMode mode) {
  if (radio_range <= 0.0) throw std::invalid_argument("radio range must be positive");
  const int n = deployment.n();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(deployment.positions[i], deployment.positions[j]);
      if (d <= radio_range) {
        edges.push_back({i, j, mode == DistanceMode::true_range ? d : 1.0});
      }
    }
  }
  return NetworkGraph(n, radio_range, mode, std::move(edges), deployment.anchor_indices);
}

double avg_connectivity(const NetworkGraph& graph) {
  if (graph.n() < 1) throw std::invalid_argument("connectivity undefined on empty graph");
  return 2.0 * static_cast<double>(graph.edges().size()) / graph.n();
}

namespace {

struct Adjacency {
  std::vector<int> offsets;
  std::vector<std::pair<int, double>> neighbors;  // (node, weight)
};

Adjacency build_adjacency(const NetworkGraph& graph) {
  const int n = graph.n();
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : graph.edges()) {
    ++degree[e.i];
    ++degree[e.j];
  }
  Adjacency adj;
  adj.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) adj.offsets[i + 1] = adj.offsets[i] + degree[i];
  adj.neighbors.resize(graph.edges().size() * 2);
  std::vector<int> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const Edge& e : graph.edges()) {
    adj.neighbors[cursor[e.i]++] = {e.j, e.d};
    adj.neighbors[cursor[e.j]++] = {e.i, e.d};
  }
  return adj;
}

// Single-source Dijkstra with a lazy-deletion binary heap.
std::vector<double> dijkstra(const Adjacency& adj, int n, int source) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(n), kInf);
  dist[source] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (int k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const auto [v, w] = adj.neighbors[k];
      const double cand = d + w;
      if (cand < dist[v]) {
        dist[v] = cand;
        heap.push({cand, v});
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const NetworkGraph& graph) {
  const int n = graph.n();
  if (n <= 1) return true;
  const Adjacency adj = build_adjacency(graph);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const int v = adj.neighbors[k].first;
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

DistanceMatrix shortest_paths(const NetworkGraph& graph) {
  const int n = graph.n();
  if (n < 1) throw std::invalid_argument("shortest paths need at least one node");
  const Adjacency adj = build_adjacency(graph);

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int source = 0; source < n; ++source) {
    const std::vector<double> dist = dijkstra(adj, n, source);
    for (int t = 0; t < n; ++t) {
      if (!std::isfinite(dist[t])) throw GraphDisconnectedError(source, t);
    }
    // Row entries for t > source; the mirror copy keeps symmetry exact.
    for (int t = source + 1; t < n; ++t) {
      out(source, t) = dist[t];
      out(t, source) = dist[t];
    }
  }
  return DistanceMatrix(std::move(out));
}

}  // namespace wsnloc
