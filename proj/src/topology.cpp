#include "wsnloc/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wsnloc/rng.hpp"

namespace wsnloc {

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::random: return "random";
    case TopologyKind::square_grid: return "square_grid";
    case TopologyKind::hex_grid: return "hex_grid";
  }
  return "random";
}

TopologyKind topology_from_string(const std::string& name) {
  if (name == "random") return TopologyKind::random;
  if (name == "square_grid" || name == "square-grid") return TopologyKind::square_grid;
  if (name == "hex_grid" || name == "hex-grid") return TopologyKind::hex_grid;
  throw std::invalid_argument("unknown topology kind: " + name);
}

bool Deployment::is_anchor(int node) const {
  return std::binary_search(anchor_indices.begin(), anchor_indices.end(), node);
}

Deployment gen_random(int n, double r, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("node count must be nonnegative");
  if (r <= 0.0) throw std::invalid_argument("arena side must be positive");
  Deployment dep;
  dep.side = r;
  dep.kind = TopologyKind::random;
  dep.seed = seed;
  dep.positions.reserve(static_cast<std::size_t>(n));
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, r);
    const double y = rng.uniform(0.0, r);
    dep.positions.push_back({x, y});
  }
  return dep;
}

double square_grid_spacing(int side_count, double r) {
  if (side_count < 1) throw std::invalid_argument("side_count must be >= 1");
  if (r <= 0.0) throw std::invalid_argument("arena side must be positive");
  return r / side_count;
}

Deployment gen_square_grid(int side_count, double r, GridNoise noise, std::uint64_t seed) {
  if (noise.std < 0.0) throw std::invalid_argument("noise std must be nonnegative");
  const double s = square_grid_spacing(side_count, r);
  Deployment dep;
  dep.side = r;
  dep.kind = TopologyKind::square_grid;
  dep.seed = seed;
  dep.positions.reserve(static_cast<std::size_t>(side_count) * side_count);
  Rng rng(seed);
  for (int row = 0; row < side_count; ++row) {
    for (int col = 0; col < side_count; ++col) {
      double x = (col + 0.5) * s;
      double y = (row + 0.5) * s;
      if (noise.std > 0.0) {
        x += rng.normal(0.0, noise.std);
        y += rng.normal(0.0, noise.std);
      }
      dep.positions.push_back({x, y});
    }
  }
  return dep;
}

namespace {

constexpr double kHexRowFactor = 0.86602540378443864676;  // sqrt(3)/2

struct RawHex {
  double x = 0.0;
  double y = 0.0;
};

RawHex raw_hex_point(int row, int col) {
  return {col + (row % 2 == 1 ? 0.5 : 0.0), row * kHexRowFactor};
}

// Uniform scale fitting the raw lattice bounding box inside [0, r]^2.
double hex_scale(int rows, int cols, double r) {
  double max_x = 0.0;
  double max_y = (rows - 1) * kHexRowFactor;
  for (int row = 0; row < rows; ++row) {
    max_x = std::max(max_x, raw_hex_point(row, cols - 1).x);
  }
  double scale = std::numeric_limits<double>::infinity();
  if (max_x > 0.0) scale = std::min(scale, r / max_x);
  if (max_y > 0.0) scale = std::min(scale, r / max_y);
  if (!std::isfinite(scale)) scale = 1.0;  // single node
  return scale;
}

}  // namespace

double hex_grid_spacing(int rows, int cols, double r) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("hex grid needs rows >= 1 and cols >= 1");
  if (r <= 0.0) throw std::invalid_argument("arena side must be positive");
  return hex_scale(rows, cols, r);  // raw column spacing is 1
}

Deployment gen_hex_grid(int rows, int cols, double r, GridNoise noise, std::uint64_t seed) {
  if (noise.std < 0.0) throw std::invalid_argument("noise std must be nonnegative");
  const double scale = hex_grid_spacing(rows, cols, r);

  double max_x = 0.0;
  const double max_y = (rows - 1) * kHexRowFactor;
  for (int row = 0; row < rows; ++row) {
    max_x = std::max(max_x, raw_hex_point(row, cols - 1).x);
  }
  const double off_x = (r - scale * max_x) / 2.0;
  const double off_y = (r - scale * max_y) / 2.0;

  Deployment dep;
  dep.side = r;
  dep.kind = TopologyKind::hex_grid;
  dep.seed = seed;
  dep.positions.reserve(static_cast<std::size_t>(rows) * cols);
  Rng rng(seed);
  for (int row = 0; row < rows; ++row) {
    for (int col = 0; col < cols; ++col) {
      const RawHex raw = raw_hex_point(row, col);
      double x = scale * raw.x + off_x;
      double y = scale * raw.y + off_y;
      if (noise.std > 0.0) {
        x += rng.normal(0.0, noise.std);
        y += rng.normal(0.0, noise.std);
      }
      dep.positions.push_back({x, y});
    }
  }
  return dep;
}

Deployment select_anchors(Deployment deployment, int m, std::uint64_t seed) {
  const int n = deployment.n();
  if (m < 0 || m > n) {
    throw std::invalid_argument("anchor count " + std::to_string(m) +
                                " out of range for " + std::to_string(n) + " nodes");
  }
  std::vector<int> indices(static_cast<std::size_t>(n));
  std::iota(indices.begin(), indices.end(), 0);
  Rng rng(seed);
  // Partial Fisher-Yates: first m entries are a uniform draw without replacement.
  for (int k = 0; k < m; ++k) {
    const int swap_with = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - k)));
    std::swap(indices[k], indices[swap_with]);
  }
  deployment.anchor_indices.assign(indices.begin(), indices.begin() + m);
  std::sort(deployment.anchor_indices.begin(), deployment.anchor_indices.end());
  return deployment;
}

}  // namespace wsnloc
