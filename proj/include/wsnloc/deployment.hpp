#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsnloc/geometry.hpp"

namespace wsnloc {

enum class TopologyKind { random, square_grid, hex_grid };

std::string to_string(TopologyKind kind);
TopologyKind topology_from_string(const std::string& name);

// Per-axis Gaussian placement error applied to grid lattices.
struct GridNoise {
  double std = 0.0;
};

// Ground-truth node positions plus the anchor subset. Immutable by
// convention once generated; safe to share read-only across threads.
struct Deployment {
  std::vector<Point2> positions;
  std::vector<int> anchor_indices;  // sorted, distinct
  double side = 0.5;
  TopologyKind kind = TopologyKind::random;
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(positions.size()); }
  bool is_anchor(int node) const;
};

}  // namespace wsnloc
