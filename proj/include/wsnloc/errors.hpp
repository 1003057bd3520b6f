#pragma once

#include <stdexcept>
#include <string>

namespace wsnloc {

// No path exists between node_a and node_b.
class GraphDisconnectedError : public std::runtime_error {
 public:
  GraphDisconnectedError(int a, int b)
      : std::runtime_error("graph is disconnected: no path between nodes " +
                           std::to_string(a) + " and " + std::to_string(b)),
        node_a(a),
        node_b(b) {}

  int node_a;
  int node_b;
};

class InsufficientAnchorsError : public std::invalid_argument {
 public:
  explicit InsufficientAnchorsError(int have)
      : std::invalid_argument("anchor alignment requires at least 3 anchors, got " +
                              std::to_string(have)) {}
};

// Anchor geometry admits no unique similarity transform (e.g. anchors
// collinear in both frames, so the reflection is undetermined).
class DegenerateAnchorsError : public std::runtime_error {
 public:
  explicit DegenerateAnchorsError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedModeError : public std::invalid_argument {
 public:
  explicit UnsupportedModeError(const std::string& what) : std::invalid_argument(what) {}
};

class InfeasibleConfigurationError : public std::runtime_error {
 public:
  explicit InfeasibleConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsnloc
