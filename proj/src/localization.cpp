#include "wsnloc/localization.hpp"

#include <stdexcept>

namespace wsnloc {

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::mds_map ? "mds_map" : "sdp";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "mds_map" || name == "mds-map") return Algorithm::mds_map;
  if (name == "sdp") return Algorithm::sdp;
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace wsnloc
