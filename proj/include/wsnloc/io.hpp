#pragma once

#include <string>

#include "wsnloc/bench.hpp"
#include "wsnloc/deployment.hpp"
#include "wsnloc/localization.hpp"
#include "wsnloc/netgraph.hpp"

namespace wsnloc {

// Deployment JSON with fixed field order {"n", "r", "kind", "seed",
// "positions", "anchors"}; floats carry 17 significant digits so parsing
// recovers the exact doubles.
std::string deployment_to_json(const Deployment& deployment);
Deployment deployment_from_json(const std::string& text);

// {"algorithm": tag, "converged": bool, "positions": [[x, y], ...]}
std::string result_to_json(const LocalizationResult& result);

// CSV with header topology,range,anchors,algorithm,mean_error_over_R,
// stddev,mean_connectivity,rounds,regenerated,nonconverged.
std::string report_to_csv(const Report& report);

// Plot-ready CSV with header connectivity,error_over_R,algorithm,anchors.
std::string plot_data_csv(const Report& report);

// Full n x n matrix, one row per line, 17-significant-digit floats.
std::string distance_matrix_to_csv(const DistanceMatrix& matrix);

// Parses the documented ExperimentConfig schema; rejects unknown fields and
// type mismatches with a message listing the offending fields.
ExperimentConfig experiment_config_from_json(const std::string& text);

}  // namespace wsnloc
