#include "wsnloc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace wsnloc {

namespace {

std::string fmt_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string fmt_u64(std::uint64_t value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(value));
  return buf;
}

using json = nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.at(key).is_number()) throw std::invalid_argument("field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace

std::string deployment_to_json(const Deployment& deployment) {
  std::string out = "{\"n\": " + std::to_string(deployment.n());
  out += ", \"r\": " + fmt_double(deployment.side);
  out += ", \"kind\": \"" + to_string(deployment.kind) + "\"";
  out += ", \"seed\": " + fmt_u64(deployment.seed);
  out += ", \"positions\": [";
  for (int i = 0; i < deployment.n(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + fmt_double(deployment.positions[i].x) + ", " +
           fmt_double(deployment.positions[i].y) + "]";
  }
  out += "], \"anchors\": [";
  for (std::size_t k = 0; k < deployment.anchor_indices.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(deployment.anchor_indices[k]);
  }
  out += "]}";
  return out;
}

Deployment deployment_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("deployment JSON parse error: ") + e.what());
  }
  for (const char* key : {"n", "r", "kind", "seed", "positions", "anchors"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("deployment JSON missing field '") + key + "'");
    }
  }

  Deployment dep;
  const int n = j.at("n").get<int>();
  dep.side = require_number(j, "r");
  if (!(dep.side > 0.0)) throw std::invalid_argument("field 'r' must be positive");
  dep.kind = topology_from_string(j.at("kind").get<std::string>());
  dep.seed = j.at("seed").get<std::uint64_t>();

  const json& positions = j.at("positions");
  if (!positions.is_array() || static_cast<int>(positions.size()) != n) {
    throw std::invalid_argument("field 'positions' must be an array of length n");
  }
  dep.positions.reserve(positions.size());
  for (const json& p : positions) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw std::invalid_argument("positions entries must be [x, y] number pairs");
    }
    dep.positions.push_back({p[0].get<double>(), p[1].get<double>()});
  }

  const json& anchors = j.at("anchors");
  if (!anchors.is_array()) throw std::invalid_argument("field 'anchors' must be an array");
  for (const json& a : anchors) {
    if (!a.is_number_integer()) throw std::invalid_argument("anchor indices must be integers");
    const int idx = a.get<int>();
    if (idx < 0 || idx >= n) throw std::invalid_argument("anchor index out of range");
    dep.anchor_indices.push_back(idx);
  }
  std::sort(dep.anchor_indices.begin(), dep.anchor_indices.end());
  const auto dup = std::adjacent_find(dep.anchor_indices.begin(), dep.anchor_indices.end());
  if (dup != dep.anchor_indices.end()) {
    throw std::invalid_argument("anchor indices must be distinct");
  }
  return dep;
}

std::string result_to_json(const LocalizationResult& result) {
  std::string out = "{\"algorithm\": \"" + to_string(result.algorithm) + "\"";
  out += ", \"converged\": ";
  out += result.converged ? "true" : "false";
  out += ", \"positions\": [";
  for (int i = 0; i < result.estimated.rows(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + fmt_double(result.estimated(i, 0)) + ", " + fmt_double(result.estimated(i, 1)) +
           "]";
  }
  out += "]}";
  return out;
}

std::string report_to_csv(const Report& report) {
  std::string out =
      "topology,range,anchors,algorithm,mean_error_over_R,stddev,mean_connectivity,rounds,"
      "regenerated,nonconverged\n";
  for (const ReportCell& cell : report.cells) {
    out += to_string(cell.topology);
    out += ',' + fmt_double(cell.radio_range);
    out += ',' + std::to_string(cell.anchors);
    out += ',' + to_string(cell.algorithm);
    out += ',' + fmt_double(cell.mean_error_over_r);
    out += ',' + fmt_double(cell.stddev);
    out += ',' + fmt_double(cell.mean_connectivity);
    out += ',' + std::to_string(cell.rounds);
    out += ',' + std::to_string(cell.regenerated);
    out += ',' + std::to_string(cell.nonconverged);
    out += '\n';
  }
  return out;
}

std::string plot_data_csv(const Report& report) {
  std::string out = "connectivity,error_over_R,algorithm,anchors\n";
  for (const ReportCell& cell : report.cells) {
    out += fmt_double(cell.mean_connectivity);
    out += ',' + fmt_double(cell.mean_error_over_r);
    out += ',' + to_string(cell.algorithm);
    out += ',' + std::to_string(cell.anchors);
    out += '\n';
  }
  return out;
}

std::string distance_matrix_to_csv(const DistanceMatrix& matrix) {
  std::string out;
  for (int i = 0; i < matrix.n(); ++i) {
    for (int j = 0; j < matrix.n(); ++j) {
      if (j > 0) out += ',';
      out += fmt_double(matrix(i, j));
    }
    out += '\n';
  }
  return out;
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  static const std::vector<std::string> known = {
      "topology", "n",          "side_count", "rows",      "cols",
      "r",        "radio_ranges", "anchor_counts", "rounds", "base_seed",
      "algorithms", "noise_std", "sdp_tol",    "sdp_max_iter"};
  std::string unknown;
  for (const auto& item : j.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      if (!unknown.empty()) unknown += ", ";
      unknown += item.key();
    }
  }
  if (!unknown.empty()) throw std::invalid_argument("unknown config fields: " + unknown);

  ExperimentConfig config;
  try {
    if (j.contains("topology")) {
      config.topology = topology_from_string(j.at("topology").get<std::string>());
    }
    if (j.contains("n")) config.n = j.at("n").get<int>();
    if (j.contains("side_count")) config.side_count = j.at("side_count").get<int>();
    if (j.contains("rows")) config.rows = j.at("rows").get<int>();
    if (j.contains("cols")) config.cols = j.at("cols").get<int>();
    if (j.contains("r")) config.r = require_number(j, "r");
    if (j.contains("radio_ranges")) {
      config.radio_ranges = j.at("radio_ranges").get<std::vector<double>>();
    }
    if (j.contains("anchor_counts")) {
      config.anchor_counts = j.at("anchor_counts").get<std::vector<int>>();
    }
    if (j.contains("rounds")) config.rounds = j.at("rounds").get<int>();
    if (j.contains("base_seed")) config.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("algorithms")) {
      config.algorithms.clear();
      for (const json& name : j.at("algorithms")) {
        config.algorithms.push_back(algorithm_from_string(name.get<std::string>()));
      }
    }
    if (j.contains("noise_std")) config.noise_std = require_number(j, "noise_std");
    if (j.contains("sdp_tol")) config.sdp_tol = require_number(j, "sdp_tol");
    if (j.contains("sdp_max_iter")) config.sdp_max_iter = j.at("sdp_max_iter").get<int>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config JSON type error: ") + e.what());
  }
  return config;
}

}  // namespace wsnloc
