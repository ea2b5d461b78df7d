// Copyright 2026 The Kolam Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// RunReport: the machine-readable record every CLI command can emit.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kolam/count.hpp"
#include "kolam/loop_poly.hpp"

namespace kolam::cli {

using Json = nlohmann::ordered_json;

/// Counts that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline Json count_json(const Count& c) {
  if (c.fits_u64()) return Json(c.to_u64());
  return Json(c.to_string());
}

inline Json poly_json(const LoopPoly& p) {
  Json out = Json::array();
  for (const Count& c : p.coefficients()) out.push_back(count_json(c));
  return out;
}

struct RunReport {
  std::string command;
  Json program = Json::object();
  Json options = Json::object();
  Json result = Json::object();
  std::vector<std::pair<std::string, double>> timings_ms;
  std::size_t peak_state_size = 0;

  Json to_json() const {
    Json out;
    out["command"] = command;
    out["program"] = program;
    out["options"] = options;
    out["result"] = result;
    Json t = Json::object();
    for (const auto& [phase, ms] : timings_ms) t[phase] = ms;
    out["timings_ms"] = t;
    out["peak_state_size"] = peak_state_size;
    return out;
  }

  std::string dump() const { return to_json().dump(2); }
};

/// Copy of a serialized report with every timing set to zero, so two runs
/// of the same command compare byte for byte.
inline Json normalize_timings(Json report) {
  if (report.contains("timings_ms"))
    for (auto& [phase, ms] : report["timings_ms"].items()) ms = 0.0;
  return report;
}

}  // namespace kolam::cli
