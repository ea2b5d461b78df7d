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

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "kolam/loop_poly.hpp"
#include "kolam/pairing.hpp"

namespace kolam {

/// Inner products between basis states. entries[i][j] = a^c with c the
/// number of closed curves obtained by gluing state i to the transpose of
/// state j; derivative_at_zero keeps only the single-curve gluings.
struct MetricReport {
  std::vector<Pairing> states;
  std::vector<std::vector<LoopPoly>> entries;
  std::vector<std::vector<int>> derivative_at_zero;
};

inline MetricReport metric_report(std::span<const Pairing> states) {
  MetricReport out;
  out.states.assign(states.begin(), states.end());
  const std::size_t n = states.size();
  out.entries.assign(n, std::vector<LoopPoly>(n));
  out.derivative_at_zero.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (states[i].endpoint_count() != states[0].endpoint_count())
      throw std::invalid_argument("metric_report: states over different endpoint counts");
    for (std::size_t j = 0; j <= i; ++j) {
      const std::size_t cycles = glue_cycles(states[i], states[j]);
      out.entries[i][j] = out.entries[j][i] = LoopPoly::monomial(cycles);
      out.derivative_at_zero[i][j] = out.derivative_at_zero[j][i] = cycles == 1 ? 1 : 0;
    }
  }
  return out;
}

}  // namespace kolam
