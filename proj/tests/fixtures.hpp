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

// Frozen reference data for the diamond of size 2 after boundary reduction:
// the six basis states on the reduced 6-endpoint space, their single-curve
// gluing matrix and inner-product exponents, and the upper/middle state
// coefficients.

#pragma once

#include <array>
#include <vector>

#include "kolam/pairing.hpp"

namespace fixtures {

inline std::vector<kolam::Pairing> reduced_states() {
  using kolam::Pairing;
  return {
      Pairing::from_chords(6, {{1, 2}, {3, 4}, {5, 6}}),
      Pairing::from_chords(6, {{1, 3}, {2, 4}, {5, 6}}),
      Pairing::from_chords(6, {{1, 2}, {3, 5}, {4, 6}}),
      Pairing::from_chords(6, {{1, 6}, {2, 4}, {3, 5}}),
      Pairing::from_chords(6, {{1, 6}, {2, 5}, {3, 4}}),
      Pairing::from_chords(6, {{1, 3}, {2, 5}, {4, 6}}),
  };
}

inline constexpr std::array<std::array<int, 6>, 6> kSingleCurve = {{
    {0, 0, 0, 1, 0, 1},
    {0, 0, 1, 0, 1, 0},
    {0, 1, 0, 0, 1, 0},
    {1, 0, 0, 0, 0, 1},
    {0, 1, 1, 0, 0, 0},
    {1, 0, 0, 1, 0, 0},
}};

// Exponent of a in each inner product.
inline constexpr std::array<std::array<int, 6>, 6> kCycles = {{
    {3, 2, 2, 1, 2, 1},
    {2, 3, 1, 2, 1, 2},
    {2, 1, 3, 2, 1, 2},
    {1, 2, 2, 3, 2, 1},
    {2, 1, 1, 2, 3, 2},
    {1, 2, 2, 1, 2, 3},
}};

inline constexpr std::array<unsigned, 6> kUpper = {8, 2, 2, 1, 1, 0};
inline constexpr std::array<unsigned, 6> kMiddle = {12, 12, 12, 4, 4, 12};

}  // namespace fixtures
