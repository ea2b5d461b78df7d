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

// Morse link programs: 2n vertical strands closed by caps on top and cups at
// the bottom, with rows of black/white sites in between. Row r is applied
// before row r + 1 (top to bottom).

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kolam/pairing.hpp"

namespace kolam {

/// Black sites choose between a crossing and cup-and-cap; white sites between
/// a crossing and a recoil (identity).
enum class SiteColor { black, white };

inline char color_letter(SiteColor c) { return c == SiteColor::black ? 'B' : 'W'; }

struct Site {
  SiteColor color = SiteColor::black;
  std::size_t pos = 1;  // acts on strands pos, pos + 1

  friend bool operator==(const Site&, const Site&) = default;
};

struct Row {
  SiteColor color = SiteColor::black;
  std::vector<std::size_t> positions;

  std::size_t size() const { return positions.size(); }
  friend bool operator==(const Row&, const Row&) = default;
};

struct MorseProgram {
  std::size_t strand_count = 2;
  std::vector<Row> rows;
  std::optional<std::size_t> diamond_size;  // N when built by diamond_program

  friend bool operator==(const MorseProgram&, const MorseProgram&) = default;
};

inline std::size_t site_count(const MorseProgram& program) {
  std::size_t d = 0;
  for (const auto& row : program.rows) d += row.size();
  return d;
}

/// Sites in program order: rows top to bottom, then the order listed in the
/// row. Assignment bits follow this order.
inline std::vector<Site> sites(const MorseProgram& program) {
  std::vector<Site> out;
  out.reserve(site_count(program));
  for (const auto& row : program.rows)
    for (std::size_t pos : row.positions) out.push_back({row.color, pos});
  return out;
}

/// Diamond dot grid (1-3-...-(2N+1)-...-3-1). Rows have 1, 2, ..., 2N, ...,
/// 2, 1 sites, odd rows black and even rows white, each centred on the
/// strand midline: a row of s sites sits at 2N+2-s, 2N+4-s, ..., 2N+s.
inline MorseProgram diamond_program(std::size_t n) {
  if (n < 1) throw std::invalid_argument("diamond size must be at least 1");
  if (4 * n + 2 > kMaxEndpoints) throw std::invalid_argument("diamond size " + std::to_string(n) + " is too large");
  MorseProgram program;
  program.strand_count = 4 * n + 2;
  program.diamond_size = n;
  const std::size_t row_count = 4 * n - 1;
  for (std::size_t r = 1; r <= row_count; ++r) {
    const std::size_t s = r <= 2 * n ? r : 4 * n - r;
    Row row;
    row.color = s % 2 == 1 ? SiteColor::black : SiteColor::white;
    for (std::size_t j = 0; j < s; ++j) row.positions.push_back(2 * n + 2 - s + 2 * j);
    program.rows.push_back(std::move(row));
  }
  return program;
}

struct Violation {
  std::size_t row = 0;               // 0-based row index
  std::optional<std::size_t> site;   // index within the row
  std::string message;

  std::string to_string() const {
    std::string out = "row " + std::to_string(row + 1);
    if (site) out += ", site " + std::to_string(*site + 1);
    return out + ": " + message;
  }
};

inline std::vector<Violation> validate(const MorseProgram& program) {
  std::vector<Violation> out;
  const std::size_t strands = program.strand_count;
  if (strands < 2 || strands % 2 != 0)
    out.push_back({0, std::nullopt, "strand count " + std::to_string(strands) + " must be even and at least 2"});
  if (strands > kMaxEndpoints)
    out.push_back({0, std::nullopt, "strand count " + std::to_string(strands) + " exceeds " + std::to_string(kMaxEndpoints)});
  for (std::size_t r = 0; r < program.rows.size(); ++r) {
    const auto& pos = program.rows[r].positions;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (pos[k] < 1 || pos[k] + 1 > strands)
        out.push_back({r, k, "position " + std::to_string(pos[k]) + " out of range 1.." + std::to_string(strands - 1)});
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t gap = pos[k] > pos[j] ? pos[k] - pos[j] : pos[j] - pos[k];
        if (gap < 2)
          out.push_back({r, k, "overlapping pair: positions " + std::to_string(pos[j]) + " and " + std::to_string(pos[k]) +
                                   " share a strand"});
      }
    }
  }
  return out;
}

class InvalidProgram : public std::invalid_argument {
 public:
  explicit InvalidProgram(std::vector<Violation> violations)
      : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& v) {
    std::string out = "invalid Morse program";
    for (const auto& x : v) out += "; " + x.to_string();
    return out;
  }
  std::vector<Violation> violations_;
};

inline void require_valid(const MorseProgram& program) {
  auto violations = validate(program);
  if (!violations.empty()) throw InvalidProgram(std::move(violations));
}

/// Left-right reflection: position i becomes strand_count - i.
inline MorseProgram mirror(const MorseProgram& program) {
  MorseProgram out = program;
  for (auto& row : out.rows) {
    for (auto& pos : row.positions) pos = program.strand_count - pos;
    std::reverse(row.positions.begin(), row.positions.end());
  }
  return out;
}

/// Up-down reflection: rows in reverse order. Caps and cups swap roles,
/// which leaves the adjacent top and bottom states unchanged.
inline MorseProgram reversed(const MorseProgram& program) {
  MorseProgram out = program;
  std::reverse(out.rows.begin(), out.rows.end());
  return out;
}

inline bool is_palindrome(const MorseProgram& program) {
  const auto& rows = program.rows;
  for (std::size_t i = 0, j = rows.size(); i < j; ++i) {
    --j;
    if (i >= j) break;
    if (rows[i].color != rows[j].color) return false;
    auto a = rows[i].positions;
    auto b = rows[j].positions;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

struct Halves {
  std::vector<Row> upper;
  Row middle;
  std::vector<Row> lower;
};

/// Splits an up-down symmetric program around its central row. The lower
/// half is the upper half read backwards.
inline Halves split_halves(const MorseProgram& program) {
  const auto& rows = program.rows;
  if (rows.size() % 2 == 0) throw std::invalid_argument("split_halves needs an odd number of rows");
  if (!is_palindrome(program)) throw std::invalid_argument("split_halves needs an up-down symmetric program");
  const std::size_t mid = rows.size() / 2;
  Halves out;
  out.upper.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(mid));
  out.middle = rows[mid];
  out.lower.assign(rows.begin() + static_cast<std::ptrdiff_t>(mid) + 1, rows.end());
  return out;
}

}  // namespace kolam
