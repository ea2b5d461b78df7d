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

// Boundary reduction: strips sites whose choice is forced (or irrelevant) in
// every single-curve drawing, and strand pairs that only exist to carry a
// boundary loop. The reduced program has the same number of single-curve
// drawings as the original, multiplied by `multiplicity`.
//
// Rules, applied until nothing changes:
//
//  cap/cup absorption  A site at odd position i whose strands i, i+1 are
//                      untouched by every earlier row still sees the top cap
//                      (i, i+1). A crossing there is absorbed by the cap.
//                      Black: cup-and-cap closes a loop, so the site is forced
//                      to cross and vanishes. White: both choices leave the
//                      state unchanged, so the site vanishes and the count
//                      doubles. Symmetrically for later rows and the bottom
//                      cups.
//  edge strand pair    Strand 1 untouched and strand 2 touched by a single
//                      site (at position 2). A white recoil there leaves the
//                      loop through strands 1, 2 isolated, so it is forced to
//                      cross, after which strand 3 runs straight through; a
//                      black site gives the same through-strand either way.
//                      Strands 1, 2 and the site are removed. Mirrored on the
//                      right edge. Only applied while at least two strand
//                      pairs remain.
//
// On the diamond grid this removes exactly the two apex black sites, the
// outermost cap/cup pair on each side and the two outer white sites of the
// middle row.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "kolam/count.hpp"
#include "kolam/morse.hpp"

namespace kolam {

enum class SiteChoice { cross, alternate };

struct EliminatedSite {
  std::size_t row = 0;                // 0-based row index (rows are never removed)
  Site site;                          // position in original strand numbering
  std::optional<SiteChoice> forced;   // nullopt: both choices are equivalent
};

struct ReducedProgram {
  MorseProgram program;
  std::vector<std::size_t> removed_strands;   // original numbering, ascending
  std::vector<EliminatedSite> forced_sites;
  std::vector<std::size_t> strand_map;        // strand_map[k - 1] = original index of reduced strand k
  Count multiplicity = Count(1);

  std::size_t original_strand(std::size_t reduced) const { return strand_map.at(reduced - 1); }
};

namespace detail {

struct TouchMap {
  // touch[r][k] : strand k (1-based) is touched by a site in row r
  std::vector<std::vector<char>> touch;

  explicit TouchMap(const MorseProgram& p) : touch(p.rows.size(), std::vector<char>(p.strand_count + 2, 0)) {
    for (std::size_t r = 0; r < p.rows.size(); ++r)
      for (std::size_t pos : p.rows[r].positions) {
        touch[r][pos] = 1;
        touch[r][pos + 1] = 1;
      }
  }
};

}  // namespace detail

inline ReducedProgram boundary_reduce(const MorseProgram& original) {
  require_valid(original);
  ReducedProgram out;
  out.program = original;
  out.program.diamond_size.reset();
  for (std::size_t k = 1; k <= original.strand_count; ++k) out.strand_map.push_back(k);

  auto& prog = out.program;
  auto to_original = [&](std::size_t pos) { return out.strand_map[pos - 1]; };

  bool changed = true;
  while (changed) {
    changed = false;

    // Cap/cup absorption, decided on one snapshot: removing a site never
    // enables or disables another candidate of the same pass.
    {
      detail::TouchMap tm(prog);
      const std::size_t rows = prog.rows.size();
      std::vector<std::vector<char>> drop(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = prog.rows[r];
        drop[r].assign(row.size(), 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
          const std::size_t pos = row.positions[k];
          if (pos % 2 == 0) continue;
          bool clear_above = true;
          for (std::size_t q = 0; q < r && clear_above; ++q) clear_above = !tm.touch[q][pos] && !tm.touch[q][pos + 1];
          bool clear_below = true;
          for (std::size_t q = r + 1; q < rows && clear_below; ++q)
            clear_below = !tm.touch[q][pos] && !tm.touch[q][pos + 1];
          if (clear_above || clear_below) drop[r][k] = 1;
        }
      }
      for (std::size_t r = 0; r < rows; ++r) {
        auto& row = prog.rows[r];
        std::vector<std::size_t> kept;
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (!drop[r][k]) {
            kept.push_back(row.positions[k]);
            continue;
          }
          EliminatedSite e{r, {row.color, to_original(row.positions[k])}, SiteChoice::cross};
          if (row.color == SiteColor::white) {
            e.forced.reset();
            out.multiplicity *= Count(2);
          }
          out.forced_sites.push_back(e);
          changed = true;
        }
        row.positions = std::move(kept);
      }
    }

    // Edge strand pairs, one side at a time.
    for (int side = 0; side < 2; ++side) {
      if (prog.strand_count < 4) break;
      const std::size_t s = prog.strand_count;
      const std::size_t outer = side == 0 ? 1 : s;
      const std::size_t inner = side == 0 ? 2 : s - 1;
      const std::size_t site_pos = side == 0 ? 2 : s - 2;
      std::size_t touching = 0;
      bool outer_touched = false;
      std::size_t hit_row = 0;
      for (std::size_t r = 0; r < prog.rows.size(); ++r)
        for (std::size_t pos : prog.rows[r].positions) {
          if (pos == outer || pos + 1 == outer) outer_touched = true;
          if (pos == inner || pos + 1 == inner) {
            ++touching;
            hit_row = r;
          }
        }
      if (outer_touched || touching != 1) continue;
      auto& row = prog.rows[hit_row];
      std::size_t k = 0;
      while (row.positions[k] != site_pos) ++k;
      EliminatedSite e{hit_row, {row.color, to_original(site_pos)}, SiteChoice::cross};
      if (row.color == SiteColor::black) {
        // Cup-and-cap and crossing both route strand 3 through the side loop.
        e.forced.reset();
        out.multiplicity *= Count(2);
      }
      out.forced_sites.push_back(e);
      row.positions.erase(row.positions.begin() + static_cast<std::ptrdiff_t>(k));

      out.removed_strands.push_back(to_original(outer));
      out.removed_strands.push_back(to_original(inner));
      if (side == 0) {
        for (auto& r : prog.rows)
          for (auto& pos : r.positions) pos -= 2;
        out.strand_map.erase(out.strand_map.begin(), out.strand_map.begin() + 2);
      } else {
        out.strand_map.resize(out.strand_map.size() - 2);
      }
      prog.strand_count -= 2;
      changed = true;
    }
  }
  std::sort(out.removed_strands.begin(), out.removed_strands.end());
  return out;
}

}  // namespace kolam
