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

// Reference implementations used only by the tests. None of them touch the
// Pairing operators of the library: curves are counted on an explicit graph
// of strand segments with a union-find.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "kolam/kolam.hpp"

namespace oracle {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Number of perfect matchings of 2n points, by direct recursion.
inline std::uint64_t matchings(std::size_t n) {
  if (n == 0) return 1;
  // The first point picks one of 2n - 1 partners.
  return (2 * n - 1) * matchings(n - 1);
}

/// Number of curves when the chords of p and q are drawn together.
inline std::size_t glue(const kolam::Pairing& p, const kolam::Pairing& q) {
  UnionFind uf(p.endpoint_count());
  for (auto [i, j] : p.chords()) uf.unite(i - 1, j - 1);
  for (auto [i, j] : q.chords()) uf.unite(i - 1, j - 1);
  return uf.components();
}

/// Curves of one drawing. Node (level l, strand k) is the point where strand
/// k crosses the horizontal line above row l (l = rows is the bottom line).
inline std::size_t curves(const kolam::MorseProgram& program, const kolam::Assignment& assignment) {
  const std::size_t s = program.strand_count;
  const std::size_t levels = program.rows.size() + 1;
  auto node = [s](std::size_t level, std::size_t strand) { return level * s + (strand - 1); };
  UnionFind uf(levels * s);
  for (std::size_t k = 1; k < s; k += 2) {
    uf.unite(node(0, k), node(0, k + 1));
    uf.unite(node(levels - 1, k), node(levels - 1, k + 1));
  }
  std::size_t j = 0;
  for (std::size_t r = 0; r < program.rows.size(); ++r) {
    std::vector<bool> touched(s + 1, false);
    for (std::size_t pos : program.rows[r].positions) {
      touched[pos] = touched[pos + 1] = true;
      const bool alt = assignment[j++];
      if (!alt) {
        uf.unite(node(r, pos), node(r + 1, pos + 1));
        uf.unite(node(r, pos + 1), node(r + 1, pos));
      } else if (program.rows[r].color == kolam::SiteColor::black) {
        uf.unite(node(r, pos), node(r, pos + 1));
        uf.unite(node(r + 1, pos), node(r + 1, pos + 1));
      } else {
        uf.unite(node(r, pos), node(r + 1, pos));
        uf.unite(node(r, pos + 1), node(r + 1, pos + 1));
      }
    }
    for (std::size_t k = 1; k <= s; ++k)
      if (!touched[k]) uf.unite(node(r, k), node(r + 1, k));
  }
  return uf.components();
}

/// curves -> number of assignments, over all 2^D assignments.
inline std::map<std::size_t, std::uint64_t> distribution(const kolam::MorseProgram& program) {
  const std::size_t d = kolam::site_count(program);
  std::map<std::size_t, std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
    ++out[curves(program, kolam::Assignment::from_mask(m, d))];
  return out;
}

/// Random valid program: `strands` strands, `rows` rows, every row a random
/// set of disjoint sites, at most `max_sites` sites in total.
inline kolam::MorseProgram random_program(std::mt19937_64& rng, std::size_t strands, std::size_t rows,
                                          std::size_t max_sites) {
  kolam::MorseProgram p;
  p.strand_count = strands;
  std::size_t used = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    kolam::Row row;
    row.color = (rng() & 1U) ? kolam::SiteColor::black : kolam::SiteColor::white;
    std::size_t pos = 1 + rng() % 2;
    while (pos + 1 <= strands && used < max_sites) {
      if (rng() % 3 != 0) {
        row.positions.push_back(pos);
        ++used;
        pos += 2;
      } else {
        pos += 1;
      }
    }
    p.rows.push_back(std::move(row));
  }
  return p;
}

/// Random up-down symmetric program with an odd number of rows.
inline kolam::MorseProgram random_palindrome(std::mt19937_64& rng, std::size_t strands, std::size_t half_rows,
                                             std::size_t max_sites) {
  kolam::MorseProgram half = random_program(rng, strands, half_rows + 1, max_sites);
  std::size_t upper_sites = 0;
  for (std::size_t r = 0; r < half_rows; ++r) upper_sites += half.rows[r].size();
  // The mirrored copy doubles the upper sites; trim until the total fits.
  while (2 * upper_sites + half.rows[half_rows].size() > max_sites) {
    for (std::size_t r = 0; r <= half_rows; ++r)
      if (!half.rows[r].positions.empty()) {
        half.rows[r].positions.pop_back();
        if (r < half_rows) --upper_sites;
        break;
      }
  }
  kolam::MorseProgram out = half;
  for (std::size_t r = half_rows; r-- > 0;) out.rows.push_back(half.rows[r]);
  return out;
}

}  // namespace oracle
