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

// Randomised invariants over small programs. Every program has at most 18
// sites so the exhaustive walk stays cheap.

#include <gtest/gtest.h>

#include <random>

#include "kolam/engine.hpp"
#include "kolam/morse_io.hpp"
#include "oracle.hpp"

namespace kolam {
namespace {

constexpr int kPrograms = 50;
constexpr std::size_t kMaxSites = 18;

std::vector<MorseProgram> general_programs() {
  std::mt19937_64 rng(20261017);
  std::vector<MorseProgram> out;
  for (int i = 0; i < kPrograms; ++i)
    out.push_back(oracle::random_program(rng, 2 + 2 * (rng() % 5), rng() % 9, kMaxSites));
  return out;
}

std::vector<MorseProgram> symmetric_programs() {
  std::mt19937_64 rng(424242);
  std::vector<MorseProgram> out;
  for (int i = 0; i < kPrograms; ++i)
    out.push_back(oracle::random_palindrome(rng, 2 + 2 * (rng() % 5), rng() % 5, kMaxSites));
  return out;
}

TEST(Properties, GeneratedProgramsAreValid) {
  for (const auto& p : general_programs()) {
    ASSERT_TRUE(validate(p).empty()) << format_program(p);
    ASSERT_LE(site_count(p), kMaxSites);
  }
  for (const auto& p : symmetric_programs()) {
    ASSERT_TRUE(validate(p).empty()) << format_program(p);
    ASSERT_LE(site_count(p), kMaxSites);
    ASSERT_TRUE(is_palindrome(p));
    ASSERT_EQ(p.rows.size() % 2, 1u);
  }
}

TEST(Properties, PolynomialTotalsAndConstantTerm) {
  for (const auto& p : general_programs()) {
    const LoopPoly poly = component_polynomial(p);
    EXPECT_EQ(poly.evaluate_at_one(), Count::pow2(static_cast<unsigned>(site_count(p)))) << format_program(p);
    EXPECT_EQ(poly.coefficient(0), Count(0)) << format_program(p);
  }
}

TEST(Properties, PolynomialMatchesExhaustiveWalk) {
  for (const auto& p : general_programs()) {
    const LoopPoly poly = component_polynomial(p);
    const ComponentDistribution d = brute_distribution(p);
    EXPECT_EQ(d.as_polynomial(), poly) << format_program(p);
    EXPECT_EQ(d.total(), Count::pow2(static_cast<unsigned>(site_count(p))));
  }
}

TEST(Properties, ExhaustiveWalkMatchesGraphOracle) {
  for (const auto& p : general_programs()) {
    if (site_count(p) > 12) continue;
    const ComponentDistribution d = brute_distribution(p);
    for (const auto& [k, c] : oracle::distribution(p)) EXPECT_EQ(d.counts.at(k), Count(c)) << format_program(p);
  }
}

TEST(Properties, TruncatedModeMatchesExactCoefficient) {
  for (const auto& p : general_programs()) {
    CountOptions exact;
    exact.mode = EvolutionMode::exact;
    EXPECT_EQ(count_infinite(p), count_infinite(p, exact)) << format_program(p);
    EXPECT_EQ(count_infinite(p), component_polynomial(p).coefficient(1));
  }
}

TEST(Properties, MirrorInvariance) {
  for (const auto& p : general_programs()) {
    EXPECT_EQ(component_polynomial(mirror(p)), component_polynomial(p)) << format_program(p);
    EXPECT_EQ(count_infinite(mirror(p)), count_infinite(p));
  }
}

TEST(Properties, RowReversalInvariance) {
  for (const auto& p : general_programs())
    EXPECT_EQ(component_polynomial(reversed(p)), component_polynomial(p)) << format_program(p);
}

TEST(Properties, ReductionPreservesCount) {
  for (const auto& p : general_programs()) {
    CountOptions reduce;
    reduce.use_reduction = true;
    EXPECT_EQ(count_infinite(p, reduce), count_infinite(p)) << format_program(p);
  }
}

TEST(Properties, SplitPathsMatchFullEvolution) {
  for (const auto& p : symmetric_programs()) {
    const LoopPoly full = component_polynomial(p);
    EXPECT_EQ(split_polynomial(p), full) << format_program(p);
    const Count single = full.coefficient(1);
    for (bool reduce : {false, true})
      for (EvolutionMode m : {EvolutionMode::a0, EvolutionMode::exact}) {
        CountOptions o;
        o.use_split = true;
        o.use_reduction = reduce;
        o.mode = m;
        EXPECT_EQ(count_infinite(p, o), single) << format_program(p) << reduce;
      }
    EXPECT_EQ(brute_distribution(p).single(), single);
  }
}

TEST(Properties, StateSizeBound) {
  for (const auto& p : symmetric_programs())
    for (bool reduce : {false, true}) {
      const EvolutionStats s = evolution_stats(p, {reduce, {}});
      EXPECT_LE(s.distinct_states, s.state_space_dimension);
      EXPECT_LE(s.middle_distinct_states, s.state_space_dimension);
      for (std::size_t r : s.row_state_sizes) EXPECT_LE(r, s.state_space_dimension);
    }
}

TEST(Properties, ThreadCountIndependence) {
  for (const auto& p : general_programs()) {
    CountOptions one;
    one.exec.threads = 1;
    CountOptions three;
    three.exec.threads = 3;
    EXPECT_EQ(count_infinite(p, one), count_infinite(p, three));
    BruteOptions b1;
    b1.exec.threads = 1;
    BruteOptions b3;
    b3.exec.threads = 3;
    EXPECT_EQ(brute_distribution(p, b1).counts, brute_distribution(p, b3).counts);
  }
}

}  // namespace
}  // namespace kolam
