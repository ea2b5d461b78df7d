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

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "kolam/engine.hpp"
#include "oracle.hpp"

namespace kolam {
namespace {

CountOptions with(bool split, bool reduce, EvolutionMode mode) {
  CountOptions o;
  o.use_split = split;
  o.use_reduction = reduce;
  o.mode = mode;
  return o;
}

TEST(CountInfinite, DiamondCounts) {
  EXPECT_EQ(count_infinite(diamond_program(1)), Count(1));
  EXPECT_EQ(count_infinite(diamond_program(2)), Count(240));
  EXPECT_EQ(count_infinite(diamond_program(3)), Count(11661312));
}

TEST(CountInfinite, EveryOptionCombinationAgrees) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const MorseProgram p = diamond_program(n);
    const Count expected = count_infinite(p);
    for (bool split : {false, true})
      for (bool reduce : {false, true})
        for (EvolutionMode m : {EvolutionMode::a0, EvolutionMode::exact}) {
          if (n == 3 && m == EvolutionMode::exact && !split) continue;  // covered by the split variant
          EXPECT_EQ(count_infinite(p, with(split, reduce, m)), expected) << n << split << reduce;
        }
  }
}

TEST(CountInfinite, TraceReportsPeak) {
  CountTrace trace;
  count_infinite(diamond_program(2), {}, &trace);
  EXPECT_EQ(trace.row_state_sizes.size(), 7u);
  EXPECT_EQ(trace.peak_state_size, *std::max_element(trace.row_state_sizes.begin(), trace.row_state_sizes.end()));
}

TEST(ComponentPolynomial, DiamondOne) {
  const LoopPoly p = component_polynomial(diamond_program(1));
  EXPECT_EQ(p.coefficient(1), Count(1));
  EXPECT_EQ(p.evaluate_at_one(), Count(16));
  EXPECT_EQ(p.coefficient(0), Count(0));
}

TEST(ComponentPolynomial, DiamondTwo) {
  const LoopPoly p = component_polynomial(diamond_program(2));
  EXPECT_EQ(p.coefficient(1), Count(240));
  EXPECT_EQ(p.evaluate_at_one(), Count(65536));
  EXPECT_EQ(split_polynomial(diamond_program(2)), p);
}

TEST(ComponentPolynomial, NoRowsGluesTopToBottom) {
  MorseProgram p;
  p.strand_count = 8;
  EXPECT_EQ(component_polynomial(p), LoopPoly::monomial(4));
  EXPECT_EQ(count_infinite(p), Count(0));
  p.strand_count = 2;
  EXPECT_EQ(count_infinite(p), Count(1));
}

TEST(EvaluateAssignment, DiamondOneExamples) {
  const MorseProgram p = diamond_program(1);
  EXPECT_EQ(evaluate_assignment(p, Assignment(4)), 1u);
  // Black sites take cup-and-cap, white sites cross.
  EXPECT_EQ(evaluate_assignment(p, Assignment(std::vector<bool>{true, false, false, true})), 3u);
  EXPECT_THROW(evaluate_assignment(p, Assignment(5)), std::invalid_argument);
}

TEST(EvaluateAssignment, MatchesGraphOracleOnDiamondTwo) {
  const MorseProgram p = diamond_program(2);
  for (std::uint64_t m = 0; m < (1u << 16); m += 97) {
    const Assignment a = Assignment::from_mask(m, 16);
    ASSERT_EQ(evaluate_assignment(p, a), oracle::curves(p, a)) << m;
  }
}

TEST(BruteDistribution, DiamondOneHistogram) {
  const ComponentDistribution d = brute_distribution(diamond_program(1));
  // Frozen from the graph oracle.
  const auto expected = oracle::distribution(diamond_program(1));
  ASSERT_EQ(d.counts.size(), expected.size());
  for (const auto& [k, c] : expected) EXPECT_EQ(d.counts.at(k), Count(c)) << k;
  EXPECT_EQ(d.counts, (std::map<std::size_t, Count>{{1, 1}, {2, 4}, {3, 6}, {4, 4}, {5, 1}}));
  EXPECT_EQ(d.total(), Count(16));
}

TEST(BruteDistribution, DiamondTwoMatchesPolynomialTermForTerm) {
  const MorseProgram p = diamond_program(2);
  const ComponentDistribution d = brute_distribution(p);
  EXPECT_EQ(d.single(), Count(240));
  EXPECT_EQ(d.total(), Count(65536));
  EXPECT_EQ(d.as_polynomial(), component_polynomial(p));
}

TEST(BruteDistribution, ThreadsDoNotChangeResult) {
  const MorseProgram p = diamond_program(2);
  BruteOptions one;
  one.exec.threads = 1;
  BruteOptions many;
  many.exec.threads = 5;
  EXPECT_EQ(brute_distribution(p, one).counts, brute_distribution(p, many).counts);
}

TEST(BruteDistribution, LimitAndOverride) {
  BruteOptions o;
  EXPECT_THROW(brute_distribution(diamond_program(3), o), LimitExceeded);
  o.limit = 3;
  EXPECT_THROW(brute_distribution(diamond_program(1), o), LimitExceeded);
  o.force = true;
  EXPECT_EQ(brute_distribution(diamond_program(1), o).single(), Count(1));
}

TEST(EnumerateSolutions, DiamondOne) {
  const auto s = solutions(diamond_program(1));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].to_hex(), "0");
}

TEST(EnumerateSolutions, DiamondTwoAscendingAndValid) {
  const MorseProgram p = diamond_program(2);
  BruteOptions threaded;
  threaded.exec.threads = 3;
  const auto s = solutions(p, threaded);
  ASSERT_EQ(s.size(), 240u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(evaluate_assignment(p, s[i]), 1u);
    if (i > 0) {
      EXPECT_LT(s[i - 1].to_mask(), s[i].to_mask());
    }
  }
  BruteOptions serial;
  serial.exec.threads = 1;
  const auto again = solutions(p, serial);
  EXPECT_TRUE(std::equal(s.begin(), s.end(), again.begin(), again.end()));
}

TEST(EvolutionStats, ReducedDiamondTwo) {
  const EvolutionStats s = evolution_stats(diamond_program(2), {true, {}});
  EXPECT_EQ(s.surviving_weight, Count(14));
  EXPECT_EQ(s.distinct_states, 5u);
  EXPECT_EQ(s.tracked_endpoints, 6u);
  EXPECT_EQ(s.state_space_dimension, 15u);
  EXPECT_EQ(s.middle_weight, Count(56));
  EXPECT_EQ(s.middle_distinct_states, 6u);
}

TEST(EvolutionStats, ReducedDiamondTwoStates) {
  const ReducedProgram r = boundary_reduce(diamond_program(2));
  const Halves h = split_halves(r.program);
  const auto upper = evolve<Count>(h.upper, top_state<Count>(6));
  const std::vector<Row> middle{h.middle};
  const auto lowered = evolve<Count>(middle, upper);
  const auto states = fixtures::reduced_states();
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(upper.coefficient(states[i]), Count(fixtures::kUpper[i])) << i;
    EXPECT_EQ(lowered.coefficient(states[i]), Count(fixtures::kMiddle[i])) << i;
  }
  EXPECT_EQ(upper.size(), 5u);
  EXPECT_EQ(lowered.size(), 6u);
}

TEST(EvolutionStats, ReducedDiamondThree) {
  const EvolutionStats s = evolution_stats(diamond_program(3), {true, {}});
  EXPECT_EQ(s.surviving_weight, Count(2368));
  EXPECT_EQ(s.distinct_states, 43u);
  EXPECT_LE(s.distinct_states, s.state_space_dimension);
}

TEST(EvolutionStats, DiamondOneByHand) {
  // One black site under the caps: crossing absorbed, cup-and-cap closes a
  // loop and is dropped, so a single surviving diagram.
  const EvolutionStats s = evolution_stats(diamond_program(1));
  EXPECT_EQ(s.surviving_weight, Count(1));
  EXPECT_EQ(s.distinct_states, 1u);
  EXPECT_EQ(s.row_state_sizes, std::vector<std::size_t>{1});
}

}  // namespace
}  // namespace kolam
