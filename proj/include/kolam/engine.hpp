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

// Counting engine. Two independent routes to the number of single-curve
// drawings of a Morse program:
//
//  * algebraic: push the top state through every row of site operators
//    (black = crossing + cup-and-cap, white = crossing + identity), merging
//    equal basis states, then glue against the bottom state. Optionally the
//    program is split at its middle row and the upper half is glued to its
//    own transpose, and/or boundary-reduced first.
//  * exhaustive: walk all 2^D site assignments and count curves directly.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kolam/assignment.hpp"
#include "kolam/count.hpp"
#include "kolam/errors.hpp"
#include "kolam/loop_poly.hpp"
#include "kolam/morse.hpp"
#include "kolam/pairing.hpp"
#include "kolam/reduce.hpp"
#include "kolam/state_vector.hpp"

namespace kolam {

inline constexpr std::size_t kDefaultBruteLimit = 24;

struct ExecutionOptions {
  unsigned threads = 0;          // 0: use the available hardware parallelism
  std::size_t state_budget = 0;  // most basis states a state may hold; 0: no cap

  unsigned resolved_threads() const {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

namespace detail {

// Terms below this size are evolved on the calling thread.
inline constexpr std::size_t kParallelEvolveThreshold = 4096;

template <class Coeff>
BasicStateVector<Coeff> apply_site(const BasicStateVector<Coeff>& in, const Site& site) {
  using Access = PairingAccess;
  using Traits = CoefficientTraits<Coeff>;
  BasicStateVector<Coeff> out(in.endpoint_count());
  out.reserve(in.size() * 2);
  const std::size_t a = site.pos - 1;
  for (const auto& [p, c] : in.terms()) {
    Pairing crossed = p;
    Access::sigma(crossed, a);
    out.add(crossed, c);
    if (site.color == SiteColor::white) {
      out.add(p, c);
      continue;
    }
    Pairing turned = p;
    if (!Access::cup_cap(turned, a)) {
      out.add(turned, c);
    } else if (auto closed = Traits::close_loops(c, 1)) {
      out.add(turned, *closed);
    }
  }
  return out;
}

template <class Coeff>
BasicStateVector<Coeff> apply_row_serial(BasicStateVector<Coeff> state, const Row& row) {
  for (std::size_t pos : row.positions) state = apply_site(state, Site{row.color, pos});
  return state;
}

template <class Coeff>
BasicStateVector<Coeff> apply_row(BasicStateVector<Coeff> state, const Row& row, unsigned threads) {
  if (threads <= 1 || state.size() < kParallelEvolveThreshold || row.positions.empty())
    return apply_row_serial(std::move(state), row);

  // Sites of a row act on disjoint strands, so each chunk of terms can take
  // the whole row independently; chunk results are summed afterwards.
  const std::size_t n = state.endpoint_count();
  std::vector<BasicStateVector<Coeff>> chunks(threads, BasicStateVector<Coeff>(n));
  std::size_t k = 0;
  for (const auto& [p, c] : state.terms()) chunks[k++ % threads].add(p, c);
  state = BasicStateVector<Coeff>(n);

  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        chunks[t] = apply_row_serial(std::move(chunks[t]), row);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t largest = 0;
  for (unsigned t = 1; t < threads; ++t)
    if (chunks[t].size() > chunks[largest].size()) largest = t;
  BasicStateVector<Coeff> out = std::move(chunks[largest]);
  for (unsigned t = 0; t < threads; ++t)
    if (t != largest) out.merge(chunks[t]);
  return out;
}

inline void check_rows(std::span<const Row> rows, std::size_t endpoints) {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t pos : rows[r].positions)
      if (pos < 1 || pos + 1 > endpoints)
        throw std::out_of_range("row " + std::to_string(r + 1) + ": site position " + std::to_string(pos) +
                                " outside 1.." + std::to_string(endpoints - 1));
}

}  // namespace detail

/// Applies every row to `start`, each site contributing the two-term sum of
/// its choices. If `row_sizes` is given, the number of distinct basis states
/// after each row is appended to it.
template <class Coeff>
BasicStateVector<Coeff> evolve(std::span<const Row> rows, BasicStateVector<Coeff> start,
                               const ExecutionOptions& exec = {}, std::vector<std::size_t>* row_sizes = nullptr) {
  detail::check_rows(rows, start.endpoint_count());
  const unsigned threads = exec.resolved_threads();
  for (const Row& row : rows) {
    start = detail::apply_row(std::move(start), row, threads);
    if (exec.state_budget != 0 && start.size() > exec.state_budget)
      throw LimitExceeded("state holds " + std::to_string(start.size()) + " basis states, budget is " +
                          std::to_string(exec.state_budget));
    if (row_sizes) row_sizes->push_back(start.size());
  }
  return start;
}

template <class Coeff>
BasicStateVector<Coeff> top_state(std::size_t strands) {
  return BasicStateVector<Coeff>::single(top_pairing(strands / 2), Coeff{Count(1)});
}

template <>
inline BasicStateVector<LoopPoly> top_state<LoopPoly>(std::size_t strands) {
  return BasicStateVector<LoopPoly>::single(top_pairing(strands / 2), LoopPoly::constant(Count(1)));
}

/// <state|BOT> as a polynomial: each basis state contributes a^(curves).
inline LoopPoly glue_with_bottom(const StateVector& state) {
  const Pairing bottom = top_pairing(state.endpoint_count() / 2);
  LoopPoly out;
  for (const auto& [p, c] : state.terms()) out += c.shifted(glue_cycles(p, bottom));
  return out;
}

/// Single-curve part of <state|BOT> for a truncated state.
inline Count glue_with_bottom_single(const TruncatedStateVector& state) {
  const Pairing bottom = top_pairing(state.endpoint_count() / 2);
  Count out;
  for (const auto& [p, c] : state.terms())
    if (glue_cycles(p, bottom) == 1) out += c;
  return out;
}

/// P(a) = sum over all 2^D assignments of a^(number of curves).
inline LoopPoly component_polynomial(const MorseProgram& program, const ExecutionOptions& exec = {},
                                     std::vector<std::size_t>* row_sizes = nullptr) {
  require_valid(program);
  auto state = evolve<LoopPoly>(program.rows, top_state<LoopPoly>(program.strand_count), exec, row_sizes);
  return glue_with_bottom(state);
}

/// P(a) through the up-down split: upper half evolved once, the middle row
/// applied to it, then glued against the untouched upper half read as the
/// lower half. Requires an up-down symmetric program with an odd row count.
inline LoopPoly split_polynomial(const MorseProgram& program, const ExecutionOptions& exec = {}) {
  require_valid(program);
  const Halves halves = split_halves(program);
  const auto upper = evolve<LoopPoly>(halves.upper, top_state<LoopPoly>(program.strand_count), exec);
  const std::vector<Row> middle{halves.middle};
  const auto lowered = evolve<LoopPoly>(middle, upper, exec);
  LoopPoly out;
  for (const auto& [p, cp] : lowered.terms())
    for (const auto& [q, cq] : upper.terms()) out += (cp * cq).shifted(glue_cycles(p, q));
  return out;
}

struct CountOptions {
  bool use_split = false;
  bool use_reduction = false;
  EvolutionMode mode = EvolutionMode::a0;
  ExecutionOptions exec;
};

/// Largest state seen along the way, for reports.
struct CountTrace {
  std::size_t peak_state_size = 0;
  std::vector<std::size_t> row_state_sizes;

  void absorb(const std::vector<std::size_t>& sizes) {
    for (std::size_t s : sizes) peak_state_size = std::max(peak_state_size, s);
    row_state_sizes.insert(row_state_sizes.end(), sizes.begin(), sizes.end());
  }
};

/// Number of assignments whose drawing is a single closed curve.
inline Count count_infinite(const MorseProgram& program, const CountOptions& options = {}, CountTrace* trace = nullptr) {
  require_valid(program);
  MorseProgram target = program;
  Count multiplicity(1);
  if (options.use_reduction) {
    ReducedProgram reduced = boundary_reduce(program);
    target = std::move(reduced.program);
    multiplicity = reduced.multiplicity;
  }

  std::vector<std::size_t> sizes;
  Count single;
  if (options.use_split) {
    const Halves halves = split_halves(target);
    const std::vector<Row> middle{halves.middle};
    if (options.mode == EvolutionMode::exact) {
      const auto upper = evolve<LoopPoly>(halves.upper, top_state<LoopPoly>(target.strand_count), options.exec, &sizes);
      const auto lowered = evolve<LoopPoly>(middle, upper, options.exec, &sizes);
      for (const auto& [p, cp] : lowered.terms())
        for (const auto& [q, cq] : upper.terms()) {
          // Only constant-times-constant terms can end with a single curve.
          if (glue_cycles(p, q) == 1) single += cp.coefficient(0) * cq.coefficient(0);
        }
    } else {
      const auto upper = evolve<Count>(halves.upper, top_state<Count>(target.strand_count), options.exec, &sizes);
      const auto lowered = evolve<Count>(middle, upper, options.exec, &sizes);
      // y^T G'(0) x: only gluings that close exactly one curve survive.
      for (const auto& [p, y] : lowered.terms())
        for (const auto& [q, x] : upper.terms())
          if (glue_cycles(p, q) == 1) single += y * x;
    }
  } else if (options.mode == EvolutionMode::exact) {
    const auto state = evolve<LoopPoly>(target.rows, top_state<LoopPoly>(target.strand_count), options.exec, &sizes);
    single = glue_with_bottom(state).coefficient(1);
  } else {
    const auto state = evolve<Count>(target.rows, top_state<Count>(target.strand_count), options.exec, &sizes);
    single = glue_with_bottom_single(state);
  }
  if (trace) trace->absorb(sizes);
  return single * multiplicity;
}

namespace detail {

// Compiled form of a program for per-assignment walks.
struct SiteProgram {
  std::vector<Site> sites;
  Pairing top;
  std::size_t strands = 0;

  explicit SiteProgram(const MorseProgram& program)
      : sites(kolam::sites(program)), top(top_pairing(program.strand_count / 2)), strands(program.strand_count) {}
};

// Applies one choice in place; returns the number of loops it closed.
inline std::size_t apply_choice(Pairing& p, const Site& site, bool alternate) {
  if (!alternate) {
    PairingAccess::sigma(p, site.pos - 1);
    return 0;
  }
  if (site.color == SiteColor::white) return 0;
  return PairingAccess::cup_cap(p, site.pos - 1) ? 1 : 0;
}

}  // namespace detail

/// Curves in the drawing selected by `assignment`: loops closed on the way
/// down plus the curves formed when the final state meets the bottom cups.
inline std::size_t evaluate_assignment(const MorseProgram& program, const Assignment& assignment) {
  require_valid(program);
  const detail::SiteProgram compiled(program);
  if (assignment.size() != compiled.sites.size())
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " choices, program has " +
                                std::to_string(compiled.sites.size()) + " sites");
  Pairing state = compiled.top;
  std::size_t loops = 0;
  for (std::size_t j = 0; j < compiled.sites.size(); ++j)
    loops += detail::apply_choice(state, compiled.sites[j], assignment[j]);
  return loops + glue_cycles(state, compiled.top);
}

struct ComponentDistribution {
  std::map<std::size_t, Count> counts;  // curves -> number of assignments

  Count total() const {
    Count sum;
    for (const auto& [k, c] : counts) sum += c;
    return sum;
  }
  Count single() const {
    auto it = counts.find(1);
    return it == counts.end() ? Count() : it->second;
  }
  /// The same numbers as a polynomial in a.
  LoopPoly as_polynomial() const {
    std::vector<Count> coeffs;
    for (const auto& [k, c] : counts) {
      if (coeffs.size() <= k) coeffs.resize(k + 1);
      coeffs[k] = c;
    }
    return LoopPoly(std::move(coeffs));
  }
};

struct BruteOptions {
  std::size_t limit = kDefaultBruteLimit;  // largest D walked without `force`
  bool force = false;
  ExecutionOptions exec;
};

namespace detail {

inline void check_brute_limit(std::size_t d, const BruteOptions& options) {
  if (d > 63) throw LimitExceeded("exhaustive search over " + std::to_string(d) + " sites is not supported");
  if (d > options.limit && !options.force)
    throw LimitExceeded("exhaustive search over 2^" + std::to_string(d) + " assignments exceeds the limit of 2^" +
                        std::to_string(options.limit) + "; pass force to override");
}

// Depth-first walk over the choices of sites[from..] starting from `state`
// with `loops` already closed. The first site varies slowest, so leaves are
// visited in ascending assignment order. Leaf callback gets
// (assignment-suffix mask, curve count). Subtrees are pruned when
// `prune_loops` is set and a loop has closed.
template <class Leaf>
void walk(const SiteProgram& prog, std::size_t from, const Pairing& state, std::size_t loops, std::uint64_t mask,
          bool prune_loops, Leaf& leaf) {
  struct Frame {
    Pairing state;
    std::size_t loops;
  };
  const std::size_t d = prog.sites.size();
  if (from == d) {
    leaf(mask, loops + PairingAccess::glue(state, prog.top));
    return;
  }
  // Explicit stack: stack[depth] holds the state before site (from + depth).
  std::vector<Frame> stack(d - from + 1);
  std::vector<int> choice(d - from + 1, -1);
  stack[0] = {state, loops};
  std::size_t depth = 0;
  std::uint64_t bits = mask;
  while (true) {
    const std::size_t site_index = from + depth;
    if (site_index == d) {
      leaf(bits, stack[depth].loops + PairingAccess::glue(stack[depth].state, prog.top));
      if (depth == 0) return;
      --depth;
      continue;
    }
    int& c = choice[depth];
    if (c == 1) {
      c = -1;
      if (depth == 0) return;
      --depth;
      continue;
    }
    ++c;
    const std::uint64_t bit = std::uint64_t{1} << (d - 1 - site_index);
    bits = c == 1 ? (bits | bit) : (bits & ~bit);
    Frame next = stack[depth];
    next.loops += apply_choice(next.state, prog.sites[site_index], c == 1);
    if (prune_loops && next.loops > 0) continue;
    stack[depth + 1] = next;
    ++depth;
    choice[depth] = -1;
  }
}

// Splits the first `prefix_bits` sites into 2^prefix_bits independent jobs.
inline std::size_t prefix_bits_for(std::size_t d, unsigned threads) {
  if (threads <= 1) return 0;
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < std::size_t{threads} * 8 && bits < d) ++bits;
  return std::min<std::size_t>(bits, 16);
}

// Runs fn(job, start_state, loops, mask) for every prefix job on a pool.
template <class Fn>
void run_prefix_jobs(const SiteProgram& prog, std::size_t prefix_bits, unsigned threads, bool prune_loops, Fn&& fn) {
  const std::size_t d = prog.sites.size();
  const std::size_t jobs = std::size_t{1} << prefix_bits;
  auto run_job = [&](std::size_t job) {
    Pairing state = prog.top;
    std::size_t loops = 0;
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < prefix_bits; ++j) {
      const bool alt = ((job >> (prefix_bits - 1 - j)) & 1U) != 0;
      if (alt) mask |= std::uint64_t{1} << (d - 1 - j);
      loops += apply_choice(state, prog.sites[j], alt);
    }
    if (prune_loops && loops > 0) return;
    fn(job, state, loops, mask);
  };
  if (threads <= 1 || jobs == 1) {
    for (std::size_t job = 0; job < jobs; ++job) run_job(job);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t job = next++; job < jobs; job = next++) run_job(job);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Histogram of curve counts over all 2^D assignments.
inline ComponentDistribution brute_distribution(const MorseProgram& program, const BruteOptions& options = {}) {
  require_valid(program);
  const detail::SiteProgram prog(program);
  const std::size_t d = prog.sites.size();
  detail::check_brute_limit(d, options);

  const unsigned threads = options.exec.resolved_threads();
  const std::size_t prefix = detail::prefix_bits_for(d, threads);
  // At most one curve per strand pair plus one loop per black site.
  const std::size_t max_curves = prog.strands / 2 + d + 1;
  std::vector<std::vector<std::uint64_t>> per_job(std::size_t{1} << prefix, std::vector<std::uint64_t>(max_curves + 1, 0));
  detail::run_prefix_jobs(prog, prefix, threads, false,
                          [&](std::size_t job, const Pairing& state, std::size_t loops, std::uint64_t mask) {
                            auto& hist = per_job[job];
                            auto leaf = [&](std::uint64_t, std::size_t curves) { ++hist[curves]; };
                            detail::walk(prog, prefix, state, loops, mask, false, leaf);
                          });
  ComponentDistribution out;
  for (const auto& hist : per_job)
    for (std::size_t k = 0; k < hist.size(); ++k)
      if (hist[k] != 0) out.counts[k] += Count(hist[k]);
  return out;
}

/// Streams every single-curve assignment to `sink` in ascending order and
/// returns how many there were.
template <class Sink>
Count enumerate_solutions(const MorseProgram& program, Sink&& sink, const BruteOptions& options = {}) {
  require_valid(program);
  const detail::SiteProgram prog(program);
  const std::size_t d = prog.sites.size();
  detail::check_brute_limit(d, options);

  const unsigned threads = options.exec.resolved_threads();
  const std::size_t prefix = detail::prefix_bits_for(d, threads);
  std::vector<std::vector<std::uint64_t>> per_job(std::size_t{1} << prefix);
  detail::run_prefix_jobs(prog, prefix, threads, true,
                          [&](std::size_t job, const Pairing& state, std::size_t loops, std::uint64_t mask) {
                            auto& found = per_job[job];
                            auto leaf = [&](std::uint64_t bits, std::size_t curves) {
                              if (curves == 1) found.push_back(bits);
                            };
                            detail::walk(prog, prefix, state, loops, mask, true, leaf);
                          });
  Count total;
  for (const auto& found : per_job)
    for (std::uint64_t bits : found) {
      sink(Assignment::from_mask(bits, d));
      total += Count(1);
    }
  return total;
}

inline std::vector<Assignment> solutions(const MorseProgram& program, const BruteOptions& options = {}) {
  std::vector<Assignment> out;
  enumerate_solutions(program, [&](const Assignment& a) { out.push_back(a); }, options);
  return out;
}

struct StatsOptions {
  bool use_reduction = false;
  ExecutionOptions exec;
};

/// Size of the truncated (a = 0) upper-half state of a symmetric program.
struct EvolutionStats {
  Count surviving_weight;                 // loop-free diagrams in the upper half
  std::size_t distinct_states = 0;        // basis states carrying them
  std::size_t tracked_endpoints = 0;
  std::size_t state_space_dimension = 0;  // (2n - 1)!! for the tracked endpoints
  std::vector<std::size_t> row_state_sizes;
  Count middle_weight;                    // after the middle row
  std::size_t middle_distinct_states = 0;
  Count multiplicity = Count(1);          // from boundary reduction
};

inline EvolutionStats evolution_stats(const MorseProgram& program, const StatsOptions& options = {}) {
  require_valid(program);
  MorseProgram target = program;
  EvolutionStats out;
  if (options.use_reduction) {
    ReducedProgram reduced = boundary_reduce(program);
    target = std::move(reduced.program);
    out.multiplicity = reduced.multiplicity;
  }
  const Halves halves = split_halves(target);
  const auto upper =
      evolve<Count>(halves.upper, top_state<Count>(target.strand_count), options.exec, &out.row_state_sizes);
  const std::vector<Row> middle{halves.middle};
  const auto lowered = evolve<Count>(middle, upper, options.exec);
  out.surviving_weight = upper.total_weight();
  out.distinct_states = upper.size();
  out.tracked_endpoints = target.strand_count;
  out.state_space_dimension = pairing_count(target.strand_count / 2);
  out.middle_weight = lowered.total_weight();
  out.middle_distinct_states = lowered.size();
  return out;
}

}  // namespace kolam
