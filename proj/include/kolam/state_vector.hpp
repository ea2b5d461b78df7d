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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kolam/count.hpp"
#include "kolam/loop_poly.hpp"
#include "kolam/pairing.hpp"

namespace kolam {

enum class EvolutionMode { exact, a0 };

inline const char* to_string(EvolutionMode m) { return m == EvolutionMode::exact ? "exact" : "a0"; }

/// What a state coefficient does when a loop closes. Exact polynomials are
/// multiplied by a; truncated integers (a^2 = 0 in effect) lose the term.
template <class Coeff>
struct CoefficientTraits;

template <>
struct CoefficientTraits<LoopPoly> {
  static constexpr EvolutionMode mode = EvolutionMode::exact;
  static bool is_zero(const LoopPoly& c) { return c.is_zero(); }
  static std::optional<LoopPoly> close_loops(const LoopPoly& c, std::size_t loops) { return c.shifted(loops); }
  static Count weight(const LoopPoly& c) { return c.evaluate_at_one(); }
  static Count loop_free(const LoopPoly& c) { return c.coefficient(0); }
};

template <>
struct CoefficientTraits<Count> {
  static constexpr EvolutionMode mode = EvolutionMode::a0;
  static bool is_zero(const Count& c) { return c.is_zero(); }
  static std::optional<Count> close_loops(const Count& c, std::size_t loops) {
    if (loops == 0) return c;
    return std::nullopt;
  }
  static Count weight(const Count& c) { return c; }
  static Count loop_free(const Count& c) { return c; }
};

/// Sparse linear combination of basis states (Pairings) over a coefficient
/// ring: LoopPoly for exact evolution, Count for the a = 0 truncation.
/// Zero coefficients are never stored.
template <class Coeff>
class BasicStateVector {
 public:
  using coefficient_type = Coeff;
  using traits = CoefficientTraits<Coeff>;
  using map_type = std::unordered_map<Pairing, Coeff, PairingHash>;

  BasicStateVector() = default;
  explicit BasicStateVector(std::size_t endpoints) : endpoints_(endpoints) {}

  static BasicStateVector single(const Pairing& p, Coeff c) {
    BasicStateVector out(p.endpoint_count());
    out.add(p, std::move(c));
    return out;
  }

  static constexpr EvolutionMode mode() { return traits::mode; }

  std::size_t endpoint_count() const { return endpoints_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  void reserve(std::size_t n) { terms_.reserve(n); }

  void add(const Pairing& p, const Coeff& c) {
    if (traits::is_zero(c)) return;
    if (p.endpoint_count() != endpoints_)
      throw std::invalid_argument("state over " + std::to_string(p.endpoint_count()) +
                                  " endpoints added to a vector over " + std::to_string(endpoints_));
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) it->second += c;
  }

  void merge(const BasicStateVector& other) {
    if (other.endpoints_ != endpoints_) throw std::invalid_argument("merging state vectors of different sizes");
    if (terms_.empty()) {
      terms_ = other.terms_;
      return;
    }
    for (const auto& [p, c] : other.terms_) add(p, c);
  }

  Coeff coefficient(const Pairing& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  const map_type& terms() const { return terms_; }

  /// Terms ordered by Pairing, for deterministic output.
  std::vector<std::pair<Pairing, Coeff>> sorted_terms() const {
    std::vector<std::pair<Pairing, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  }

  /// Number of diagrams folded into this vector (every coefficient at a = 1).
  Count total_weight() const {
    Count sum;
    for (const auto& [p, c] : terms_) sum += traits::weight(c);
    return sum;
  }

  friend bool operator==(const BasicStateVector& l, const BasicStateVector& r) {
    return l.endpoints_ == r.endpoints_ && l.terms_ == r.terms_;
  }

 private:
  std::size_t endpoints_ = 0;
  map_type terms_;
};

using StateVector = BasicStateVector<LoopPoly>;
using TruncatedStateVector = BasicStateVector<Count>;

}  // namespace kolam
