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
#include <string>
#include <utility>
#include <vector>

#include "kolam/count.hpp"

namespace kolam {

/// Polynomial in the loop variable `a` with exact nonnegative coefficients.
/// coefficients()[k] is the coefficient of a^k; trailing zeros are never
/// stored, so the zero polynomial has no coefficients at all.
class LoopPoly {
 public:
  LoopPoly() = default;
  explicit LoopPoly(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static LoopPoly constant(Count c) { return monomial(0, c); }
  static LoopPoly monomial(std::size_t power, Count c = Count(1)) {
    if (c.is_zero()) return {};
    std::vector<Count> coeffs(power + 1);
    coeffs[power] = c;
    return LoopPoly(std::move(coeffs));
  }

  const std::vector<Count>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Highest power with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  Count coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Count(); }

  /// P(1): the total number of terms folded into this polynomial.
  Count evaluate_at_one() const {
    Count sum;
    for (Count c : coeffs_) sum += c;
    return sum;
  }

  LoopPoly& operator+=(const LoopPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }

  /// Multiplies by a^power.
  LoopPoly shifted(std::size_t power) const {
    if (is_zero() || power == 0) return *this;
    std::vector<Count> coeffs(power, Count());
    coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
    return LoopPoly(std::move(coeffs));
  }

  friend LoopPoly operator+(LoopPoly lhs, const LoopPoly& rhs) { return lhs += rhs; }

  friend LoopPoly operator*(const LoopPoly& lhs, const LoopPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Count> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return LoopPoly(std::move(out));
  }

  friend bool operator==(const LoopPoly&, const LoopPoly&) = default;

  /// Human-readable form, lowest power first: "2 + a + 3a^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      const bool unit = coeffs_[k] == Count(1);
      if (k == 0 || !unit) out += coeffs_[k].to_string();
      if (k >= 1) out += "a";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Count> coeffs_;
};

inline LoopPoly add(const LoopPoly& lhs, const LoopPoly& rhs) { return lhs + rhs; }
inline LoopPoly shift_by_a(const LoopPoly& p) { return p.shifted(1); }
inline Count coefficient(const LoopPoly& p, std::size_t power) { return p.coefficient(power); }

}  // namespace kolam
