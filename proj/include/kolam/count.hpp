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
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kolam/errors.hpp"

namespace kolam {

__extension__ typedef unsigned __int128 uint128;

/// Exact nonnegative counter, 128 bits wide. Every arithmetic operation is
/// checked; on overflow an OverflowError is thrown instead of wrapping.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr Count from_raw(uint128 v) {
    Count c;
    c.value_ = v;
    return c;
  }

  /// 2^k; throws for k >= 128.
  static Count pow2(unsigned k) {
    if (k >= 128) throw OverflowError("2^" + std::to_string(k) + " does not fit in 128 bits");
    return from_raw(uint128{1} << k);
  }

  static Count parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty count");
    Count out;
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal count: " + std::string(text));
      out = out * Count(10) + Count(static_cast<std::uint64_t>(ch - '0'));
    }
    return out;
  }

  constexpr uint128 raw() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  bool fits_u64() const { return value_ <= std::numeric_limits<std::uint64_t>::max(); }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw OverflowError("count " + to_string() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(value_);
  }

  Count& operator+=(Count rhs) {
    uint128 sum;
    if (__builtin_add_overflow(value_, rhs.value_, &sum)) throw OverflowError("count addition overflowed 128 bits");
    value_ = sum;
    return *this;
  }
  Count& operator*=(Count rhs) {
    uint128 prod;
    if (__builtin_mul_overflow(value_, rhs.value_, &prod)) throw OverflowError("count multiplication overflowed 128 bits");
    value_ = prod;
    return *this;
  }
  friend Count operator+(Count lhs, Count rhs) { return lhs += rhs; }
  friend Count operator*(Count lhs, Count rhs) { return lhs *= rhs; }

  friend constexpr bool operator==(Count, Count) = default;
  friend constexpr auto operator<=>(Count, Count) = default;

  std::string to_string() const {
    if (value_ == 0) return "0";
    std::string digits;
    for (uint128 v = value_; v != 0; v /= 10) digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  friend std::ostream& operator<<(std::ostream& os, Count c) { return os << c.to_string(); }

 private:
  uint128 value_ = 0;
};

/// Decimal rendering of 100 * numerator / denominator, rounded half-up to
/// `significant` significant digits. Works on the exact rational value.
inline std::string format_percentage(Count numerator, Count denominator, int significant = 7) {
  if (denominator.is_zero()) throw std::invalid_argument("zero denominator");
  if (significant < 1) throw std::invalid_argument("need at least one significant digit");
  if (numerator.is_zero()) return "0";

  auto pow10 = [](int k) {
    Count p(1);
    for (int i = 0; i < k; ++i) p *= Count(10);
    return p;
  };
  const Count scaled = numerator * Count(100);

  // Decimal exponent of the value: 10^e <= scaled / denominator < 10^(e+1).
  int e = 0;
  auto at_least = [&](int exp) {
    return exp >= 0 ? scaled >= denominator * pow10(exp) : scaled * pow10(-exp) >= denominator;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;

  // digits = round(value * 10^(significant - 1 - e)), half-up.
  const int shift = significant - 1 - e;
  Count num = shift >= 0 ? scaled * pow10(shift) : scaled;
  Count den = shift >= 0 ? denominator : denominator * pow10(-shift);
  Count digits = Count::from_raw((num + Count::from_raw(den.raw() / 2)).raw() / den.raw());
  if (digits == pow10(significant)) {
    digits = pow10(significant - 1);
    ++e;
  }

  std::string text = digits.to_string();
  const int point = e + 1;  // digits before the decimal point
  if (point <= 0) return "0." + std::string(static_cast<std::size_t>(-point), '0') + text;
  if (point >= static_cast<int>(text.size())) return text + std::string(static_cast<std::size_t>(point) - text.size(), '0');
  return text.substr(0, static_cast<std::size_t>(point)) + "." + text.substr(static_cast<std::size_t>(point));
}

}  // namespace kolam
