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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kolam {

/// One choice per site in program order: false = cross, true = the
/// alternate (cup-and-cap at black sites, recoil at white sites).
///
/// Wire form: the choices read as a binary number with the first site as the
/// most significant bit, written in lowercase hex and zero-padded to
/// ceil(D / 4) digits. Ascending numeric order is therefore the
/// lexicographic order of the choice sequence.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t sites) : choices_(sites, false) {}
  explicit Assignment(std::vector<bool> choices) : choices_(std::move(choices)) {}

  /// Requires sites <= 64.
  static Assignment from_mask(std::uint64_t mask, std::size_t sites) {
    if (sites > 64) throw std::invalid_argument("from_mask supports at most 64 sites");
    if (sites < 64 && (mask >> sites) != 0) throw std::invalid_argument("mask has bits beyond the site count");
    Assignment a(sites);
    for (std::size_t j = 0; j < sites; ++j) a.choices_[j] = ((mask >> (sites - 1 - j)) & 1U) != 0;
    return a;
  }

  static Assignment from_hex(std::string_view hex, std::size_t sites) {
    const std::size_t digits = (sites + 3) / 4;
    if (hex.size() != digits)
      throw std::invalid_argument("assignment for " + std::to_string(sites) + " sites needs " + std::to_string(digits) +
                                  " hex digits, got " + std::to_string(hex.size()));
    std::vector<bool> bits;
    bits.reserve(digits * 4);
    for (char ch : hex) {
      int v;
      if (ch >= '0' && ch <= '9') v = ch - '0';
      else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
      else throw std::invalid_argument(std::string("bad hex digit '") + ch + "'");
      for (int b = 3; b >= 0; --b) bits.push_back(((v >> b) & 1) != 0);
    }
    const std::size_t pad = digits * 4 - sites;
    for (std::size_t i = 0; i < pad; ++i)
      if (bits[i]) throw std::invalid_argument("assignment has bits beyond the site count");
    return Assignment(std::vector<bool>(bits.begin() + static_cast<std::ptrdiff_t>(pad), bits.end()));
  }

  std::size_t size() const { return choices_.size(); }
  bool operator[](std::size_t j) const { return choices_[j]; }
  void set(std::size_t j, bool alternate) { choices_.at(j) = alternate; }
  const std::vector<bool>& choices() const { return choices_; }

  std::uint64_t to_mask() const {
    if (size() > 64) throw std::invalid_argument("to_mask supports at most 64 sites");
    std::uint64_t mask = 0;
    for (bool c : choices_) mask = (mask << 1) | (c ? 1U : 0U);
    return mask;
  }

  std::string to_hex() const {
    const std::size_t digits = (size() + 3) / 4;
    const std::size_t pad = digits * 4 - size();
    std::string out;
    out.reserve(digits);
    int acc = 0;
    for (std::size_t i = 0; i < digits * 4; ++i) {
      const bool bit = i >= pad && choices_[i - pad];
      acc = (acc << 1) | (bit ? 1 : 0);
      if (i % 4 == 3) {
        out.push_back("0123456789abcdef"[acc]);
        acc = 0;
      }
    }
    return out;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> choices_;
};

}  // namespace kolam
