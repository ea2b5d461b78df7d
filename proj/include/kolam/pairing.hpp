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

// Perfect matchings of strand endpoints and the adjacent-site operators of
// the loop-counting Temperley-Lieb algebra acting on them.
//
// Endpoints are numbered 1..2n from left to right throughout the public
// interface. A Pairing is the reduced ("irreducible") form of a half
// diagram: which open strand ends are joined to which, with every closed
// loop already factored out.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kolam/errors.hpp"

namespace kolam {

inline constexpr std::size_t kMaxEndpoints = 32;

/// Largest chord count all_pairings() accepts unless told otherwise;
/// 15!! is about two million matchings.
inline constexpr std::size_t kDefaultPairingEnumerationLimit = 8;

using Chord = std::pair<std::size_t, std::size_t>;

class Pairing;
namespace detail {
struct PairingAccess;
}

class Pairing {
 public:
  Pairing() = default;

  /// partners[i - 1] is the endpoint joined to endpoint i.
  static Pairing from_partners(std::span<const std::size_t> partners) {
    if (partners.size() % 2 != 0) throw std::invalid_argument("pairing needs an even number of endpoints");
    if (partners.size() > kMaxEndpoints)
      throw std::invalid_argument("pairing supports at most " + std::to_string(kMaxEndpoints) + " endpoints");
    Pairing p;
    p.size_ = static_cast<std::uint8_t>(partners.size());
    for (std::size_t i = 0; i < partners.size(); ++i) {
      const std::size_t j = partners[i];
      if (j < 1 || j > partners.size()) throw std::invalid_argument("partner index out of range");
      if (j == i + 1) throw std::invalid_argument("endpoint " + std::to_string(j) + " is paired with itself");
      if (partners[j - 1] != i + 1) throw std::invalid_argument("partner list is not an involution");
      p.partner_[i] = static_cast<std::uint8_t>(j - 1);
    }
    return p;
  }

  static Pairing from_partners(std::initializer_list<std::size_t> partners) {
    return from_partners(std::span<const std::size_t>(partners.begin(), partners.size()));
  }

  static Pairing from_chords(std::size_t endpoints, std::span<const Chord> chords) {
    if (chords.size() * 2 != endpoints) throw std::invalid_argument("chord list does not cover every endpoint");
    std::vector<std::size_t> partners(endpoints, 0);
    for (auto [i, j] : chords) {
      if (i < 1 || j < 1 || i > endpoints || j > endpoints) throw std::invalid_argument("chord endpoint out of range");
      if (partners[i - 1] != 0 || partners[j - 1] != 0) throw std::invalid_argument("endpoint used by two chords");
      partners[i - 1] = j;
      partners[j - 1] = i;
    }
    return from_partners(partners);
  }

  static Pairing from_chords(std::size_t endpoints, std::initializer_list<Chord> chords) {
    return from_chords(endpoints, std::span<const Chord>(chords.begin(), chords.size()));
  }

  std::size_t endpoint_count() const { return size_; }
  std::size_t chord_count() const { return size_ / 2; }

  std::size_t partner(std::size_t endpoint) const {
    if (endpoint < 1 || endpoint > size_) throw std::out_of_range("endpoint " + std::to_string(endpoint) + " out of range");
    return partner_[endpoint - 1] + std::size_t{1};
  }

  bool joins(std::size_t i, std::size_t j) const { return partner(i) == j; }

  std::vector<std::size_t> partners() const {
    std::vector<std::size_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = partner_[i] + std::size_t{1};
    return out;
  }

  /// Chords (i, j) with i < j, ordered by i.
  std::vector<Chord> chords() const {
    std::vector<Chord> out;
    out.reserve(chord_count());
    for (std::size_t i = 0; i < size_; ++i)
      if (partner_[i] > i) out.emplace_back(i + 1, partner_[i] + std::size_t{1});
    return out;
  }

  /// "{(1,2),(3,4)}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto [i, j] : chords()) {
      if (!first) out += ",";
      first = false;
      out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return out + "}";
  }

  std::size_t hash() const {
    // FNV-1a over the used prefix.
    std::uint64_t h = 1469598103934665603ULL ^ size_;
    for (std::size_t i = 0; i < size_; ++i) {
      h ^= partner_[i];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  friend struct detail::PairingAccess;

  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxEndpoints> partner_{};
};

struct PairingHash {
  std::size_t operator()(const Pairing& p) const noexcept { return p.hash(); }
};

namespace detail {

// Unchecked in-place operators on 0-based positions; the hot loops of the
// engine go through these.
struct PairingAccess {
  static std::uint8_t* data(Pairing& p) { return p.partner_.data(); }
  static const std::uint8_t* data(const Pairing& p) { return p.partner_.data(); }

  // Swap the roles of positions a and a+1.
  static void sigma(Pairing& p, std::size_t a) {
    auto* m = p.partner_.data();
    const std::size_t b = a + 1;
    const std::uint8_t pa = m[a];
    const std::uint8_t pb = m[b];
    if (pa == b) return;
    m[pa] = static_cast<std::uint8_t>(b);
    m[pb] = static_cast<std::uint8_t>(a);
    m[a] = pb;
    m[b] = pa;
  }

  // Cup on (a, a+1) followed by a cap on (a, a+1). Returns true when the cup
  // closed a loop.
  static bool cup_cap(Pairing& p, std::size_t a) {
    auto* m = p.partner_.data();
    const std::size_t b = a + 1;
    const std::uint8_t pa = m[a];
    const std::uint8_t pb = m[b];
    if (pa == b) return true;
    m[pa] = pb;
    m[pb] = pa;
    m[a] = static_cast<std::uint8_t>(b);
    m[b] = static_cast<std::uint8_t>(a);
    return false;
  }

  static std::size_t glue(const Pairing& p, const Pairing& q) {
    const std::size_t n = p.size_;
    std::array<bool, kMaxEndpoints> seen{};
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start]) continue;
      ++cycles;
      std::size_t x = start;
      do {
        seen[x] = true;
        const std::size_t y = p.partner_[x];
        seen[y] = true;
        x = q.partner_[y];
      } while (x != start);
    }
    return cycles;
  }

  static Pairing adjacent(std::size_t endpoints) {
    Pairing p;
    p.size_ = static_cast<std::uint8_t>(endpoints);
    for (std::size_t i = 0; i + 1 < endpoints; i += 2) {
      p.partner_[i] = static_cast<std::uint8_t>(i + 1);
      p.partner_[i + 1] = static_cast<std::uint8_t>(i);
    }
    return p;
  }
};

inline void check_adjacent_index(const Pairing& p, std::size_t i) {
  if (i < 1 || i + 1 > p.endpoint_count())
    throw std::out_of_range("site index " + std::to_string(i) + " outside 1.." +
                            std::to_string(p.endpoint_count() == 0 ? 0 : p.endpoint_count() - 1));
}

}  // namespace detail

/// The state of n adjacent caps {(1,2),(3,4),...,(2n-1,2n)}. Read as cups it
/// is the bottom state as well, since transposition maps one onto the other.
inline Pairing top_pairing(std::size_t n_chords) {
  if (n_chords < 1) throw std::invalid_argument("top_pairing needs at least one chord");
  if (2 * n_chords > kMaxEndpoints) throw std::invalid_argument("too many chords for a Pairing");
  return detail::PairingAccess::adjacent(2 * n_chords);
}

/// Crossing at (i, i+1): endpoints i and i+1 exchange partners. A chord
/// joining i and i+1 absorbs the crossing.
inline Pairing sigma_apply(const Pairing& p, std::size_t i) {
  detail::check_adjacent_index(p, i);
  Pairing out = p;
  detail::PairingAccess::sigma(out, i - 1);
  return out;
}

struct CupCapResult {
  Pairing pairing;
  int loop_closed = 0;

  friend bool operator==(const CupCapResult&, const CupCapResult&) = default;
};

/// U at (i, i+1): the cup joins the strands arriving at i and i+1, the cap
/// starts a fresh chord (i, i+1). If i and i+1 were already joined the cup
/// closes a loop.
inline CupCapResult u_apply(const Pairing& p, std::size_t i) {
  detail::check_adjacent_index(p, i);
  CupCapResult out{p, 0};
  out.loop_closed = detail::PairingAccess::cup_cap(out.pairing, i - 1) ? 1 : 0;
  return out;
}

/// Number of closed curves formed by laying the chords of p against the
/// chords of q; <p|q> = a^glue_cycles(p, q).
inline std::size_t glue_cycles(const Pairing& p, const Pairing& q) {
  if (p.endpoint_count() != q.endpoint_count())
    throw std::invalid_argument("glue_cycles on pairings of different sizes (" + std::to_string(p.endpoint_count()) +
                                " vs " + std::to_string(q.endpoint_count()) + ")");
  return detail::PairingAccess::glue(p, q);
}

/// (2n - 1)!!
inline std::uint64_t pairing_count(std::size_t n_chords) {
  std::uint64_t out = 1;
  for (std::size_t k = 3; k < 2 * n_chords; k += 2) out *= k;
  return out;
}

/// Calls fn(const Pairing&) once for every perfect matching on 2n endpoints,
/// in a fixed order (the lowest free endpoint takes partners in ascending
/// order).
template <class Fn>
void for_each_pairing(std::size_t n_chords, Fn&& fn, std::size_t limit = kDefaultPairingEnumerationLimit) {
  if (n_chords > limit)
    throw LimitExceeded("pairing enumeration over " + std::to_string(n_chords) + " chords exceeds the limit of " +
                        std::to_string(limit));
  if (2 * n_chords > kMaxEndpoints) throw LimitExceeded("too many chords for a Pairing");
  Pairing p;
  if (n_chords == 0) {
    fn(static_cast<const Pairing&>(p));
    return;
  }
  // Build partners incrementally: the lowest free endpoint is always joined
  // to some higher free endpoint, which yields each matching exactly once.
  std::vector<std::size_t> partners(2 * n_chords, 0);
  std::function<void()> recurse = [&]() {
    std::size_t first = 0;
    while (first < partners.size() && partners[first] != 0) ++first;
    if (first == partners.size()) {
      fn(static_cast<const Pairing&>(Pairing::from_partners(partners)));
      return;
    }
    for (std::size_t j = first + 1; j < partners.size(); ++j) {
      if (partners[j] != 0) continue;
      partners[first] = j + 1;
      partners[j] = first + 1;
      recurse();
      partners[first] = 0;
      partners[j] = 0;
    }
  };
  recurse();
}

inline std::vector<Pairing> all_pairings(std::size_t n_chords, std::size_t limit = kDefaultPairingEnumerationLimit) {
  std::vector<Pairing> out;
  for_each_pairing(n_chords, [&](const Pairing& p) { out.push_back(p); }, limit);
  return out;
}

}  // namespace kolam

template <>
struct std::hash<kolam::Pairing> {
  std::size_t operator()(const kolam::Pairing& p) const noexcept { return p.hash(); }
};
