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

// Drawing a diamond Kolam on its dot grid.
//
// Dots sit at integer points with |x| + |y| <= N. Every dot is ringed by four
// quarter arcs joining the midpoints of its four edges (N, E, S, W). A
// midpoint shared by two dots is a site; there four arc ends meet and the
// site choice decides how they pair up. A midpoint of a single dot just
// joins that dot's two arcs.
//
// Coordinates below are doubled so that all midpoints are integral: the
// midpoint between dots (x, y) and (x, y - 1) is (2x, 2y - 1).
//
// Site j of the diamond program (row r, position p, rows counted from 1)
// lives at doubled point (p - 2N - 1, 2N - r). Black rows land on vertical
// dot pairs, white rows on horizontal ones.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kolam/assignment.hpp"
#include "kolam/morse.hpp"

namespace kolam {

struct Dot {
  int x = 0;
  int y = 0;

  friend bool operator==(const Dot&, const Dot&) = default;
  friend auto operator<=>(const Dot&, const Dot&) = default;
};

// Quadrant arcs of a dot, named by the two midpoints they join.
enum class Quadrant { north_east = 0, south_east = 1, south_west = 2, north_west = 3 };

struct ArcRef {
  std::size_t dot = 0;  // index into KolamLayout::dots
  Quadrant quadrant = Quadrant::north_east;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

struct SiteGeometry {
  SiteColor color = SiteColor::black;
  int dx = 0;  // doubled coordinates of the midpoint
  int dy = 0;
  // Black: first = upper dot, second = lower dot. White: first = left dot,
  // second = right dot.
  std::size_t first = 0;
  std::size_t second = 0;
};

struct KolamLayout {
  std::size_t n = 0;
  std::vector<Dot> dots;            // row by row from the top, left to right
  std::vector<SiteGeometry> sites;  // program order of diamond_program(n)

  std::optional<std::size_t> dot_index(int x, int y) const {
    auto it = index_.find({x, y});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::map<std::pair<int, int>, std::size_t> index_;
};

inline KolamLayout layout(std::size_t n) {
  if (n < 1) throw std::invalid_argument("diamond size must be at least 1");
  const MorseProgram program = diamond_program(n);
  KolamLayout out;
  out.n = n;
  const int N = static_cast<int>(n);
  for (int y = N; y >= -N; --y)
    for (int x = -N; x <= N; ++x)
      if (std::abs(x) + std::abs(y) <= N) {
        out.index_[{x, y}] = out.dots.size();
        out.dots.push_back({x, y});
      }

  for (std::size_t r = 0; r < program.rows.size(); ++r) {
    const Row& row = program.rows[r];
    for (std::size_t pos : row.positions) {
      SiteGeometry g;
      g.color = row.color;
      g.dx = static_cast<int>(pos) - 2 * N - 1;
      g.dy = 2 * N - static_cast<int>(r + 1);
      std::optional<std::size_t> a, b;
      if (row.color == SiteColor::black) {
        a = out.dot_index(g.dx / 2, (g.dy + 1) / 2);
        b = out.dot_index(g.dx / 2, (g.dy - 1) / 2);
      } else {
        a = out.dot_index((g.dx - 1) / 2, g.dy / 2);
        b = out.dot_index((g.dx + 1) / 2, g.dy / 2);
      }
      if (!a || !b) throw std::logic_error("site does not sit between two dots");
      g.first = *a;
      g.second = *b;
      out.sites.push_back(g);
    }
  }
  return out;
}

/// Diamond size of `program` if its rows are exactly a diamond grid.
inline std::optional<std::size_t> diamond_size_of(const MorseProgram& program) {
  if (program.strand_count < 6 || (program.strand_count - 2) % 4 != 0) return std::nullopt;
  const std::size_t n = (program.strand_count - 2) / 4;
  MorseProgram grid = diamond_program(n);
  grid.diamond_size.reset();
  MorseProgram bare = program;
  bare.diamond_size.reset();
  if (bare != grid) return std::nullopt;
  return n;
}

/// One closed curve: its arcs in drawing order, with a flag per arc telling
/// whether it is traversed clockwise around its dot.
struct TracedCurve {
  std::vector<ArcRef> arcs;
  std::vector<bool> clockwise;
};

namespace detail {

// End e of quadrant q: arcs run clockwise from end 0 to end 1.
//   NE: N -> E   SE: E -> S   SW: S -> W   NW: W -> N
enum Side { north = 0, east = 1, south = 2, west = 3 };

inline Side arc_end_side(Quadrant q, int end) {
  static constexpr Side table[4][2] = {{north, east}, {east, south}, {south, west}, {west, north}};
  return table[static_cast<int>(q)][end];
}

inline std::pair<int, int> side_midpoint(const Dot& d, Side s) {
  switch (s) {
    case north: return {2 * d.x, 2 * d.y + 1};
    case east: return {2 * d.x + 1, 2 * d.y};
    case south: return {2 * d.x, 2 * d.y - 1};
    default: return {2 * d.x - 1, 2 * d.y};
  }
}

// Arc end slot: (arc index = dot * 4 + quadrant) * 2 + end.
inline std::size_t slot(std::size_t dot, Quadrant q, int end) {
  return (dot * 4 + static_cast<std::size_t>(q)) * 2 + static_cast<std::size_t>(end);
}

// Partner of every arc end under `assignment`, plus which ends meet at a
// turn (anything but a straight crossing).
struct Junctions {
  std::vector<std::size_t> partner;
  std::vector<bool> turn;
};

inline Junctions junctions(const KolamLayout& layout, const Assignment& assignment) {
  const std::size_t slots = layout.dots.size() * 8;
  Junctions j{std::vector<std::size_t>(slots, slots), std::vector<bool>(slots, true)};
  auto link = [&](std::size_t a, std::size_t b, bool turn) {
    j.partner[a] = b;
    j.partner[b] = a;
    j.turn[a] = turn;
    j.turn[b] = turn;
  };

  // Sites first; every other midpoint belongs to one dot.
  std::vector<std::vector<bool>> at_site(layout.dots.size(), std::vector<bool>(4, false));
  for (std::size_t s = 0; s < layout.sites.size(); ++s) {
    const SiteGeometry& g = layout.sites[s];
    const bool alt = assignment[s];
    std::size_t nw, ne, sw, se;
    if (g.color == SiteColor::black) {
      nw = slot(g.first, Quadrant::south_west, 0);
      ne = slot(g.first, Quadrant::south_east, 1);
      sw = slot(g.second, Quadrant::north_west, 1);
      se = slot(g.second, Quadrant::north_east, 0);
      at_site[g.first][south] = true;
      at_site[g.second][north] = true;
      if (alt) {
        link(nw, ne, true);
        link(sw, se, true);
      } else {
        link(nw, se, false);
        link(ne, sw, false);
      }
    } else {
      nw = slot(g.first, Quadrant::north_east, 1);
      sw = slot(g.first, Quadrant::south_east, 0);
      ne = slot(g.second, Quadrant::north_west, 0);
      se = slot(g.second, Quadrant::south_west, 1);
      at_site[g.first][east] = true;
      at_site[g.second][west] = true;
      if (alt) {
        link(nw, sw, true);
        link(ne, se, true);
      } else {
        link(nw, se, false);
        link(ne, sw, false);
      }
    }
  }
  for (std::size_t d = 0; d < layout.dots.size(); ++d) {
    if (!at_site[d][north]) link(slot(d, Quadrant::north_west, 1), slot(d, Quadrant::north_east, 0), true);
    if (!at_site[d][east]) link(slot(d, Quadrant::north_east, 1), slot(d, Quadrant::south_east, 0), true);
    if (!at_site[d][south]) link(slot(d, Quadrant::south_east, 1), slot(d, Quadrant::south_west, 0), true);
    if (!at_site[d][west]) link(slot(d, Quadrant::south_west, 1), slot(d, Quadrant::north_west, 0), true);
  }
  return j;
}

}  // namespace detail

/// Follows the arcs through every site. Curves come out in order of their
/// lowest arc; each starts at that arc, running clockwise.
inline std::vector<TracedCurve> trace_curves(const KolamLayout& layout, const Assignment& assignment) {
  if (assignment.size() != layout.sites.size())
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " choices, grid has " +
                                std::to_string(layout.sites.size()) + " sites");
  const detail::Junctions j = detail::junctions(layout, assignment);
  const std::size_t arcs = layout.dots.size() * 4;
  std::vector<bool> seen(arcs, false);
  std::vector<TracedCurve> out;
  for (std::size_t start = 0; start < arcs; ++start) {
    if (seen[start]) continue;
    TracedCurve curve;
    std::size_t arc = start;
    int entry = 0;
    do {
      seen[arc] = true;
      curve.arcs.push_back({arc / 4, static_cast<Quadrant>(arc % 4)});
      curve.clockwise.push_back(entry == 0);
      const std::size_t next = j.partner[arc * 2 + static_cast<std::size_t>(1 - entry)];
      arc = next / 2;
      entry = static_cast<int>(next % 2);
    } while (arc != start);
    out.push_back(std::move(curve));
  }
  return out;
}

inline std::size_t curve_count(const KolamLayout& layout, const Assignment& assignment) {
  return trace_curves(layout, assignment).size();
}

struct RenderStyle {
  double unit = 40.0;  // user units per dot spacing
  double dot_radius = 3.0;
  double stroke_width = 2.5;
  double recoil_gap = 0.12;  // pull-back of turning arcs, in dot spacings
  bool show_dots = true;
  std::string curve_color = "#b3261e";
  std::string dot_color = "#202020";
  std::string background = "#fffdf5";
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace detail

/// SVG of one diamond Kolam: one <path class="curve"> per closed curve and
/// one <circle class="dot"> per dot. Output is deterministic.
inline std::string render_svg(const KolamLayout& layout, const Assignment& assignment, const RenderStyle& style = {}) {
  const auto curves = trace_curves(layout, assignment);
  const detail::Junctions j = detail::junctions(layout, assignment);
  const double n = static_cast<double>(layout.n);
  const double u = style.unit;
  const double size = u * (2 * n + 2);
  auto ux = [&](double x) { return u * (x + n + 1); };
  auto uy = [&](double y) { return u * (n + 1 - y); };

  // Arc end in real coordinates; turning ends are pulled toward their dot.
  auto end_point = [&](std::size_t arc, int end) {
    const Dot& d = layout.dots[arc / 4];
    const auto [mx, my] = detail::side_midpoint(d, detail::arc_end_side(static_cast<Quadrant>(arc % 4), end));
    double x = mx / 2.0;
    double y = my / 2.0;
    if (j.turn[arc * 2 + static_cast<std::size_t>(end)]) {
      x += (d.x - x) * 2 * style.recoil_gap;
      y += (d.y - y) * 2 * style.recoil_gap;
    }
    return std::pair<double, double>{x, y};
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(size) + "\" height=\"" + detail::fmt(size) +
         "\" viewBox=\"0 0 " + detail::fmt(size) + " " + detail::fmt(size) + "\">\n";
  out += "  <title>Kolam N=" + std::to_string(layout.n) + " assignment " + assignment.to_hex() + " curves " +
         std::to_string(curves.size()) + "</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"" + style.background + "\"/>\n";
  if (style.show_dots) {
    out += "  <g class=\"dots\" fill=\"" + style.dot_color + "\">\n";
    for (const Dot& d : layout.dots)
      out += "    <circle class=\"dot\" cx=\"" + detail::fmt(ux(d.x)) + "\" cy=\"" + detail::fmt(uy(d.y)) + "\" r=\"" +
             detail::fmt(style.dot_radius) + "\"/>\n";
    out += "  </g>\n";
  }
  out += "  <g class=\"curves\" fill=\"none\" stroke=\"" + style.curve_color + "\" stroke-width=\"" +
         detail::fmt(style.stroke_width) + "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  for (const auto& curve : curves) {
    std::string d;
    for (std::size_t k = 0; k < curve.arcs.size(); ++k) {
      const ArcRef& arc = curve.arcs[k];
      const std::size_t id = arc.dot * 4 + static_cast<std::size_t>(arc.quadrant);
      const int from = curve.clockwise[k] ? 0 : 1;
      const auto [x0, y0] = end_point(id, from);
      const auto [x1, y1] = end_point(id, 1 - from);
      const Dot& dot = layout.dots[arc.dot];
      const auto [ax, ay] = detail::side_midpoint(dot, detail::arc_end_side(arc.quadrant, 0));
      const auto [bx, by] = detail::side_midpoint(dot, detail::arc_end_side(arc.quadrant, 1));
      const double cx = (ax + bx) / 2.0 - dot.x;
      const double cy = (ay + by) / 2.0 - dot.y;
      if (k == 0) d += "M" + detail::fmt(ux(x0)) + " " + detail::fmt(uy(y0));
      d += " Q" + detail::fmt(ux(cx)) + " " + detail::fmt(uy(cy)) + " " + detail::fmt(ux(x1)) + " " + detail::fmt(uy(y1));
    }
    out += "    <path class=\"curve\" d=\"" + d + " Z\"/>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

inline std::string render_svg(std::size_t n, const Assignment& assignment, const RenderStyle& style = {}) {
  return render_svg(layout(n), assignment, style);
}

}  // namespace kolam
