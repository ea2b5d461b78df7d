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

// Text format for Morse programs.
//
//   program  := line*
//   line     := blank | comment | header | row
//   comment  := '#' anything
//   header   := 'strands' WS even-integer            (exactly once, before rows)
//   diamond  := 'diamond' WS positive-integer        (optional, before rows)
//   row      := ('B' | 'W') (WS positive-integer)*
//
// A 'diamond N' line marks the program as the diamond grid of size N; the
// parser then requires the rows to be exactly that grid.
//
// Tokens are separated by spaces or tabs. A row with no positions is a
// legal, empty row. Anything after '#' on a line is ignored. The parsed
// program must pass validate().

#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kolam/morse.hpp"

namespace kolam {

class ProgramParseError : public std::invalid_argument {
 public:
  ProgramParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {
inline std::size_t parse_positive(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ProgramParseError(line, "expected a positive integer, got '" + token + "'");
  if (token.size() > 6) throw ProgramParseError(line, "integer '" + token + "' is too large");
  const std::size_t v = std::stoul(token);
  if (v == 0) throw ProgramParseError(line, "expected a positive integer, got '" + token + "'");
  return v;
}
}  // namespace detail

inline MorseProgram parse_program(std::istream& in) {
  MorseProgram program;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::string head;
    if (!(tokens >> head)) continue;
    if (head == "strands") {
      if (have_header) throw ProgramParseError(line_no, "duplicate 'strands' header");
      if (!program.rows.empty()) throw ProgramParseError(line_no, "'strands' header must precede all rows");
      std::string value;
      if (!(tokens >> value)) throw ProgramParseError(line_no, "'strands' needs a value");
      program.strand_count = detail::parse_positive(value, line_no);
      std::string extra;
      if (tokens >> extra) throw ProgramParseError(line_no, "unexpected token '" + extra + "'");
      have_header = true;
    } else if (head == "diamond") {
      if (program.diamond_size) throw ProgramParseError(line_no, "duplicate 'diamond' line");
      if (!program.rows.empty()) throw ProgramParseError(line_no, "'diamond' must precede all rows");
      std::string value;
      if (!(tokens >> value)) throw ProgramParseError(line_no, "'diamond' needs a value");
      program.diamond_size = detail::parse_positive(value, line_no);
      std::string extra;
      if (tokens >> extra) throw ProgramParseError(line_no, "unexpected token '" + extra + "'");
    } else if (head == "B" || head == "W") {
      if (!have_header) throw ProgramParseError(line_no, "row before 'strands' header");
      Row row;
      row.color = head == "B" ? SiteColor::black : SiteColor::white;
      std::string token;
      while (tokens >> token) row.positions.push_back(detail::parse_positive(token, line_no));
      program.rows.push_back(std::move(row));
    } else {
      throw ProgramParseError(line_no, "unknown directive '" + head + "'");
    }
  }
  if (!have_header) throw ProgramParseError(line_no, "missing 'strands' header");
  require_valid(program);
  if (program.diamond_size) {
    const std::size_t n = *program.diamond_size;
    if (4 * n + 2 > kMaxEndpoints || program != diamond_program(n))
      throw ProgramParseError(line_no, "rows do not form the diamond grid of size " + std::to_string(n));
  }
  return program;
}

inline MorseProgram parse_program(const std::string& text) {
  std::istringstream in(text);
  return parse_program(in);
}

inline MorseProgram load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open program file '" + path + "'");
  return parse_program(in);
}

inline std::string format_program(const MorseProgram& program) {
  std::ostringstream out;
  out << "strands " << program.strand_count << "\n";
  if (program.diamond_size) out << "diamond " << *program.diamond_size << "\n";
  for (const auto& row : program.rows) {
    out << color_letter(row.color);
    for (std::size_t pos : row.positions) out << ' ' << pos;
    out << "\n";
  }
  return out.str();
}

}  // namespace kolam
