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

// Counts one-line diamond Kolams for N = 1..4 and draws the first N = 2
// solution.
//
//   sample_count [out.svg]

#include <fstream>
#include <iostream>

#include "kolam/kolam.hpp"

int main(int argc, char** argv) {
  kolam::CountOptions options;
  options.use_split = true;
  options.use_reduction = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    const kolam::MorseProgram program = kolam::diamond_program(n);
    const kolam::Count count = kolam::count_infinite(program, options);
    const auto sites = kolam::site_count(program);
    std::cout << "N=" << n << "  D=" << sites << "  one-line drawings: " << count << "  ("
              << kolam::format_percentage(count, kolam::Count::pow2(static_cast<unsigned>(sites))) << "%)\n";
  }

  const auto first = kolam::solutions(kolam::diamond_program(2)).front();
  std::cout << "first N=2 solution: " << first.to_hex() << "\n";
  if (argc > 1) {
    std::ofstream(argv[1]) << kolam::render_svg(2, first);
    std::cout << "wrote " << argv[1] << "\n";
  }
}
