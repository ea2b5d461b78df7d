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

// The `kolam` command line. run_cli() is the whole program; main() only
// forwards argv, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verify found disagreeing paths, 2 bad usage or
// input, 3 a size limit was hit, 4 arithmetic overflow, 5 I/O failure.

#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kolam/kolam.hpp"
#include "report.hpp"

namespace kolam::cli {

enum ExitCode { kOk = 0, kDisagree = 1, kUsage = 2, kLimit = 3, kOverflow = 4, kIo = 5 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Target {
  std::optional<std::size_t> diamond;
  std::string program_file;
  bool json = false;
  unsigned threads = 0;
  std::size_t state_budget = 0;

  MorseProgram load() const {
    if (diamond) return diamond_program(*diamond);
    return load_program(program_file);
  }

  Json describe(const MorseProgram& p) const {
    Json out;
    if (diamond) out["diamond"] = *diamond;
    else out["file"] = program_file;
    out["strands"] = p.strand_count;
    out["rows"] = p.rows.size();
    out["sites"] = site_count(p);
    return out;
  }

  ExecutionOptions exec() const { return {threads, state_budget}; }
};

struct BruteFlags {
  std::optional<std::size_t> limit;
  bool force = false;

  BruteOptions options(const ExecutionOptions& exec) const {
    BruteOptions out;
    out.limit = kDefaultBruteLimit;
    if (const char* env = std::getenv("KOLAM_BRUTE_LIMIT"); env && *env) {
      try {
        out.limit = std::stoul(env);
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string("KOLAM_BRUTE_LIMIT is not a number: ") + env);
      }
    }
    if (limit) out.limit = *limit;
    out.force = force;
    out.exec = exec;
    return out;
  }
};

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void add_target(CLI::App* sub, Target& t) {
  auto* d = sub->add_option("--diamond", t.diamond, "diamond grid of size N (rows 1-3-...-(2N+1)-...-3-1)")
                ->check(CLI::Range(std::size_t{1}, std::size_t{7}));
  auto* f = sub->add_option("--program", t.program_file, "Morse program file")->check(CLI::ExistingFile);
  d->excludes(f);
  f->excludes(d);
  sub->add_flag("--json", t.json, "print a JSON run report");
  sub->add_option("--threads", t.threads, "worker threads (default: available parallelism)");
  sub->add_option("--state-budget", t.state_budget, "fail when a state exceeds this many basis states");
  sub->callback([sub, &t] {
    if (!t.diamond && t.program_file.empty()) throw CLI::RequiredError("--diamond or --program");
    (void)sub;
  });
}

inline void add_brute_flags(CLI::App* sub, BruteFlags& b) {
  sub->add_option("--limit", b.limit, "largest site count walked exhaustively (default 24, env KOLAM_BRUTE_LIMIT)");
  sub->add_flag("--force", b.force, "walk exhaustively past the limit");
}

inline std::string ratio_text(const Count& count, std::size_t sites) {
  if (sites >= 128) return "";
  return format_percentage(count, Count::pow2(static_cast<unsigned>(sites)));
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline EvolutionMode parse_mode(const std::string& m) { return m == "exact" ? EvolutionMode::exact : EvolutionMode::a0; }

inline bool splittable(const MorseProgram& p) { return p.rows.size() % 2 == 1 && is_palindrome(p); }

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting, enumeration and drawing of one-line diamond Kolams"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Target target;
  BruteFlags brute;
  std::string mode = "a0";
  bool split = false;
  bool reduce = false;
  std::string out_path;
  std::string assignment_hex;
  bool render = false;
  unsigned repeat = 1;

  auto* count_cmd = app.add_subcommand("count", "number of one-line drawings");
  add_target(count_cmd, target);
  count_cmd->add_option("--mode", mode, "coefficient ring: exact polynomials or a=0 truncation")
      ->check(CLI::IsMember({"exact", "a0"}));
  count_cmd->add_flag("--split", split, "glue the upper half against its transpose");
  count_cmd->add_flag("--reduce", reduce, "apply boundary reduction first");

  auto* poly_cmd = app.add_subcommand("poly", "component polynomial P(a)");
  add_target(poly_cmd, target);
  poly_cmd->add_flag("--split", split, "glue the upper half against its transpose");

  auto* brute_cmd = app.add_subcommand("brute", "curve-count distribution over all 2^D assignments");
  add_target(brute_cmd, target);
  add_brute_flags(brute_cmd, brute);

  auto* verify_cmd = app.add_subcommand("verify", "run every counting path and check they agree");
  add_target(verify_cmd, target);
  add_brute_flags(verify_cmd, brute);

  auto* solutions_cmd = app.add_subcommand("solutions", "write every one-line assignment");
  add_target(solutions_cmd, target);
  add_brute_flags(solutions_cmd, brute);
  solutions_cmd->add_option("--out", out_path, "output directory")->required();
  solutions_cmd->add_flag("--render", render, "also write one SVG per solution");

  auto* stats_cmd = app.add_subcommand("stats", "size of the truncated upper-half state");
  add_target(stats_cmd, target);
  stats_cmd->add_flag("--reduce", reduce, "apply boundary reduction first");

  auto* render_cmd = app.add_subcommand("render", "draw one assignment as SVG");
  add_target(render_cmd, target);
  render_cmd->add_option("--assignment", assignment_hex, "choices as lowercase hex, first site most significant")
      ->required();
  render_cmd->add_option("--out", out_path, "SVG file ('-' for standard output)")->required();

  auto* bench_cmd = app.add_subcommand("bench", "time the algebraic and exhaustive paths");
  add_target(bench_cmd, target);
  add_brute_flags(bench_cmd, brute);
  bench_cmd->add_option("--repeat", repeat, "runs per path; the fastest is reported")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  RunReport report;
  std::ostringstream text;
  int status = kOk;
  try {
    const MorseProgram program = target.load();
    const ExecutionOptions exec = target.exec();
    const std::size_t d = site_count(program);
    report.program = target.describe(program);
    report.options["threads"] = exec.resolved_threads();
    Stopwatch clock;

    if (*count_cmd) {
      report.command = "count";
      CountOptions opts;
      opts.mode = parse_mode(mode);
      opts.use_split = split;
      opts.use_reduction = reduce;
      opts.exec = exec;
      report.options["mode"] = mode;
      report.options["split"] = split;
      report.options["reduce"] = reduce;
      CountTrace trace;
      const Count c = count_infinite(program, opts, &trace);
      report.timings_ms.emplace_back("count", clock.lap_ms());
      report.peak_state_size = trace.peak_state_size;
      report.result["count"] = count_json(c);
      report.result["sites"] = d;
      const std::string ratio = ratio_text(c, d);
      if (!ratio.empty()) report.result["ratio_percent"] = ratio;
      text << c << "\n";
      if (!ratio.empty()) text << "ratio " << ratio << "% of 2^" << d << "\n";
    } else if (*poly_cmd) {
      report.command = "poly";
      report.options["split"] = split;
      std::vector<std::size_t> sizes;
      const LoopPoly p = split ? split_polynomial(program, exec) : component_polynomial(program, exec, &sizes);
      report.timings_ms.emplace_back("polynomial", clock.lap_ms());
      for (std::size_t s : sizes) report.peak_state_size = std::max(report.peak_state_size, s);
      report.result["coefficients"] = poly_json(p);
      report.result["single_curve"] = count_json(p.coefficient(1));
      report.result["total"] = count_json(p.evaluate_at_one());
      text << "coefficients:";
      for (const Count& c : p.coefficients()) text << ' ' << c;
      text << "\nP(a) = " << p.to_string() << "\n";
    } else if (*brute_cmd) {
      report.command = "brute";
      const BruteOptions bo = brute.options(exec);
      report.options["limit"] = bo.limit;
      report.options["force"] = bo.force;
      const ComponentDistribution dist = brute_distribution(program, bo);
      report.timings_ms.emplace_back("brute", clock.lap_ms());
      Json hist = Json::object();
      for (const auto& [k, c] : dist.counts) hist[std::to_string(k)] = count_json(c);
      report.result["distribution"] = hist;
      report.result["single_curve"] = count_json(dist.single());
      report.result["total"] = count_json(dist.total());
      text << "curves\tassignments\n";
      for (const auto& [k, c] : dist.counts) text << k << '\t' << c << "\n";
      text << "total\t" << dist.total() << "\n";
    } else if (*verify_cmd) {
      report.command = "verify";
      const BruteOptions bo = brute.options(exec);
      report.options["limit"] = bo.limit;
      Json paths = Json::object();
      std::optional<Count> reference;
      bool agree = true;
      auto record = [&](const std::string& name, const Count& value) {
        report.timings_ms.emplace_back(name, clock.lap_ms());
        paths[name] = count_json(value);
        text << name << " = " << value << "\n";
        if (!reference) reference = value;
        else if (value != *reference) agree = false;
      };
      auto path = [&](const std::string& name, bool use_split, bool use_reduce, EvolutionMode m) {
        CountOptions o;
        o.use_split = use_split;
        o.use_reduction = use_reduce;
        o.mode = m;
        o.exec = exec;
        CountTrace trace;
        const Count c = count_infinite(program, o, &trace);
        report.peak_state_size = std::max(report.peak_state_size, trace.peak_state_size);
        record(name, c);
      };
      path("a0", false, false, EvolutionMode::a0);
      path("exact", false, false, EvolutionMode::exact);
      path("a0+reduce", false, true, EvolutionMode::a0);
      if (splittable(program)) {
        path("a0+split", true, false, EvolutionMode::a0);
        path("exact+split", true, false, EvolutionMode::exact);
        path("a0+split+reduce", true, true, EvolutionMode::a0);
      }
      const LoopPoly p = component_polynomial(program, exec);
      const bool total_ok = d < 128 && p.evaluate_at_one() == Count::pow2(static_cast<unsigned>(d));
      record("polynomial", p.coefficient(1));
      report.result["polynomial_total_is_2^D"] = total_ok;
      text << "P(1) = 2^" << d << ": " << (total_ok ? "yes" : "no") << "\n";
      if (!total_ok) agree = false;
      if (d <= bo.limit || bo.force) {
        record("brute", brute_distribution(program, bo).single());
      } else {
        report.result["brute_skipped"] = "site count " + std::to_string(d) + " exceeds limit " + std::to_string(bo.limit);
        text << "brute skipped: " << d << " sites exceed the limit of " << bo.limit << "\n";
      }
      report.result["paths"] = paths;
      report.result["agree"] = agree;
      text << (agree ? "all paths agree" : "PATHS DISAGREE") << "\n";
      if (!agree) status = kDisagree;
    } else if (*solutions_cmd) {
      report.command = "solutions";
      const BruteOptions bo = brute.options(exec);
      report.options["render"] = render;
      report.options["limit"] = bo.limit;
      std::optional<KolamLayout> grid;
      if (render) {
        const auto n = diamond_size_of(program);
        if (!n) throw std::invalid_argument("--render needs a diamond program");
        grid = layout(*n);
      }
      const std::filesystem::path dir(out_path);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
      const std::filesystem::path list = dir / "solutions.txt";
      std::ofstream listing(list, std::ios::binary);
      if (!listing) throw IoError("cannot write '" + list.string() + "'");
      std::size_t rendered = 0;
      const Count found = enumerate_solutions(
          program,
          [&](const Assignment& a) {
            const std::string hex = a.to_hex();
            listing << hex << "\n";
            if (grid) {
              write_file(dir / (hex + ".svg"), render_svg(*grid, a));
              ++rendered;
            }
          },
          bo);
      listing.close();
      if (!listing) throw IoError("failed writing '" + list.string() + "'");
      report.timings_ms.emplace_back("enumerate", clock.lap_ms());
      report.result["count"] = count_json(found);
      report.result["listing"] = list.string();
      report.result["rendered"] = rendered;
      text << found << " solutions written to " << list.string() << "\n";
      if (render) text << rendered << " drawings written to " << dir.string() << "\n";
    } else if (*stats_cmd) {
      report.command = "stats";
      report.options["reduce"] = reduce;
      const EvolutionStats s = evolution_stats(program, {reduce, exec});
      report.timings_ms.emplace_back("stats", clock.lap_ms());
      for (std::size_t r : s.row_state_sizes) report.peak_state_size = std::max(report.peak_state_size, r);
      report.peak_state_size = std::max(report.peak_state_size, s.middle_distinct_states);
      report.result["surviving_diagram_weight"] = count_json(s.surviving_weight);
      report.result["distinct_basis_states"] = s.distinct_states;
      report.result["tracked_endpoints"] = s.tracked_endpoints;
      report.result["state_space_dimension"] = s.state_space_dimension;
      report.result["row_state_sizes"] = s.row_state_sizes;
      report.result["middle_weight"] = count_json(s.middle_weight);
      report.result["middle_distinct_states"] = s.middle_distinct_states;
      report.result["multiplicity"] = count_json(s.multiplicity);
      text << "surviving diagrams: " << s.surviving_weight << "\n"
           << "distinct basis states: " << s.distinct_states << " of " << s.state_space_dimension << "\n"
           << "tracked endpoints: " << s.tracked_endpoints << "\n"
           << "after middle row: " << s.middle_weight << " diagrams, " << s.middle_distinct_states << " states\n";
    } else if (*render_cmd) {
      report.command = "render";
      const auto n = diamond_size_of(program);
      if (!n) throw std::invalid_argument("render needs a diamond program");
      const Assignment a = Assignment::from_hex(assignment_hex, d);
      const KolamLayout grid = layout(*n);
      const std::string svg = render_svg(grid, a);
      const std::size_t curves = curve_count(grid, a);
      report.timings_ms.emplace_back("render", clock.lap_ms());
      report.options["assignment"] = a.to_hex();
      report.result["curves"] = curves;
      if (out_path == "-") {
        out << svg;
        return kOk;
      }
      write_file(out_path, svg);
      report.result["file"] = out_path;
      text << "wrote " << out_path << " (" << curves << (curves == 1 ? " curve" : " curves") << ")\n";
    } else if (*bench_cmd) {
      report.command = "bench";
      const BruteOptions bo = brute.options(exec);
      report.options["repeat"] = repeat;
      report.options["limit"] = bo.limit;
      Json paths = Json::object();
      auto time_path = [&](const std::string& name, const std::function<Count(CountTrace&)>& fn) {
        double best = 0;
        Count value;
        CountTrace trace;
        for (unsigned r = 0; r < repeat; ++r) {
          trace = CountTrace{};
          Stopwatch w;
          value = fn(trace);
          const double ms = w.lap_ms();
          if (r == 0 || ms < best) best = ms;
        }
        report.timings_ms.emplace_back(name, best);
        report.peak_state_size = std::max(report.peak_state_size, trace.peak_state_size);
        Json entry;
        entry["count"] = count_json(value);
        entry["peak_state_size"] = trace.peak_state_size;
        paths[name] = entry;
        text << name << ": " << value << "  " << best << " ms, peak " << trace.peak_state_size << " states\n";
      };
      auto algebraic = [&](bool use_split, bool use_reduce, EvolutionMode m) {
        return [=](CountTrace& trace) {
          CountOptions o;
          o.use_split = use_split;
          o.use_reduction = use_reduce;
          o.mode = m;
          o.exec = exec;
          return count_infinite(program, o, &trace);
        };
      };
      time_path("a0", algebraic(false, false, EvolutionMode::a0));
      time_path("exact", algebraic(false, false, EvolutionMode::exact));
      if (splittable(program)) {
        time_path("a0+split", algebraic(true, false, EvolutionMode::a0));
        time_path("a0+split+reduce", algebraic(true, true, EvolutionMode::a0));
      }
      if (d <= bo.limit || bo.force) {
        time_path("brute", [&](CountTrace&) { return brute_distribution(program, bo).single(); });
      } else {
        report.result["brute_skipped"] = "site count " + std::to_string(d) + " exceeds limit " + std::to_string(bo.limit);
        text << "brute: skipped (" << d << " sites exceed the limit of " << bo.limit << ")\n";
      }
      report.result["paths"] = paths;
    }
  } catch (const InvalidProgram& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (target.json) out << report.dump() << "\n";
  else out << text.str();
  return status;
}

}  // namespace kolam::cli
