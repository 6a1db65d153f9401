// Copyright 2026 The Holesynth Authors. All rights reserved.
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

#include "holesynth/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace holesynth {

namespace {

struct RunFlags {
  double timeout = 60.0;
  std::uint32_t max_size = 12;
  std::string domains = "prefix,suffix,length";
  std::vector<std::string> abs_out;
  std::int64_t max_len = -1;
  bool no_cache = false;
  bool no_templates = false;
};

void add_run_flags(CLI::App& app, RunFlags& f) {
  app.add_option("--timeout", f.timeout, "Seconds per task")->check(CLI::PositiveNumber);
  app.add_option("--max-size", f.max_size, "Largest program size explored")->check(CLI::Range(1, 64));
  app.add_option("--domains", f.domains, "Comma-separated domains: prefix,suffix,length");
  app.add_option("--abs-out", f.abs_out,
                 "Output abstraction: prefix:LIT, suffix:LIT or len:TERM (repeatable)");
  app.add_option("--max-len", f.max_len, "Solver bound on string lengths")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-cache", f.no_cache, "Disable the small-term cache");
  app.add_flag("--no-templates", f.no_templates, "Disable template inference");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void apply_flags(const RunFlags& f, const CLI::App& app, RunConfig& cfg) {
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--timeout")) cfg.timeout_s = f.timeout;
  if (given("--max-size")) cfg.max_size = f.max_size;
  if (given("--domains")) cfg.domains = split_commas(f.domains);
  for (const auto& a : f.abs_out) cfg.abs_out.push_back(parse_abs_spec(a));
  if (given("--max-len")) cfg.max_len = f.max_len;
  if (f.no_cache) cfg.use_cache = false;
  if (f.no_templates) cfg.use_templates = false;
}

std::string spec_label(const std::vector<AbsSpec>& specs) {
  std::string s;
  for (const auto& a : specs) {
    if (!s.empty()) s += ' ';
    s += a.domain + ":" + a.literal;
  }
  return s;
}

void write_stats(const RunReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << r.stats_json() << '\n';
}

}  // namespace

std::string RunReport::stats_json() const {
  nlohmann::ordered_json j;
  const bool solved = result.outcome == Outcome::Solved && result.program;
  j["solved"] = solved;
  j["time_ms"] = result.stats.elapsed_ms;
  j["size"] = solved ? nlohmann::ordered_json(size(result.program->body)) : nullptr;
  j["height"] = solved ? nlohmann::ordered_json(height(result.program->body)) : nullptr;
  j["tested"] = result.stats.tested;
  j["eliminated"] = result.stats.eliminated;
  j["generated"] = result.stats.generated;
  j["cache_hits"] = result.stats.cache_hits;
  return j.dump();
}

void apply_run_args(const std::string& args, RunConfig& cfg) {
  CLI::App app("directive");
  RunFlags f;
  add_run_flags(app, f);
  std::vector<std::string> tokens;
  std::istringstream in(args);
  for (std::string t; in >> std::quoted(t);) tokens.push_back(t);
  std::reverse(tokens.begin(), tokens.end());
  app.parse(tokens);
  apply_flags(f, app, cfg);
}

RunReport run_file(const std::filesystem::path& path, const RunConfig& cfg) {
  auto file = load_sygus(path);
  RunReport r;
  r.task = path.stem().string();
  r.spec = spec_label(cfg.abs_out);
  r.result = synthesize(to_problem(file, cfg), to_options(cfg));
  return r;
}

std::vector<RunReport> run_bench(const std::filesystem::path& dir, const RunConfig& base) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".sl") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<RunReport> rows;
  for (const auto& path : files) {
    auto file = load_sygus(path);
    RunConfig cfg = base;
    if (auto extra = file.directive("bench-args")) apply_run_args(*extra, cfg);
    auto run = [&](const RunConfig& c) {
      RunReport r;
      r.task = path.stem().string();
      r.spec = spec_label(c.abs_out);
      r.result = synthesize(to_problem(file, c), to_options(c));
      rows.push_back(std::move(r));
    };
    run(cfg);
    for (const auto& [key, value] : file.directives) {
      if (key != "abs-out") continue;
      RunConfig with = cfg;
      with.abs_out.push_back(parse_abs_spec(value));
      run(with);
    }
  }
  return rows;
}

void print_bench_table(const std::vector<RunReport>& rows, std::ostream& out) {
  auto line = [&](const std::string& task, const std::string& spec, const std::string& ok,
                  const std::string& time, const std::string& sz, const std::string& ht,
                  const std::string& tested, const std::string& elim, const std::string& gen,
                  const std::string& hits) {
    out << std::left << std::setw(14) << task << std::setw(16) << spec << std::setw(7) << ok
        << std::right << std::setw(9) << time << std::setw(5) << sz << std::setw(4) << ht
        << std::setw(11) << tested << std::setw(11) << elim << std::setw(11) << gen
        << std::setw(9) << hits << '\n';
  };
  line("Task", "Spec", "Solved", "Time(s)", "Sz", "Ht", "Tested", "Eliminated", "Generated",
       "CacheHit");
  std::size_t solved = 0;
  for (const auto& r : rows) {
    const auto& s = r.result.stats;
    const bool ok = r.result.outcome == Outcome::Solved && r.result.program;
    solved += ok;
    char time[32];
    std::snprintf(time, sizeof time, "%.2f", s.elapsed_ms / 1000.0);
    line(r.task, r.spec.empty() ? "top" : r.spec, ok ? "yes" : std::string(to_string(r.result.outcome)),
         time, ok ? std::to_string(size(r.result.program->body)) : "-",
         ok ? std::to_string(height(r.result.program->body)) : "-", std::to_string(s.tested),
         std::to_string(s.eliminated), std::to_string(s.generated), std::to_string(s.cache_hits));
  }
  out << "\nsolved " << solved << " of " << rows.size() << "\n\nSolutions:\n";
  for (const auto& r : rows)
    if (r.result.program)
      out << r.task << (r.spec.empty() ? "" : " [" + r.spec + "]") << ": "
          << r.result.program->to_define_fun() << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Abstraction-guided enumerative synthesis for SyGuS string PBE problems", "holesynth");
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Synthesize a program for one problem file");
  std::string file;
  std::string stats_path;
  RunFlags solve_flags;
  solve->add_option("file", file, "SyGuS problem file")->required();
  add_run_flags(*solve, solve_flags);
  solve->add_option("--stats", stats_path, "Write run statistics as JSON");

  auto* bench = app.add_subcommand("bench", "Run every .sl file of a directory");
  std::string dir;
  RunFlags bench_flags;
  std::string bench_json;
  bench->add_option("dir", dir, "Directory of problem files")->required()->check(CLI::ExistingDirectory);
  add_run_flags(*bench, bench_flags);
  bench->add_option("--json", bench_json, "Write per-row statistics as JSON lines");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitSolved;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitSolved;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*solve) {
      RunConfig cfg;
      apply_flags(solve_flags, *solve, cfg);
      auto parsed = load_sygus(file);
      for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
      RunReport r;
      r.task = std::filesystem::path(file).stem().string();
      r.spec = spec_label(cfg.abs_out);
      r.result = synthesize(to_problem(parsed, cfg), to_options(cfg));
      if (!stats_path.empty()) write_stats(r, stats_path);
      if (r.result.outcome == Outcome::Solved && r.result.program) {
        out << r.result.program->to_define_fun() << '\n';
        return kExitSolved;
      }
      err << to_string(r.result.outcome) << " after " << r.result.stats.tested << " tested programs\n";
      return kExitUnsolved;
    }
    RunConfig cfg;
    apply_flags(bench_flags, *bench, cfg);
    auto rows = run_bench(dir, cfg);
    print_bench_table(rows, out);
    if (!bench_json.empty()) {
      std::ofstream j(bench_json);
      if (!j) throw Error("cannot write " + bench_json);
      for (const auto& r : rows) {
        auto obj = nlohmann::ordered_json::parse(r.stats_json());
        nlohmann::ordered_json row;
        row["task"] = r.task;
        row["spec"] = r.spec;
        row.update(obj);
        row["program"] = r.result.program ? r.result.program->to_define_fun() : "";
        j << row.dump() << '\n';
      }
    }
    bool all = std::all_of(rows.begin(), rows.end(),
                           [](const RunReport& r) { return r.result.outcome == Outcome::Solved; });
    return all ? kExitSolved : kExitUnsolved;
  } catch (const CLI::ParseError& e) {
    err << "error: bench-args directive: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace holesynth
