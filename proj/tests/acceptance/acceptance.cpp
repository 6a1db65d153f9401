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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when any
// line fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "holesynth/cli.hpp"
#include "holesynth/sygus.hpp"

using namespace holesynth;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << detail << std::endl;
}

std::string bench(const std::string& task) { return std::string(HOLESYNTH_BENCH_DIR) + "/" + task + ".sl"; }

RunReport run(const std::string& task, RunConfig cfg = {}) { return run_file(bench(task), cfg); }

void top_tasks() {
  const std::vector<std::pair<std::string, std::uint32_t>> tasks{
      {"bikes", 7},   {"firstname", 7}, {"lastname", 10}, {"name-combine", 5}, {"phone", 4},
      {"phone-1", 6}, {"phone-2", 7},   {"phone-4", 4},   {"phone-5", 7},      {"reverse-name", 5}};
  std::ostringstream fails, all;
  bool ok = true;
  for (const auto& [task, reference] : tasks) {
    auto r = run(task);
    bool solved = r.result.outcome == Outcome::Solved;
    auto size = solved ? r.result.program->body->size : 0;
    bool good = solved && size <= reference + 2 && r.result.stats.elapsed_ms <= 60'000;
    all << " " << task << "=" << (solved ? std::to_string(size) : "unsolved") << "/" << reference + 2;
    if (!good) {
      ok = false;
      fails << " " << task << (solved ? " size " + std::to_string(size) + " > " + std::to_string(reference + 2)
                                      : " " + std::string(to_string(r.result.outcome)));
    }
  }
  report(1, "top-spec tasks within 60 s and size bound", ok,
         ok ? "size/bound" + all.str() : "failing:" + fails.str() + "; all:" + all.str());
}

void prefix_spec() {
  auto top = run("dr-name");
  RunConfig cfg;
  cfg.abs_out = {{"prefix", "\"Dr. \""}};
  auto pre = run("dr-name", cfg);
  const auto& a = pre.result.stats;
  bool ok = pre.result.outcome == Outcome::Solved && a.eliminated > 0 && a.tested < top.result.stats.tested;
  std::ostringstream os;
  os << "eliminated " << a.eliminated << ", tested " << a.tested << " vs " << top.result.stats.tested
     << " at top";
  report(2, "dr-name prefix specification prunes", ok, os.str());
}

void ablations() {
  RunConfig off;
  off.use_templates = false;
  auto t_on = run("lastname"), t_off = run("lastname", off);
  RunConfig nc;
  nc.use_cache = false;
  auto c_on = run("firstname"), c_off = run("firstname", nc);
  bool ok = t_off.result.stats.tested >= t_on.result.stats.tested &&
            c_off.result.stats.generated >= c_on.result.stats.generated;
  std::ostringstream os;
  os << "lastname tested " << t_off.result.stats.tested << " (no templates) vs " << t_on.result.stats.tested
     << "; firstname generated " << c_off.result.stats.generated << " (no cache) vs "
     << c_on.result.stats.generated;
  report(3, "template and cache ablations", ok, os.str());
}

void transfer() {
  auto r = check::transfer_soundness(10'000, 9, 2026);
  report(4, "transfer soundness fuzz", r.violations == 0 && r.cases >= 10'000,
         std::to_string(r.cases) + " terms, " + std::to_string(r.violations) + " violations" +
             (r.first.empty() ? "" : "; first: " + r.first));
}

void pruning() {
  auto r = check::pruning_soundness(5);
  report(5, "pruning soundness", r.violations == 0 && r.refuted > 0,
         std::to_string(r.cases) + " (term, goal, input, env) cases, " + std::to_string(r.refuted) +
             " refuted, " + std::to_string(r.violations) +
             " violations" + (r.first.empty() ? "" : "; first: " + r.first));
}

void solver() {
  auto r = check::solver_oracle(1000, 99);
  report(6, "micro-solver vs brute force", r.violations == 0 && r.cases == 1000,
         std::to_string(r.cases) + " systems, " + std::to_string(r.violations) + " disagreements" +
             (r.first.empty() ? "" : "; first: " + r.first));
}

void completeness() {
  bool ok = true;
  std::ostringstream os;
  for (bool cache : {true, false}) {
    auto r = check::completeness(5, cache, true);
    ok = ok && r.ok();
    os << (cache ? "cache on: " : "; cache off: ") << r.tested << " tested, " << r.expected << " expected, "
       << r.missing << " missing, " << r.extra << " extra, " << r.duplicates << " duplicates";
    if (!r.example.empty()) os << " (" << r.example << ")";
  }
  report(7, "completeness at size 5", ok, os.str());
}

void determinism() {
  RunConfig cfg;
  auto a = run_bench(HOLESYNTH_BENCH_DIR, cfg);
  auto b = run_bench(HOLESYNTH_BENCH_DIR, cfg);
  bool ok = a.size() == b.size() && !a.empty();
  std::string diff;
  for (std::size_t i = 0; ok && i < a.size(); ++i) {
    auto prog = [](const RunReport& r) { return r.result.program ? r.result.program->to_define_fun() : ""; };
    const auto &x = a[i].result.stats, &y = b[i].result.stats;
    if (prog(a[i]) != prog(b[i]) || x.tested != y.tested || x.eliminated != y.eliminated ||
        x.generated != y.generated) {
      ok = false;
      diff = a[i].task + " " + a[i].spec;
    }
  }
  report(8, "deterministic bench runs", ok,
         ok ? std::to_string(a.size()) + " rows identical" : "rows differ at " + diff);
}

}  // namespace

int main() {
  top_tasks();
  prefix_spec();
  ablations();
  transfer();
  pruning();
  solver();
  completeness();
  determinism();
  return failures == 0 ? 0 : 1;
}
