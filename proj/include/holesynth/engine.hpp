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

// Worklist synthesis: hole-replacement rules, abstract pruning, small-term
// cache and template inference.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holesynth/abstract_interp.hpp"
#include "holesynth/concrete_interp.hpp"
#include "holesynth/domains.hpp"
#include "holesynth/lattice.hpp"
#include "holesynth/term.hpp"

namespace holesynth {

/// Solver symbol standing for the length (or value) of parameter `index`.
inline SymId param_symbol(std::size_t index, Sort s) {
  return (static_cast<SymId>(index + 1) << 2) | static_cast<SymId>(s);
}

struct Problem {
  std::string name = "f";
  std::vector<Param> params;
  Sort ret = Sort::String;
  std::vector<Example> examples;
  /// Operators the grammar offers, in rule order.
  std::vector<Op> ops;
  /// Constant pool, in rule order.
  std::vector<Value> constants;
  /// Declared domain list; components of every product follow this order.
  ProductDomain domains;
  /// Per-parameter abstractions (empty: Top everywhere except the length
  /// domain, which binds each parameter to its own symbol).
  std::vector<Product> param_abs;
  /// Output abstraction (empty: Top everywhere).
  Product goal;
};

struct SearchOptions {
  std::uint32_t max_size = 12;
  double timeout_s = 60.0;
  bool use_cache = true;
  bool use_templates = true;
  /// Adds (str.substr input 0 □) when every output is a prefix of the input.
  bool prefix_templates = false;
  /// Solver length bound; negative means longest example string + 8.
  std::int64_t max_len = -1;
  /// Stop with exhaustion once this many partial programs are queued.
  std::size_t max_frontier = 25'000'000;
  /// Keep every tested program (for cross-checks on small spaces).
  bool record_tested = false;
};

struct Candidate {
  Term term;
  std::uint32_t size = 0;
  std::uint64_t seq = 0;
  BoundsEnv benv;
};

struct Stats {
  std::uint64_t tested = 0;
  std::uint64_t eliminated = 0;
  std::uint64_t generated = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t popped = 0;
  double elapsed_ms = 0;
};

enum class Outcome : std::uint8_t { Solved, Timeout, Exhausted };
std::string_view to_string(Outcome o);

struct SynthResult {
  Outcome outcome = Outcome::Exhausted;
  std::optional<Program> program;
  Stats stats;
  std::vector<Term> tested_terms;
  std::vector<std::uint32_t> popped_sizes;  // only with record_tested
};

/// Hole-free single-application terms over leaves, with their abstractions.
class SmallTermCache {
 public:
  void put(Term t, Product abs);
  /// Cached terms of sort `s` whose abstraction may meet `label`.
  std::vector<Term> lookup(Sort s, const Product& label, const BoundsEnv& benv,
                           const ProductDomain& doms, AnalysisCtx& ctx) const;
  /// All cached terms of sort `s` with at most `max_size` nodes.
  std::vector<std::pair<Term, Product>> small(Sort s, std::uint32_t max_size) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<Term, Product>> entries_;
};

/// Runs the search for one problem. Not thread-safe; one instance per run.
class Engine {
 public:
  Engine(Problem problem, SearchOptions options);
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  SynthResult run();

  /// Expands the leftmost hole of `c` (no filtering by goal or size).
  std::vector<Candidate> expand(const Candidate& c);
  /// Initial worklist: the root hole labelled with the goal plus templates.
  std::vector<Candidate> initial_candidates();

  const Problem& problem() const;
  const ProductDomain& effective_domains() const;
  const Product& goal() const;
  const AbsEnv& abs_env() const;
  AnalysisCtx& analysis();
  const SmallTermCache& cache() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SynthResult synthesize(const Problem& problem, const SearchOptions& options);

/// Template programs for single-string-parameter problems whose examples
/// satisfy the containment or suffix predicates. Holes carry fresh labels.
std::vector<Term> infer_templates(const Problem& problem, bool prefix_extension,
                                  const std::function<Term(Sort)>& fresh_hole);

}  // namespace holesynth
