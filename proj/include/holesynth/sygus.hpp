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

// SyGuS problem files: parsing, printing, PBE extraction and conversion to a
// search problem.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "holesynth/engine.hpp"
#include "holesynth/sexpr.hpp"

namespace holesynth {

/// A constraint that is not an input/output example of the function.
class UnsupportedConstraint : public Error {
 public:
  using Error::Error;
};

struct Production {
  std::string name;
  Sort sort = Sort::String;
  std::vector<SExpr> rules;
  friend bool operator==(const Production&, const Production&) = default;
};

struct SygusFile {
  std::string logic;
  /// Grammar written with a predeclaration list (SyGuS 2.x).
  bool v2_grammar = false;
  std::string fun_name;
  std::vector<Param> params;
  Sort ret = Sort::String;
  /// Nonterminal -> productions; empty when the grammar is left implicit.
  std::vector<Production> grammar;
  std::vector<SExpr> constraints;
  std::vector<Param> declared_vars;
  /// `; key: value` comments with a recognised key (abs-out, bench-args).
  std::vector<std::pair<std::string, std::string>> directives;
  /// Diagnostics for ignored commands; not part of equality.
  std::vector<std::string> warnings;

  std::optional<std::string> directive(std::string_view key) const;

  friend bool operator==(const SygusFile& a, const SygusFile& b) {
    return a.logic == b.logic && a.v2_grammar == b.v2_grammar && a.fun_name == b.fun_name &&
           a.params == b.params && a.ret == b.ret && a.grammar == b.grammar &&
           a.constraints == b.constraints && a.declared_vars == b.declared_vars &&
           a.directives == b.directives;
  }
};

/// Throws ParseError on malformed input.
SygusFile parse_sygus(std::string_view text);
/// Reads and parses a file; throws Error when it cannot be read.
SygusFile load_sygus(const std::filesystem::path& path);
std::string print_sygus(const SygusFile& f);

/// Input/output pairs from the constraints; throws UnsupportedConstraint.
std::vector<Example> extract_examples(const SygusFile& f);

struct ConstantPool {
  std::vector<Value> strings;
  std::vector<Value> ints;
  std::vector<Value> all() const;
};

/// Literal terminals of the grammar, or the example literals when the grammar
/// has none. Duplicates are dropped, first occurrence wins.
ConstantPool mine_constants(const SygusFile& f);

/// Operators used by the grammar in first-occurrence order; every supported
/// operator when the grammar is implicit.
std::vector<Op> grammar_ops(const SygusFile& f);

/// Literal value of a constant expression ("a", 3, (- 3), true).
std::optional<Value> literal_value(const SExpr& e);

/// Term over `params`; throws Error for unknown symbols or ill-sorted input.
Term term_from_sexpr(const SExpr& e, std::span<const Param> params);

/// Parses `(define-fun name ((x S) ...) S body)`.
Program parse_define_fun(std::string_view text);

/// Output abstraction given as `domain:literal`.
struct AbsSpec {
  std::string domain;
  std::string literal;
  friend bool operator==(const AbsSpec&, const AbsSpec&) = default;
};

/// Splits "prefix:\"Dr. \"" and friends; throws Error when malformed.
AbsSpec parse_abs_spec(std::string_view text);

struct RunConfig {
  double timeout_s = 60.0;
  std::uint32_t max_size = 12;
  std::vector<std::string> domains = {"prefix", "suffix", "length"};
  std::vector<AbsSpec> abs_out;
  std::int64_t max_len = -1;
  std::string stats_path;
  bool use_cache = true;
  bool use_templates = true;
};

/// Builds the search problem. Throws Error when an abstraction names a
/// domain outside `cfg.domains` or does not parse.
Problem to_problem(const SygusFile& f, const RunConfig& cfg);
SearchOptions to_options(const RunConfig& cfg);

}  // namespace holesynth
