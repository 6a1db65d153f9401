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

// The string prefix, string suffix and solver-aided string length domains.

#pragma once

#include <string>
#include <vector>

#include "holesynth/lattice.hpp"

namespace holesynth {

enum : DomainId {
  kPrefixDomain = 1,
  kSuffixDomain = 2,
  kLengthDomain = 3,
};

class StringPayload final : public ElemPayload {
 public:
  explicit StringPayload(std::string s) : text(std::move(s)) {}
  bool equals(const ElemPayload& o) const override;
  std::uint64_t hash() const override;
  std::string to_string() const override;
  const std::string text;
};

/// Exact integer; lets the prefix domain recognise substrings taken from 0.
class IntPayload final : public ElemPayload {
 public:
  explicit IntPayload(std::int64_t v) : value(v) {}
  bool equals(const ElemPayload& o) const override;
  std::uint64_t hash() const override;
  std::string to_string() const override;
  const std::int64_t value;
};

/// Strings sharing a common prefix. The empty prefix is the greatest element
/// below Top.
class PrefixDomain final : public Domain {
 public:
  PrefixDomain() : Domain(kPrefixDomain, "prefix") {}
  static Abstraction make(std::string prefix);
  static Abstraction make_int(std::int64_t v);

  bool leq(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const override;
  std::optional<Abstraction> join(const Abstraction& a, const Abstraction& b,
                                  AnalysisCtx& ctx) const override;
  std::optional<Abstraction> meet(const Abstraction& a, const Abstraction& b,
                                  AnalysisCtx& ctx) const override;
  bool overlaps(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const override;
  Abstraction alpha(const Value& v) const override;
  bool member(const Value& v, const Abstraction& elem, AnalysisCtx& ctx) const override;
  TransferResult transfer(Op op, std::span<const Abstraction> args, const BoundsEnv& benv,
                          AnalysisCtx& ctx) const override;
  Abstraction parse_literal(std::string_view text, AnalysisCtx& ctx) const override;
};

/// Strings sharing a common suffix; the mirror image of PrefixDomain.
class SuffixDomain final : public Domain {
 public:
  SuffixDomain() : Domain(kSuffixDomain, "suffix") {}
  static Abstraction make(std::string suffix);

  bool leq(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const override;
  std::optional<Abstraction> join(const Abstraction& a, const Abstraction& b,
                                  AnalysisCtx& ctx) const override;
  std::optional<Abstraction> meet(const Abstraction& a, const Abstraction& b,
                                  AnalysisCtx& ctx) const override;
  bool overlaps(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const override;
  Abstraction alpha(const Value& v) const override;
  bool member(const Value& v, const Abstraction& elem, AnalysisCtx& ctx) const override;
  TransferResult transfer(Op op, std::span<const Abstraction> args, const BoundsEnv& benv,
                          AnalysisCtx& ctx) const override;
  Abstraction parse_literal(std::string_view text, AnalysisCtx& ctx) const override;
};

/// One guarded alternative of a length element: when `guards` hold, the
/// length (or integer value) is `expr`.
struct LenAlt {
  std::vector<Constraint> guards;
  LinExpr expr;
  friend bool operator==(const LenAlt&, const LenAlt&) = default;
};

class LenPayload final : public ElemPayload {
 public:
  explicit LenPayload(bool b) : is_bool(true), bool_value(b) {}
  explicit LenPayload(std::vector<LenAlt> a) : alts(std::move(a)) {}
  bool equals(const ElemPayload& o) const override;
  std::uint64_t hash() const override;
  std::string to_string() const override;
  /// The single unguarded constant, if that is what this element is.
  std::optional<std::int64_t> as_constant() const;

  const bool is_bool = false;
  const bool bool_value = false;
  const std::vector<LenAlt> alts;
};

/// Strings lifted to their lengths and integers to themselves, kept as
/// symbolic linear expressions decided by the micro-solver. An element is a
/// small disjunction of guarded expressions; two elements are ordered when
/// they may denote the same number.
class LengthDomain final : public Domain {
 public:
  static constexpr std::size_t kMaxAlternatives = 16;

  LengthDomain() : Domain(kLengthDomain, "length") {}
  static Abstraction make_const(std::int64_t n);
  static Abstraction make_expr(LinExpr e);
  static Abstraction make_bool(bool b);
  static Abstraction make_alts(std::vector<LenAlt> alts);

  /// Installs default symbol ranges on the run's solver: string lengths in
  /// [0, max_len], integers in [-4*max_len, 4*max_len].
  static void install(AnalysisCtx& ctx);
  static std::int64_t int_bound(const AnalysisCtx& ctx) { return 4 * ctx.solver.max_len() + 4; }

  bool leq(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const override;
  std::optional<Abstraction> meet(const Abstraction& a, const Abstraction& b,
                                  AnalysisCtx& ctx) const override;
  bool overlaps(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const override;
  Abstraction alpha(const Value& v) const override;
  bool member(const Value& v, const Abstraction& elem, AnalysisCtx& ctx) const override;
  TransferResult transfer(Op op, std::span<const Abstraction> args, const BoundsEnv& benv,
                          AnalysisCtx& ctx) const override;
  bool solver_backed() const override { return true; }
  bool pointwise() const override { return true; }
  Abstraction parse_literal(std::string_view text, AnalysisCtx& ctx) const override;

  /// Alternatives standing for an argument, or nullopt when unknown (Top).
  static std::optional<std::vector<LenAlt>> alternatives(const Abstraction& a,
                                                         const BoundsEnv& benv);
};

/// "prefix", "suffix" or "length"; throws Error for other names.
DomainPtr make_domain(std::string_view name);

}  // namespace holesynth
