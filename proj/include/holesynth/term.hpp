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

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holesynth/lattice.hpp"
#include "holesynth/ops.hpp"
#include "holesynth/value.hpp"

namespace holesynth {

enum class TermKind : std::uint8_t { Const, Var, App, Hole };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;
using LabelPtr = std::shared_ptr<const Product>;

/// App created by S-Enumer while the small-term cache is active: its last
/// argument may not become a leaf when all earlier ones are leaves.
inline constexpr std::uint8_t kCacheGuard = 1;

struct TermNode {
  TermKind kind;
  Sort sort;
  Op op = Op::Concat;
  std::uint8_t arity = 0;
  std::uint8_t flags = 0;
  std::uint32_t size = 1;
  std::uint32_t height = 1;
  std::uint32_t hole_count = 0;
  std::uint32_t index = 0;  // parameter index (Var) or hole id (Hole)
  std::uint64_t hash = 0;   // structural; hole labels hashed by shape only
  Value value;              // Const
  std::string name;         // Var
  std::array<Term, kMaxArity> args{};
  LabelPtr label;           // Hole; null means the empty product

  std::span<const Term> children() const { return {args.data(), arity}; }
  bool is_leaf() const { return kind == TermKind::Const || kind == TermKind::Var; }
};

Term make_const(Value v);
Term make_var(std::string name, std::uint32_t param_index, Sort sort);
/// Throws Error on arity or sort mismatch.
Term make_app(Op op, std::span<const Term> args, std::uint8_t flags = 0);
Term make_app(Op op, std::initializer_list<Term> args);
Term make_hole(std::uint32_t id, Sort sort, LabelPtr label = nullptr);

inline std::uint32_t size(const Term& t) { return t->size; }
inline std::uint32_t height(const Term& t) { return t->height; }
inline bool no_hole(const Term& t) { return t->hole_count == 0; }

struct HoleInfo {
  std::vector<std::uint8_t> path;  // child indices from the root
  std::uint32_t hole_id;
  Sort sort;
  LabelPtr label;
};

/// Holes in pre-order (leftmost first).
std::vector<HoleInfo> holes(const Term& t);
/// The leftmost hole, or null when the term is complete.
const TermNode* leftmost_hole(const Term& t);
/// Replaces the leftmost hole. `fill` must have the hole's sort.
Term fill_leftmost(const Term& t, const Term& fill);
/// The App whose argument is the leftmost hole (null if the hole is the root),
/// plus the argument position.
std::pair<const TermNode*, std::size_t> leftmost_hole_parent(const Term& t);

bool structurally_equal(const Term& a, const Term& b);
/// Hash that also covers hole labels, with abstract variables renamed by
/// first occurrence so alpha-equivalent partial programs collide.
std::uint64_t canonical_hash(const Term& t);

std::string to_sexpr(const Term& t);

struct Param {
  std::string name;
  Sort sort;
  friend bool operator==(const Param&, const Param&) = default;
};

struct Program {
  std::string name;
  std::vector<Param> params;
  Sort ret = Sort::String;
  Term body;

  /// (define-fun name ((x String) ...) Sort body)
  std::string to_define_fun() const;
};

}  // namespace holesynth
