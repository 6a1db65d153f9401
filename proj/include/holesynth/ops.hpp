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
#include <optional>
#include <span>
#include <string_view>

#include "holesynth/value.hpp"

namespace holesynth {

enum class Op : std::uint8_t {
  Concat,    // str.++
  Len,       // str.len
  Substr,    // str.substr s start length
  IndexOf,   // str.indexof s t start
  Replace,   // str.replace s t u
  At,        // str.at
  Contains,  // str.contains s t
  PrefixOf,  // str.prefixof s t
  SuffixOf,  // str.suffixof s t
  IntToStr,  // int.to.str
  StrToInt,  // str.to.int
  Add,       // +
  Sub,       // -
};

inline constexpr std::size_t kNumOps = 13;
inline constexpr std::size_t kMaxArity = 3;

struct OpSignature {
  Op op;
  std::string_view name;
  std::uint8_t arity;
  std::array<Sort, kMaxArity> params;
  Sort result;

  std::span<const Sort> param_sorts() const { return {params.data(), arity}; }
};

const OpSignature& signature(Op op);
std::span<const OpSignature> all_signatures();

/// Canonical SyGuS v1 name ("str.++", "int.to.str", ...).
std::string_view op_name(Op op);

/// Accepts the v1 names and the SMT-LIB 2.6 / SyGuS v2 aliases
/// (str.to_int, str.from_int, str.to-int, int.to-str).
std::optional<Op> op_from_name(std::string_view name);

}  // namespace holesynth
