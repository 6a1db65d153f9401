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

#include "holesynth/ops.hpp"

#include <array>

namespace holesynth {
namespace {

constexpr Sort S = Sort::String;
constexpr Sort I = Sort::Int;
constexpr Sort B = Sort::Bool;

constexpr std::array<OpSignature, kNumOps> kSignatures = {{
    {Op::Concat, "str.++", 2, {S, S, S}, S},
    {Op::Len, "str.len", 1, {S, S, S}, I},
    {Op::Substr, "str.substr", 3, {S, I, I}, S},
    {Op::IndexOf, "str.indexof", 3, {S, S, I}, I},
    {Op::Replace, "str.replace", 3, {S, S, S}, S},
    {Op::At, "str.at", 2, {S, I, S}, S},
    {Op::Contains, "str.contains", 2, {S, S, S}, B},
    {Op::PrefixOf, "str.prefixof", 2, {S, S, S}, B},
    {Op::SuffixOf, "str.suffixof", 2, {S, S, S}, B},
    {Op::IntToStr, "int.to.str", 1, {I, S, S}, S},
    {Op::StrToInt, "str.to.int", 1, {S, S, S}, I},
    {Op::Add, "+", 2, {I, I, S}, I},
    {Op::Sub, "-", 2, {I, I, S}, I},
}};

struct Alias {
  std::string_view name;
  Op op;
};

constexpr std::array<Alias, 4> kAliases = {{
    {"str.to_int", Op::StrToInt},
    {"str.to-int", Op::StrToInt},
    {"str.from_int", Op::IntToStr},
    {"int.to-str", Op::IntToStr},
}};

}  // namespace

const OpSignature& signature(Op op) { return kSignatures[static_cast<std::size_t>(op)]; }

std::span<const OpSignature> all_signatures() { return kSignatures; }

std::string_view op_name(Op op) { return signature(op).name; }

std::optional<Op> op_from_name(std::string_view name) {
  for (const auto& sig : kSignatures)
    if (sig.name == name) return sig.op;
  for (const auto& a : kAliases)
    if (a.name == name) return a.op;
  return std::nullopt;
}

}  // namespace holesynth
