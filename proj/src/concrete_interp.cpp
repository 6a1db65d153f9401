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

#include "holesynth/concrete_interp.hpp"

#include <limits>

namespace holesynth {
namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    return b > 0 ? std::numeric_limits<std::int64_t>::max() : std::numeric_limits<std::int64_t>::min();
  return r;
}

std::int64_t sat_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    return b < 0 ? std::numeric_limits<std::int64_t>::max() : std::numeric_limits<std::int64_t>::min();
  return r;
}

std::int64_t to_int(const std::string& s) {
  if (s.empty()) return -1;
  std::int64_t v = 0;
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  for (char c : s) {
    if (c < '0' || c > '9') return -1;
    int d = c - '0';
    if (v > (kMax - d) / 10) return kMax;
    v = v * 10 + d;
  }
  return v;
}

std::string substr(const std::string& s, std::int64_t i, std::int64_t n) {
  auto len = static_cast<std::int64_t>(s.size());
  if (i < 0 || n <= 0 || i >= len) return {};
  return s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(std::min(n, len - i)));
}

std::int64_t indexof(const std::string& s, const std::string& t, std::int64_t i) {
  auto len = static_cast<std::int64_t>(s.size());
  if (i < 0 || i > len) return -1;
  auto pos = s.find(t, static_cast<std::size_t>(i));
  return pos == std::string::npos ? -1 : static_cast<std::int64_t>(pos);
}

std::string replace(const std::string& s, const std::string& t, const std::string& u) {
  if (t.empty()) return u + s;
  auto pos = s.find(t);
  if (pos == std::string::npos) return s;
  std::string out = s;
  out.replace(pos, t.size(), u);
  return out;
}

Value eval(std::span<const Value> params, const Bindings* named, const Term& t) {
  switch (t->kind) {
    case TermKind::Const: return t->value;
    case TermKind::Var: {
      if (named) {
        auto it = named->find(t->name);
        if (it == named->end()) throw UnboundVariable("unbound variable: " + t->name);
        return it->second;
      }
      if (t->index >= params.size()) throw UnboundVariable("unbound variable: " + t->name);
      return params[t->index];
    }
    case TermKind::Hole: throw Error("cannot evaluate a term with holes");
    case TermKind::App: {
      std::array<Value, kMaxArity> args;
      for (std::uint8_t i = 0; i < t->arity; ++i) args[i] = eval(params, named, t->args[i]);
      return apply_op(t->op, std::span<const Value>(args.data(), t->arity));
    }
  }
  return Value();
}

}  // namespace

Value apply_op(Op op, std::span<const Value> a) {
  const auto& sig = signature(op);
  if (a.size() != sig.arity) throw Error(std::string(sig.name) + ": wrong number of arguments");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].sort() != sig.params[i]) throw Error(std::string(sig.name) + ": ill-sorted argument");
  switch (op) {
    case Op::Concat: return Value(a[0].as_str() + a[1].as_str());
    case Op::Len: return Value(static_cast<std::int64_t>(a[0].as_str().size()));
    case Op::Substr: return Value(substr(a[0].as_str(), a[1].as_int(), a[2].as_int()));
    case Op::IndexOf: return Value(indexof(a[0].as_str(), a[1].as_str(), a[2].as_int()));
    case Op::Replace: return Value(replace(a[0].as_str(), a[1].as_str(), a[2].as_str()));
    case Op::At: return Value(substr(a[0].as_str(), a[1].as_int(), 1));
    case Op::Contains: return Value(a[0].as_str().find(a[1].as_str()) != std::string::npos);
    case Op::PrefixOf: return Value(a[1].as_str().starts_with(a[0].as_str()));
    case Op::SuffixOf: return Value(a[1].as_str().ends_with(a[0].as_str()));
    case Op::IntToStr: {
      auto n = a[0].as_int();
      return Value(n < 0 ? std::string() : std::to_string(n));
    }
    case Op::StrToInt: return Value(to_int(a[0].as_str()));
    case Op::Add: return Value(sat_add(a[0].as_int(), a[1].as_int()));
    case Op::Sub: return Value(sat_sub(a[0].as_int(), a[1].as_int()));
  }
  throw Error("unknown operator");
}

Value concrete_eval(const Bindings& bindings, const Term& t) { return eval({}, &bindings, t); }

Value concrete_eval(std::span<const Value> params, const Term& t) { return eval(params, nullptr, t); }

bool test_term(const Term& body, std::span<const Example> examples) {
  try {
    for (const auto& ex : examples)
      if (!(concrete_eval(ex.inputs, body) == ex.output)) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool test_program(const Program& p, std::span<const Example> examples) {
  return test_term(p.body, examples);
}

}  // namespace holesynth
