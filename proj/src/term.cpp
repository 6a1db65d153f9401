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

#include "holesynth/term.hpp"

#include <algorithm>
#include <unordered_map>

namespace holesynth {
namespace {

std::uint64_t value_hash(const Value& v) {
  switch (v.sort()) {
    case Sort::String: return hash_mix(0x57, hash_string(v.as_str()));
    case Sort::Int: return hash_mix(0x1e, static_cast<std::uint64_t>(v.as_int()));
    case Sort::Bool: return hash_mix(0xb0, v.as_bool() ? 1 : 2);
  }
  return 0;
}

Term build_app(Op op, std::span<const Term> args, std::uint8_t flags) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::App;
  n->op = op;
  n->sort = signature(op).result;
  n->arity = static_cast<std::uint8_t>(args.size());
  n->flags = flags;
  std::uint64_t h = hash_mix(0xa9, static_cast<std::uint64_t>(op));
  std::uint32_t sz = 1, ht = 0, hc = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    n->args[i] = args[i];
    sz += args[i]->size;
    ht = std::max(ht, args[i]->height);
    hc += args[i]->hole_count;
    h = hash_mix(h, args[i]->hash);
  }
  n->size = sz;
  n->height = ht + 1;
  n->hole_count = hc;
  n->hash = h;
  return n;
}

}  // namespace

Term make_const(Value v) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Const;
  n->sort = v.sort();
  n->hash = value_hash(v);
  n->value = std::move(v);
  return n;
}

Term make_var(std::string name, std::uint32_t param_index, Sort sort) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Var;
  n->sort = sort;
  n->index = param_index;
  n->hash = hash_mix(hash_mix(0x7a, param_index), hash_string(name));
  n->name = std::move(name);
  return n;
}

Term make_app(Op op, std::span<const Term> args, std::uint8_t flags) {
  const auto& sig = signature(op);
  if (args.size() != sig.arity)
    throw Error(std::string(sig.name) + " expects " + std::to_string(sig.arity) + " arguments, got " +
                std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!args[i] || args[i]->sort != sig.params[i])
      throw Error(std::string(sig.name) + ": argument " + std::to_string(i + 1) + " must be " +
                  std::string(sort_name(sig.params[i])));
  return build_app(op, args, flags);
}

Term make_app(Op op, std::initializer_list<Term> args) {
  return make_app(op, std::span<const Term>(args.begin(), args.size()));
}

Term make_hole(std::uint32_t id, Sort sort, LabelPtr label) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Hole;
  n->sort = sort;
  n->index = id;
  n->hole_count = 1;
  n->hash = hash_mix(0x40, static_cast<std::uint64_t>(sort));
  n->label = std::move(label);
  return n;
}

namespace {

void collect_holes(const Term& t, std::vector<std::uint8_t>& path, std::vector<HoleInfo>& out) {
  if (t->hole_count == 0) return;
  if (t->kind == TermKind::Hole) {
    out.push_back({path, t->index, t->sort, t->label});
    return;
  }
  for (std::uint8_t i = 0; i < t->arity; ++i) {
    path.push_back(i);
    collect_holes(t->args[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<HoleInfo> holes(const Term& t) {
  std::vector<HoleInfo> out;
  std::vector<std::uint8_t> path;
  collect_holes(t, path, out);
  return out;
}

const TermNode* leftmost_hole(const Term& t) {
  const TermNode* n = t.get();
  if (n->hole_count == 0) return nullptr;
  while (n->kind != TermKind::Hole) {
    for (std::uint8_t i = 0; i < n->arity; ++i)
      if (n->args[i]->hole_count > 0) {
        n = n->args[i].get();
        break;
      }
  }
  return n;
}

std::pair<const TermNode*, std::size_t> leftmost_hole_parent(const Term& t) {
  const TermNode* parent = nullptr;
  std::size_t pos = 0;
  const TermNode* n = t.get();
  if (n->hole_count == 0) return {nullptr, 0};
  while (n->kind != TermKind::Hole) {
    for (std::uint8_t i = 0; i < n->arity; ++i)
      if (n->args[i]->hole_count > 0) {
        parent = n;
        pos = i;
        n = n->args[i].get();
        break;
      }
  }
  return {parent, pos};
}

Term fill_leftmost(const Term& t, const Term& fill) {
  if (t->kind == TermKind::Hole) {
    if (fill->sort != t->sort) throw Error("fill_leftmost: sort mismatch");
    return fill;
  }
  if (t->hole_count == 0) throw Error("fill_leftmost: term has no hole");
  std::array<Term, kMaxArity> args = t->args;
  for (std::uint8_t i = 0; i < t->arity; ++i)
    if (args[i]->hole_count > 0) {
      args[i] = fill_leftmost(args[i], fill);
      break;
    }
  return build_app(t->op, std::span<const Term>(args.data(), t->arity), t->flags);
}

bool structurally_equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->sort != b->sort || a->hash != b->hash) return false;
  switch (a->kind) {
    case TermKind::Const: return a->value == b->value;
    case TermKind::Var: return a->name == b->name && a->index == b->index;
    case TermKind::Hole: {
      if (!a->label || !b->label) return !a->label == !b->label;
      return *a->label == *b->label;
    }
    case TermKind::App:
      if (a->op != b->op) return false;
      for (std::uint8_t i = 0; i < a->arity; ++i)
        if (!structurally_equal(a->args[i], b->args[i])) return false;
      return true;
  }
  return false;
}

namespace {

struct Canon {
  std::unordered_map<VarId, std::uint64_t> rename;

  std::uint64_t abs(const Abstraction& a) {
    if (!a.is_var()) return a.hash();
    auto [it, fresh] = rename.try_emplace(a.var_id(), rename.size() + 1);
    return hash_mix(0x7a5, (it->second << 2) | (a.var_id() & 3u));
  }

  std::uint64_t term(const Term& t) {
    if (t->hole_count == 0) return t->hash;
    if (t->kind == TermKind::Hole) {
      std::uint64_t h = t->hash;
      if (t->label)
        for (const auto& a : *t->label) h = hash_mix(h, abs(a));
      return h;
    }
    std::uint64_t h = hash_mix(0xa9, static_cast<std::uint64_t>(t->op));
    for (std::uint8_t i = 0; i < t->arity; ++i) h = hash_mix(h, term(t->args[i]));
    return h;
  }
};

void print(const Term& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Const: out += t->value.to_sexpr(); return;
    case TermKind::Var: out += t->name; return;
    case TermKind::Hole:
      out += "?" + std::to_string(t->index);
      if (t->label && !t->label->empty()) out += ":" + product_to_string(*t->label);
      return;
    case TermKind::App:
      out += "(";
      out += op_name(t->op);
      for (std::uint8_t i = 0; i < t->arity; ++i) {
        out += " ";
        print(t->args[i], out);
      }
      out += ")";
      return;
  }
}

}  // namespace

std::uint64_t canonical_hash(const Term& t) {
  Canon c;
  return c.term(t);
}

std::string to_sexpr(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string Program::to_define_fun() const {
  std::string out = "(define-fun " + name + " (";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += " ";
    out += "(" + params[i].name + " " + std::string(sort_name(params[i].sort)) + ")";
  }
  out += ") " + std::string(sort_name(ret)) + " " + to_sexpr(body) + ")";
  return out;
}

}  // namespace holesynth
