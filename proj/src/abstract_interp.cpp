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

#include "holesynth/abstract_interp.hpp"

namespace holesynth {

void AbsEnv::bind(std::string name, Product p) {
  for (auto& [n, v] : entries_)
    if (n == name) {
      v = std::move(p);
      return;
    }
  entries_.emplace_back(std::move(name), std::move(p));
}

const Product& AbsEnv::lookup(std::string_view name) const {
  for (const auto& [n, v] : entries_)
    if (n == name) return v;
  throw UnboundVariable("no abstraction bound for variable: " + std::string(name));
}

const Product& AbsEnv::lookup(std::uint32_t index, std::string_view name) const {
  if (index < entries_.size() && entries_[index].first == name) return entries_[index].second;
  return lookup(name);
}

Product alpha_product(const Value& v, const ProductDomain& doms) {
  Product p;
  p.reserve(doms.size());
  for (std::size_t i = 0; i < doms.size(); ++i) p.push_back(doms.at(i).alpha(v));
  return p;
}

namespace {

Product eval(const AbsEnv& env, BoundsEnv& benv, const Term& t, const ProductDomain& doms,
             AnalysisCtx& ctx) {
  switch (t->kind) {
    case TermKind::Const: return alpha_product(t->value, doms);
    case TermKind::Var: return env.lookup(t->index, t->name);
    case TermKind::Hole:
      if (t->label) return *t->label;
      return Product(doms.size(), Abstraction::top());
    case TermKind::App: {
      std::array<Product, kMaxArity> args;
      for (std::uint8_t i = 0; i < t->arity; ++i) args[i] = eval(env, benv, t->args[i], doms, ctx);
      Product out;
      out.reserve(doms.size());
      std::array<Abstraction, kMaxArity> column;
      for (std::size_t d = 0; d < doms.size(); ++d) {
        for (std::uint8_t i = 0; i < t->arity; ++i) column[i] = args[i][d];
        auto r = doms.at(d).transfer(t->op, std::span<const Abstraction>(column.data(), t->arity),
                                     benv, ctx);
        benv = std::move(r.benv);
        out.push_back(std::move(r.value));
      }
      return out;
    }
  }
  return {};
}

}  // namespace

AbsResult abs_eval(const AbsEnv& env, const BoundsEnv& benv, const Term& t,
                   const ProductDomain& doms, AnalysisCtx& ctx) {
  AbsResult r;
  r.benv = benv;
  r.value = eval(env, r.benv, t, doms, ctx);
  return r;
}

NarrowResult satisfies_goal(const AbsEnv& env, const BoundsEnv& benv, const Term& t,
                            const Product& goal, const ProductDomain& doms, AnalysisCtx& ctx) {
  auto r = abs_eval(env, benv, t, doms, ctx);
  return product_may_meet(r.benv, r.value, goal, doms, ctx);
}

}  // namespace holesynth
