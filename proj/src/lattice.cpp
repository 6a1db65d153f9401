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

#include "holesynth/lattice.hpp"

namespace holesynth {

std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Abstraction::hash() const {
  switch (kind_) {
    case Kind::Top: return 0x70b;
    case Kind::Bot: return 0xb07;
    case Kind::Var: return hash_mix(0x7a5, var_);
    case Kind::Elem: return hash_mix(hash_mix(0xe1e, domain_), payload_->hash());
  }
  return 0;
}

std::string Abstraction::to_string() const {
  switch (kind_) {
    case Kind::Top: return "Top";
    case Kind::Bot: return "Bot";
    case Kind::Var: return "$v" + std::to_string(var_ >> 2);
    case Kind::Elem: return payload_->to_string();
  }
  return {};
}

bool operator==(const Abstraction& a, const Abstraction& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Abstraction::Kind::Top:
    case Abstraction::Kind::Bot: return true;
    case Abstraction::Kind::Var: return a.var_ == b.var_;
    case Abstraction::Kind::Elem:
      return a.domain_ == b.domain_ &&
             (a.payload_ == b.payload_ || a.payload_->equals(*b.payload_));
  }
  return false;
}

AbsClass classify(const Abstraction& a) {
  switch (a.kind()) {
    case Abstraction::Kind::Top: return AbsClass::Top;
    case Abstraction::Kind::Bot: return AbsClass::Bot;
    case Abstraction::Kind::Var: return AbsClass::Var;
    case Abstraction::Kind::Elem: return AbsClass::Val;
  }
  return AbsClass::Top;
}

const Bounds& BoundsEnv::at(VarId v) const {
  auto it = map_->find(v);
  if (it == map_->end()) throw MissingBounds("no bounds for abstract variable $v" + std::to_string(v >> 2));
  return it->second;
}

BoundsEnv BoundsEnv::with(VarId v, Bounds b) const {
  auto m = std::make_shared<Map>(*map_);
  (*m)[v] = std::move(b);
  return BoundsEnv(std::move(m));
}

Abstraction Domain::parse_literal(std::string_view, AnalysisCtx&) const {
  throw Error("domain '" + name_ + "' has no literal syntax");
}

namespace {

void check_domain(const Abstraction& a, const Domain& dom) {
  if (a.is_elem() && a.domain() != dom.id())
    throw DomainMismatch("element of domain " + std::to_string(a.domain()) +
                         " compared in domain '" + dom.name() + "'");
}

Bounds with_lo(const Bounds& b, Abstraction lo) { return {std::move(lo), b.hi}; }
Bounds with_hi(const Bounds& b, Abstraction hi) { return {b.lo, std::move(hi)}; }

// Least upper bound when the two are ordered or the domain offers a join.
std::optional<Abstraction> upper(const Abstraction& a, const Abstraction& b, const Domain& dom,
                                 AnalysisCtx& ctx) {
  if (abs_leq(a, b, dom, ctx)) return b;
  if (abs_leq(b, a, dom, ctx)) return a;
  if (a.is_elem() && b.is_elem()) return dom.join(a, b, ctx);
  return std::nullopt;
}

NarrowResult var_vs_var(const BoundsEnv& benv, VarId v1, VarId v2, const Domain& dom,
                        AnalysisCtx& ctx) {
  if (v1 == v2) return {benv, true};
  const Bounds b1 = benv.at(v1);
  const Bounds b2 = benv.at(v2);
  const auto& [l1, h1] = b1;
  const auto& [l3, h4] = b2;
  if (!abs_leq(l1, h4, dom, ctx)) return {benv, false};
  // v2's range sits inside v1's: v1 adopts it.
  if (abs_leq(l1, l3, dom, ctx) && abs_leq(h4, h1, dom, ctx))
    return {benv.with(v1, b2), true};
  // Overlap: both share v1's upper bound, lower bounds clipped together.
  if (abs_leq(l3, h1, dom, ctx) && abs_leq(h1, h4, dom, ctx)) {
    auto lo = upper(l1, l3, dom, ctx).value_or(Abstraction::top());
    if (!abs_leq(lo, h1, dom, ctx)) return {benv, false};
    Bounds b{lo, h1};
    return {benv.with(v1, b).with(v2, b), true};
  }
  return {benv, true};
}

NarrowResult var_vs_value(const BoundsEnv& benv, VarId v, const Abstraction& c, const Domain& dom,
                          AnalysisCtx& ctx) {
  const Bounds b = benv.at(v);
  if (!abs_leq(b.lo, c, dom, ctx)) return {benv, false};
  if (abs_leq(b.hi, c, dom, ctx)) return {benv, true};
  if (abs_leq(c, b.hi, dom, ctx)) return {benv.with(v, with_hi(b, c)), true};
  if (b.hi.is_elem() && c.is_elem())
    if (auto m = dom.meet(b.hi, c, ctx)) {
      if (!abs_leq(b.lo, *m, dom, ctx)) return {benv, false};
      return {benv.with(v, with_hi(b, *m)), true};
    }
  if (b.lo.is_bot()) return {benv.with(v, with_hi(b, Abstraction::bot())), true};
  return {benv, false};
}

NarrowResult value_vs_var(const BoundsEnv& benv, const Abstraction& c, VarId v, const Domain& dom,
                          AnalysisCtx& ctx) {
  const Bounds b = benv.at(v);
  if (!abs_leq(c, b.hi, dom, ctx)) return {benv, false};
  if (abs_leq(c, b.lo, dom, ctx)) return {benv, true};
  if (abs_leq(b.lo, c, dom, ctx)) return {benv.with(v, with_lo(b, c)), true};
  if (b.lo.is_elem() && c.is_elem())
    if (auto j = dom.join(b.lo, c, ctx)) {
      if (!abs_leq(*j, b.hi, dom, ctx)) return {benv, false};
      return {benv.with(v, with_lo(b, *j)), true};
    }
  if (b.hi.is_top()) return {benv.with(v, with_lo(b, Abstraction::top())), true};
  return {benv, false};
}

}  // namespace

bool abs_leq(const Abstraction& a1, const Abstraction& a2, const Domain& dom, AnalysisCtx& ctx) {
  if (a1.is_var() || a2.is_var()) throw Error("abs_leq: unexpected abstract variable");
  if (a1.is_bot() || a2.is_top()) return true;
  if (a1.is_top() || a2.is_bot()) return false;
  check_domain(a1, dom);
  check_domain(a2, dom);
  return dom.leq(a1, a2, ctx);
}

NarrowResult leq_narrow(const BoundsEnv& benv, const Abstraction& a1, const Abstraction& a2,
                        const Domain& dom, AnalysisCtx& ctx) {
  check_domain(a1, dom);
  check_domain(a2, dom);
  if (a1.is_var() && a2.is_var()) return var_vs_var(benv, a1.var_id(), a2.var_id(), dom, ctx);
  if (a1.is_var()) {
    benv.at(a1.var_id());
    if (a2.is_top()) return {benv, true};
    return var_vs_value(benv, a1.var_id(), a2, dom, ctx);
  }
  if (a2.is_var()) {
    benv.at(a2.var_id());
    if (a1.is_bot()) return {benv, true};
    return value_vs_var(benv, a1, a2.var_id(), dom, ctx);
  }
  return {benv, abs_leq(a1, a2, dom, ctx)};
}

NarrowResult leq_narrow(const BoundsEnv& benv, const Abstraction& a1, const Abstraction& a2,
                        const Domain& dom) {
  AnalysisCtx ctx;
  return leq_narrow(benv, a1, a2, dom, ctx);
}

NarrowResult may_meet_narrow(const BoundsEnv& benv, const Abstraction& a, const Abstraction& goal,
                             const Domain& dom, AnalysisCtx& ctx) {
  check_domain(a, dom);
  check_domain(goal, dom);
  if (a.is_bot() || goal.is_top() || a.is_top()) return {benv, true};
  if (a.is_var() || goal.is_var()) {
    if (!dom.pointwise()) return {benv, true};
    auto r = leq_narrow(benv, a, goal, dom, ctx);
    if (!r.holds) return r;
    // A variable squeezed down to Bot admits no concrete value.
    for (const auto& x : {a, goal})
      if (x.is_var() && r.benv.at(x.var_id()).hi.is_bot()) return {benv, false};
    return r;
  }
  if (goal.is_bot()) return {benv, false};
  return {benv, dom.overlaps(a, goal, ctx)};
}

std::string product_to_string(const Product& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].to_string();
  }
  return out + ")";
}

std::uint64_t product_hash(const Product& p) {
  std::uint64_t h = p.size();
  for (const auto& a : p) h = hash_mix(h, a.hash());
  return h;
}

namespace {

void check_arity(const Product& p1, const Product& p2, const ProductDomain& dom) {
  if (p1.size() != dom.size() || p2.size() != dom.size())
    throw DomainMismatch("product arity does not match the domain list");
}

}  // namespace

NarrowResult product_leq_narrow(const BoundsEnv& benv, const Product& p1, const Product& p2,
                                const ProductDomain& dom, AnalysisCtx& ctx) {
  check_arity(p1, p2, dom);
  NarrowResult r{benv, true};
  for (std::size_t i = 0; i < dom.size(); ++i) {
    r = leq_narrow(r.benv, p1[i], p2[i], dom.at(i), ctx);
    if (!r.holds) return {benv, false};
  }
  return r;
}

NarrowResult product_may_meet(const BoundsEnv& benv, const Product& p, const Product& goal,
                              const ProductDomain& dom, AnalysisCtx& ctx) {
  check_arity(p, goal, dom);
  NarrowResult r{benv, true};
  for (std::size_t i = 0; i < dom.size(); ++i) {
    r = may_meet_narrow(r.benv, p[i], goal[i], dom.at(i), ctx);
    if (!r.holds) return {benv, false};
  }
  return r;
}

}  // namespace holesynth
