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

#include "holesynth/domains.hpp"

#include <algorithm>
#include <charconv>

namespace holesynth {

bool StringPayload::equals(const ElemPayload& o) const {
  auto* p = dynamic_cast<const StringPayload*>(&o);
  return p && p->text == text;
}
std::uint64_t StringPayload::hash() const { return hash_string(text); }
std::string StringPayload::to_string() const { return quote_string(text); }

bool IntPayload::equals(const ElemPayload& o) const {
  auto* p = dynamic_cast<const IntPayload*>(&o);
  return p && p->value == value;
}
std::uint64_t IntPayload::hash() const { return hash_mix(0x1d, static_cast<std::uint64_t>(value)); }
std::string IntPayload::to_string() const { return "int " + std::to_string(value); }

namespace {

const std::string* str_of(const Abstraction& a) {
  auto* p = a.try_as<StringPayload>();
  return p ? &p->text : nullptr;
}

const std::int64_t* int_of(const Abstraction& a) {
  auto* p = a.try_as<IntPayload>();
  return p ? &p->value : nullptr;
}

bool starts_with(const std::string& s, const std::string& p) { return s.starts_with(p); }
bool ends_with(const std::string& s, const std::string& p) { return s.ends_with(p); }

// Literal syntax of annotations: an SMT-LIB string literal or raw text.
std::string literal_text(std::string_view text) {
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
    std::string out;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
      if (text[i] == '"') {
        if (i + 2 < text.size() && text[i + 1] == '"') ++i;
        else throw Error("malformed string literal: " + std::string(text));
      }
      out.push_back(text[i]);
    }
    return out;
  }
  return std::string(text);
}

void check_arity(Op op, std::span<const Abstraction> args) {
  if (args.size() != signature(op).arity)
    throw Error(std::string(op_name(op)) + ": transfer called with wrong arity");
}

bool produces_int_or_bool(Op op) { return signature(op).result != Sort::String; }

}  // namespace

// ---------------------------------------------------------------- prefix

Abstraction PrefixDomain::make(std::string prefix) {
  return Abstraction::elem(kPrefixDomain, std::make_shared<StringPayload>(std::move(prefix)));
}

Abstraction PrefixDomain::make_int(std::int64_t v) {
  return Abstraction::elem(kPrefixDomain, std::make_shared<IntPayload>(v));
}

bool PrefixDomain::leq(const Abstraction& e1, const Abstraction& e2, AnalysisCtx&) const {
  auto *s1 = str_of(e1), *s2 = str_of(e2);
  if (s1 && s2) return starts_with(*s1, *s2);
  auto *i1 = int_of(e1), *i2 = int_of(e2);
  return i1 && i2 && *i1 == *i2;
}

std::optional<Abstraction> PrefixDomain::join(const Abstraction& a, const Abstraction& b,
                                              AnalysisCtx&) const {
  auto *s1 = str_of(a), *s2 = str_of(b);
  if (!s1 || !s2) return std::nullopt;
  auto m = std::mismatch(s1->begin(), s1->end(), s2->begin(), s2->end());
  return make(std::string(s1->begin(), m.first));
}

std::optional<Abstraction> PrefixDomain::meet(const Abstraction& a, const Abstraction& b,
                                              AnalysisCtx& ctx) const {
  if (leq(a, b, ctx)) return a;
  if (leq(b, a, ctx)) return b;
  return Abstraction::bot();
}

bool PrefixDomain::overlaps(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const {
  return leq(e1, e2, ctx) || leq(e2, e1, ctx);
}

Abstraction PrefixDomain::alpha(const Value& v) const {
  switch (v.sort()) {
    case Sort::String: return make(v.as_str());
    case Sort::Int: return make_int(v.as_int());
    case Sort::Bool: return Abstraction::bot();
  }
  return Abstraction::top();
}

bool PrefixDomain::member(const Value& v, const Abstraction& elem, AnalysisCtx&) const {
  if (auto* s = str_of(elem)) return v.is_str() && starts_with(v.as_str(), *s);
  if (auto* i = int_of(elem)) return v.is_int() && v.as_int() == *i;
  return false;
}

TransferResult PrefixDomain::transfer(Op op, std::span<const Abstraction> args,
                                      const BoundsEnv& benv, AnalysisCtx&) const {
  check_arity(op, args);
  if (produces_int_or_bool(op)) return {Abstraction::bot(), benv};
  switch (op) {
    case Op::Concat:
      if (args[0].is_bot()) return {Abstraction::bot(), benv};
      if (str_of(args[0])) return {args[0], benv};
      return {Abstraction::top(), benv};
    case Op::Substr: {
      auto* s = str_of(args[0]);
      auto* i = int_of(args[1]);
      auto* n = int_of(args[2]);
      if (s && i && n && *i == 0) {
        auto keep = std::clamp<std::int64_t>(*n, 0, static_cast<std::int64_t>(s->size()));
        return {make(s->substr(0, static_cast<std::size_t>(keep))), benv};
      }
      return {Abstraction::top(), benv};
    }
    default: return {Abstraction::top(), benv};
  }
}

Abstraction PrefixDomain::parse_literal(std::string_view text, AnalysisCtx&) const {
  return make(literal_text(text));
}

// ---------------------------------------------------------------- suffix

Abstraction SuffixDomain::make(std::string suffix) {
  return Abstraction::elem(kSuffixDomain, std::make_shared<StringPayload>(std::move(suffix)));
}

bool SuffixDomain::leq(const Abstraction& e1, const Abstraction& e2, AnalysisCtx&) const {
  auto *s1 = str_of(e1), *s2 = str_of(e2);
  return s1 && s2 && ends_with(*s1, *s2);
}

std::optional<Abstraction> SuffixDomain::join(const Abstraction& a, const Abstraction& b,
                                              AnalysisCtx&) const {
  auto *s1 = str_of(a), *s2 = str_of(b);
  if (!s1 || !s2) return std::nullopt;
  auto m = std::mismatch(s1->rbegin(), s1->rend(), s2->rbegin(), s2->rend());
  return make(std::string(m.first.base(), s1->end()));
}

std::optional<Abstraction> SuffixDomain::meet(const Abstraction& a, const Abstraction& b,
                                              AnalysisCtx& ctx) const {
  if (leq(a, b, ctx)) return a;
  if (leq(b, a, ctx)) return b;
  return Abstraction::bot();
}

bool SuffixDomain::overlaps(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const {
  return leq(e1, e2, ctx) || leq(e2, e1, ctx);
}

Abstraction SuffixDomain::alpha(const Value& v) const {
  if (v.is_str()) return make(v.as_str());
  return Abstraction::bot();
}

bool SuffixDomain::member(const Value& v, const Abstraction& elem, AnalysisCtx&) const {
  auto* s = str_of(elem);
  return s && v.is_str() && ends_with(v.as_str(), *s);
}

TransferResult SuffixDomain::transfer(Op op, std::span<const Abstraction> args,
                                      const BoundsEnv& benv, AnalysisCtx&) const {
  check_arity(op, args);
  if (produces_int_or_bool(op)) return {Abstraction::bot(), benv};
  if (op == Op::Concat) {
    const auto& last = args[1];
    if (last.is_bot()) return {Abstraction::bot(), benv};
    if (str_of(last)) return {last, benv};
  }
  return {Abstraction::top(), benv};
}

Abstraction SuffixDomain::parse_literal(std::string_view text, AnalysisCtx&) const {
  return make(literal_text(text));
}

// ---------------------------------------------------------------- length

bool LenPayload::equals(const ElemPayload& o) const {
  auto* p = dynamic_cast<const LenPayload*>(&o);
  return p && p->is_bool == is_bool && p->bool_value == bool_value && p->alts == alts;
}

std::uint64_t LenPayload::hash() const {
  if (is_bool) return bool_value ? 0xb1 : 0xb2;
  std::uint64_t h = 0x1e4;
  for (const auto& a : alts) {
    for (const auto& g : a.guards) {
      h = hash_mix(h, static_cast<std::uint64_t>(g.rel));
      h = hash_mix(h, static_cast<std::uint64_t>(g.expr.constant_term()));
      for (auto [v, c] : g.expr.coeffs()) h = hash_mix(hash_mix(h, v), static_cast<std::uint64_t>(c));
    }
    h = hash_mix(h, static_cast<std::uint64_t>(a.expr.constant_term()));
    for (auto [v, c] : a.expr.coeffs()) h = hash_mix(hash_mix(h, v), static_cast<std::uint64_t>(c));
  }
  return h;
}

std::string LenPayload::to_string() const {
  if (is_bool) return bool_value ? "len true" : "len false";
  if (auto c = as_constant()) return "len " + std::to_string(*c);
  std::string out = "len {";
  for (std::size_t i = 0; i < alts.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t g = 0; g < alts[i].guards.size(); ++g)
      out += (g ? ", " : "") + alts[i].guards[g].to_string();
    if (!alts[i].guards.empty()) out += " => ";
    out += alts[i].expr.to_string();
  }
  return out + "}";
}

std::optional<std::int64_t> LenPayload::as_constant() const {
  if (is_bool || alts.size() != 1 || !alts[0].guards.empty() || !alts[0].expr.is_constant())
    return std::nullopt;
  return alts[0].expr.constant_term();
}

Abstraction LengthDomain::make_const(std::int64_t n) { return make_expr(LinExpr(n)); }

Abstraction LengthDomain::make_expr(LinExpr e) {
  return make_alts({LenAlt{{}, std::move(e)}});
}

Abstraction LengthDomain::make_bool(bool b) {
  return Abstraction::elem(kLengthDomain, std::make_shared<LenPayload>(b));
}

Abstraction LengthDomain::make_alts(std::vector<LenAlt> alts) {
  if (alts.empty()) return Abstraction::bot();
  if (alts.size() > kMaxAlternatives) return Abstraction::top();
  return Abstraction::elem(kLengthDomain, std::make_shared<LenPayload>(std::move(alts)));
}

void LengthDomain::install(AnalysisCtx& ctx) {
  auto len_hi = ctx.solver.max_len();
  auto int_hi = int_bound(ctx);
  ctx.solver.set_default_bounds(
      [len_hi, int_hi](SymId s) -> std::optional<std::pair<std::int64_t, std::int64_t>> {
        if (var_sort(s) == Sort::Int) return std::make_pair(-int_hi, int_hi);
        return std::make_pair<std::int64_t, std::int64_t>(0, std::int64_t{len_hi});
      });
}

namespace {

const LenPayload* len_of(const Abstraction& a) { return a.try_as<LenPayload>(); }

// Ground guards are decided on the spot; returns false when one fails.
bool simplify_guards(std::vector<Constraint>& guards) {
  std::vector<Constraint> kept;
  for (auto& g : guards) {
    if (g.expr.is_constant()) {
      auto c = g.expr.constant_term();
      if (g.rel == Rel::Eq ? c != 0 : c > 0) return false;
      continue;
    }
    if (std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(std::move(g));
  }
  guards = std::move(kept);
  return true;
}

bool may_equal(const LenPayload& a, const LenPayload& b, AnalysisCtx& ctx) {
  if (a.is_bool || b.is_bool) return a.is_bool && b.is_bool && a.bool_value == b.bool_value;
  for (const auto& x : a.alts)
    for (const auto& y : b.alts) {
      std::vector<Constraint> cs = x.guards;
      cs.insert(cs.end(), y.guards.begin(), y.guards.end());
      cs.push_back(Constraint::eq(x.expr, y.expr));
      if (!simplify_guards(cs)) continue;
      if (cs.empty()) return true;
      if (ctx.solver.check_sat_with(cs) != SatResult::Unsat) return true;
    }
  return false;
}

using Alts = std::vector<LenAlt>;

void add_alt(Alts& out, std::vector<Constraint> guards, LinExpr expr) {
  if (!simplify_guards(guards)) return;
  LenAlt alt{std::move(guards), std::move(expr)};
  if (std::find(out.begin(), out.end(), alt) == out.end()) out.push_back(std::move(alt));
}

std::vector<Constraint> with(const std::vector<Constraint>& base, std::initializer_list<Constraint> more) {
  std::vector<Constraint> g = base;
  g.insert(g.end(), more.begin(), more.end());
  return g;
}

const LinExpr kZero(0);
const LinExpr kOne(1);

// Number of decimal digits of n >= 0.
std::int64_t digits(std::int64_t n) {
  std::int64_t d = 1;
  while (n >= 10) n /= 10, ++d;
  return d;
}

std::optional<bool> ground_bool(Op op, const std::optional<std::int64_t>& s,
                                const std::optional<std::int64_t>& t) {
  if (!s || !t) return std::nullopt;
  // (str.contains s t): t longer than s; (str.prefixof s t) / suffixof: s longer than t.
  if (op == Op::Contains && *t > *s) return false;
  if ((op == Op::PrefixOf || op == Op::SuffixOf) && *s > *t) return false;
  return std::nullopt;
}

}  // namespace

bool LengthDomain::leq(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const {
  auto *a = len_of(e1), *b = len_of(e2);
  if (!a || !b) return false;
  if (e1 == e2) return true;
  auto ca = a->as_constant(), cb = b->as_constant();
  if (ca && cb) return *ca == *cb;
  return may_equal(*a, *b, ctx);
}

std::optional<Abstraction> LengthDomain::meet(const Abstraction& a, const Abstraction& b,
                                              AnalysisCtx& ctx) const {
  if (leq(a, b, ctx)) return a;
  return Abstraction::bot();
}

bool LengthDomain::overlaps(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const {
  return leq(e1, e2, ctx);
}

Abstraction LengthDomain::alpha(const Value& v) const {
  switch (v.sort()) {
    case Sort::String: return make_const(static_cast<std::int64_t>(v.as_str().size()));
    case Sort::Int: return make_const(v.as_int());
    case Sort::Bool: return make_bool(v.as_bool());
  }
  return Abstraction::top();
}

bool LengthDomain::member(const Value& v, const Abstraction& elem, AnalysisCtx& ctx) const {
  return elem.is_elem() && leq(alpha(v), elem, ctx);
}

std::optional<std::vector<LenAlt>> LengthDomain::alternatives(const Abstraction& a,
                                                              const BoundsEnv& benv) {
  if (auto* p = len_of(a)) {
    if (p->is_bool) return std::nullopt;
    return p->alts;
  }
  if (a.is_var()) {
    const auto& b = benv.at(a.var_id());
    if (auto* hi = len_of(b.hi); hi && !hi->is_bool) return hi->alts;
    if (auto* lo = len_of(b.lo); lo && !lo->is_bool) return lo->alts;
    if (b.lo.is_bot() && b.hi.is_top())
      return std::vector<LenAlt>{LenAlt{{}, LinExpr::var(a.var_id())}};
  }
  return std::nullopt;
}

TransferResult LengthDomain::transfer(Op op, std::span<const Abstraction> args,
                                      const BoundsEnv& benv, AnalysisCtx& ctx) const {
  check_arity(op, args);
  for (const auto& a : args)
    if (a.is_bot()) return {Abstraction::bot(), benv};
  if (op == Op::IndexOf || op == Op::StrToInt) return {Abstraction::top(), benv};

  std::vector<std::vector<LenAlt>> in;
  for (const auto& a : args) {
    auto alts = alternatives(a, benv);
    if (!alts) {
      return {Abstraction::top(), benv};
    }
    in.push_back(std::move(*alts));
  }
  std::size_t combos = 1;
  for (const auto& v : in) combos *= v.size();
  if (combos > kMaxAlternatives) return {Abstraction::top(), benv};

  if (op == Op::Contains || op == Op::PrefixOf || op == Op::SuffixOf) {
    std::optional<std::int64_t> s, t;
    if (in[0].size() == 1 && in[0][0].guards.empty() && in[0][0].expr.is_constant())
      s = in[0][0].expr.constant_term();
    if (in[1].size() == 1 && in[1][0].guards.empty() && in[1][0].expr.is_constant())
      t = in[1][0].expr.constant_term();
    if (auto b = ground_bool(op, s, t)) return {make_bool(*b), benv};
    return {Abstraction::top(), benv};
  }

  Alts out;
  std::vector<std::size_t> pick(in.size(), 0);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rem = c;
    std::vector<Constraint> g;
    std::array<LinExpr, kMaxArity> e;
    for (std::size_t i = 0; i < in.size(); ++i) {
      const auto& alt = in[i][rem % in[i].size()];
      rem /= in[i].size();
      g.insert(g.end(), alt.guards.begin(), alt.guards.end());
      e[i] = alt.expr;
    }
    switch (op) {
      case Op::Concat: add_alt(out, g, e[0] + e[1]); break;
      case Op::Len: add_alt(out, g, e[0]); break;
      case Op::Add: add_alt(out, g, e[0] + e[1]); break;
      case Op::Sub: add_alt(out, g, e[0] - e[1]); break;
      case Op::Substr: {
        const auto &s = e[0], &i = e[1], &n = e[2];
        add_alt(out, with(g, {Constraint::ge(i, kZero), Constraint::ge(n, kZero),
                              Constraint::le(i + n, s)}),
                n);
        add_alt(out, with(g, {Constraint::ge(i, kZero), Constraint::lt(i, s),
                              Constraint::ge(i + n, s + kOne)}),
                s - i);
        add_alt(out, with(g, {Constraint::lt(i, kZero)}), kZero);
        add_alt(out, with(g, {Constraint::ge(i, s)}), kZero);
        add_alt(out, with(g, {Constraint::lt(n, kZero)}), kZero);
        break;
      }
      case Op::At: {
        const auto &s = e[0], &i = e[1];
        add_alt(out, with(g, {Constraint::ge(i, kZero), Constraint::lt(i, s)}), kOne);
        add_alt(out, with(g, {Constraint::lt(i, kZero)}), kZero);
        add_alt(out, with(g, {Constraint::ge(i, s)}), kZero);
        break;
      }
      case Op::Replace: {
        const auto &s = e[0], &t = e[1], &u = e[2];
        add_alt(out, g, s);
        add_alt(out, with(g, {Constraint::le(t, s)}), s - t + u);
        break;
      }
      case Op::IntToStr: {
        const auto& n = e[0];
        if (n.is_constant() && g.empty()) {
          auto v = n.constant_term();
          add_alt(out, g, LinExpr(v < 0 ? 0 : digits(v)));
          break;
        }
        add_alt(out, with(g, {Constraint::lt(n, kZero)}), kZero);
        std::int64_t lo = 0;
        for (std::int64_t d = 1; lo <= int_bound(ctx); ++d) {
          std::int64_t hi = lo == 0 ? 9 : lo * 10 - 1;
          add_alt(out, with(g, {Constraint::ge(n, LinExpr(lo)), Constraint::le(n, LinExpr(hi))}),
                  LinExpr(d));
          lo = hi + 1;
        }
        break;
      }
      default: return {Abstraction::top(), benv};
    }
  }
  return {make_alts(std::move(out)), benv};
}

Abstraction LengthDomain::parse_literal(std::string_view text, AnalysisCtx&) const {
  std::int64_t v = 0;
  auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) throw Error("length literal must be an integer: " + std::string(text));
  return make_const(v);
}

DomainPtr make_domain(std::string_view name) {
  if (name == "prefix") return std::make_shared<PrefixDomain>();
  if (name == "suffix") return std::make_shared<SuffixDomain>();
  if (name == "length" || name == "len") return std::make_shared<LengthDomain>();
  throw Error("unknown domain: " + std::string(name));
}

}  // namespace holesynth
