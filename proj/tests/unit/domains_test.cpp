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

#include <doctest.h>

#include <random>

#include "holesynth/concrete_interp.hpp"
#include "holesynth/domains.hpp"
#include "oracles.hpp"

namespace holesynth {
namespace {

const PrefixDomain kPrefix;
const SuffixDomain kSuffix;
const LengthDomain kLength;

Abstraction pre(std::string s) { return PrefixDomain::make(std::move(s)); }
Abstraction suf(std::string s) { return SuffixDomain::make(std::move(s)); }
Abstraction len(std::int64_t n) { return LengthDomain::make_const(n); }
std::string rev(std::string s) { return {s.rbegin(), s.rend()}; }
const std::string& text(const Abstraction& a) { return a.as<StringPayload>().text; }

template <class... A>
TransferResult apply(const Domain& d, Op op, AnalysisCtx& ctx, A... args) {
  std::vector<Abstraction> v{args...};
  return d.transfer(op, v, BoundsEnv(), ctx);
}

std::vector<std::string> small_strings() {
  std::vector<std::string> out{""};
  for (std::size_t n = 0; n < out.size() && out.size() < 40; ++n)
    for (char c : {'a', 'b', ' '})
      if (out[n].size() < 3) out.push_back(out[n] + c);
  return out;
}

TEST_CASE("prefix order laws") {
  AnalysisCtx ctx;
  auto all = small_strings();
  for (const auto& a : all)
    for (const auto& b : all) {
      bool ab = kPrefix.leq(pre(a), pre(b), ctx), ba = kPrefix.leq(pre(b), pre(a), ctx);
      if (ab && ba) CHECK(a == b);
      CHECK(kPrefix.overlaps(pre(a), pre(b), ctx) == (ab || ba));
      auto j = kPrefix.join(pre(a), pre(b), ctx);
      REQUIRE(j);
      CHECK(kPrefix.leq(pre(a), *j, ctx));
      CHECK(kPrefix.leq(pre(b), *j, ctx));
      auto m = kPrefix.meet(pre(a), pre(b), ctx);
      REQUIRE(m);
      if (m->is_elem()) {
        CHECK(kPrefix.leq(*m, pre(a), ctx));
        CHECK(kPrefix.leq(*m, pre(b), ctx));
      } else {
        CHECK_FALSE(ab);
        CHECK_FALSE(ba);
      }
      for (const auto& c : all) {
        if (kPrefix.leq(pre(a), pre(c), ctx) && kPrefix.leq(pre(b), pre(c), ctx))
          CHECK(kPrefix.leq(*j, pre(c), ctx));
        if (ab && kPrefix.leq(pre(b), pre(c), ctx)) CHECK(kPrefix.leq(pre(a), pre(c), ctx));
      }
    }
}

TEST_CASE("suffix is the mirror image of prefix") {
  AnalysisCtx ctx;
  auto all = small_strings();
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(kSuffix.leq(suf(a), suf(b), ctx) == kPrefix.leq(pre(rev(a)), pre(rev(b)), ctx));
      CHECK(text(*kSuffix.join(suf(a), suf(b), ctx)) == rev(text(*kPrefix.join(pre(rev(a)), pre(rev(b)), ctx))));
      auto ms = kSuffix.meet(suf(a), suf(b), ctx);
      auto mp = kPrefix.meet(pre(rev(a)), pre(rev(b)), ctx);
      CHECK(ms->is_bot() == mp->is_bot());
      if (ms->is_elem()) CHECK(text(*ms) == rev(text(*mp)));
      auto cs = apply(kSuffix, Op::Concat, ctx, suf(a), suf(b)).value;
      auto cp = apply(kPrefix, Op::Concat, ctx, pre(rev(b)), pre(rev(a))).value;
      CHECK(text(cs) == rev(text(cp)));
    }
}

TEST_CASE("prefix transfer examples") {
  AnalysisCtx ctx;
  VarId v = VarAllocator().fresh(Sort::String);
  std::vector<Abstraction> args{kPrefix.alpha(Value::str("Dr. ")), Abstraction::var(v)};
  auto r = kPrefix.transfer(Op::Concat, args, BoundsEnv().with_fresh(v), ctx);
  CHECK(r.value == pre("Dr. "));
  CHECK(apply(kPrefix, Op::Len, ctx, pre("ab")).value.is_bot());
  CHECK(apply(kPrefix, Op::Substr, ctx, Abstraction::top(), Abstraction::top(), Abstraction::top()).value.is_top());
  CHECK(apply(kPrefix, Op::Substr, ctx, pre("Ducati"), kPrefix.alpha(Value::integer(0)),
              kPrefix.alpha(Value::integer(3))).value == pre("Duc"));
}

TEST_CASE("suffix transfer examples") {
  AnalysisCtx ctx;
  CHECK(apply(kSuffix, Op::Concat, ctx, Abstraction::top(), kSuffix.alpha(Value::str(" Esq"))).value == suf(" Esq"));
  CHECK(apply(kSuffix, Op::IntToStr, ctx, Abstraction::top()).value.is_top());
  CHECK(apply(kSuffix, Op::IntToStr, ctx, Abstraction::bot()).value.is_top());
  CHECK(kSuffix.alpha(Value::str("Doe")) == suf("Doe"));
}

TEST_CASE("length transfer examples") {
  AnalysisCtx ctx;
  LengthDomain::install(ctx);
  auto eight = apply(kLength, Op::Concat, ctx, len(5), len(3)).value;
  REQUIRE(eight.is_elem());
  CHECK(eight.as<LenPayload>().as_constant() == 8);
  CHECK(apply(kLength, Op::Len, ctx, len(7)).value == len(7));

  // substr(s, 0, v) with |s| = L has length v whenever v <= L.
  const SymId L = 4 * 100, n = 4 * 101 + 1;
  auto r = apply(kLength, Op::Substr, ctx, LengthDomain::make_expr(LinExpr::var(L)), len(0),
                 LengthDomain::make_expr(LinExpr::var(n)));
  REQUIRE(r.value.is_elem());
  for (std::int64_t lv = 0; lv <= 6; ++lv)
    for (std::int64_t nv = -2; nv <= 8; ++nv) {
      ctx.solver.set_bounds(L, lv, lv);
      ctx.solver.set_bounds(n, nv, nv);
      std::int64_t expect = nv <= 0 ? 0 : std::min(nv, lv);
      CHECK(kLength.leq(len(expect), r.value, ctx));
      CHECK_FALSE(kLength.leq(len(expect + 1), r.value, ctx));
    }
}

TEST_CASE("literal syntax") {
  AnalysisCtx ctx;
  CHECK(kPrefix.parse_literal("\"Dr. \"", ctx) == pre("Dr. "));
  CHECK(kPrefix.parse_literal("Dr. ", ctx) == pre("Dr. "));
  CHECK(kSuffix.parse_literal("\"say \"\"hi\"\"\"", ctx) == suf("say \"hi\""));
  CHECK(kLength.parse_literal("5", ctx) == len(5));
  CHECK_THROWS_AS(kLength.parse_literal("five", ctx), Error);
  CHECK_THROWS_AS(make_domain("interval"), Error);
  CHECK(make_domain("len")->id() == kLengthDomain);
}

TEST_CASE("too many alternatives widen to Top") {
  std::vector<LenAlt> alts;
  for (std::size_t i = 0; i <= LengthDomain::kMaxAlternatives; ++i)
    alts.push_back({{Constraint::eq(LinExpr::var(4), LinExpr(static_cast<std::int64_t>(i)))}, LinExpr(1)});
  CHECK(LengthDomain::make_alts(alts).is_top());
  alts.pop_back();
  CHECK(LengthDomain::make_alts(alts).is_elem());
}

Value random_value(Sort s, std::mt19937_64& rng) {
  if (s == Sort::String) return Value::str(oracle::random_string(rng, "ab 1-", 6));
  if (s == Sort::Int) return Value::integer(std::uniform_int_distribution<std::int64_t>(-3, 9)(rng));
  return Value::boolean(rng() & 1);
}

// Concrete results stay inside the transfer of the abstracted arguments.
TEST_CASE("transfer soundness on abstracted constants") {
  AnalysisCtx ctx(24);
  LengthDomain::install(ctx);
  std::mt19937_64 rng(3);
  const Domain* doms[] = {&kPrefix, &kSuffix, &kLength};
  for (const auto& sig : all_signatures()) {
    for (const Domain* d : doms) {
      int elems = 0;
      for (int i = 0; i < 10000; ++i) {
        std::vector<Value> vals;
        std::vector<Abstraction> abs;
        for (auto s : sig.param_sorts()) {
          vals.push_back(random_value(s, rng));
          abs.push_back(d->alpha(vals.back()));
        }
        auto out = apply_op(sig.op, vals);
        auto r = d->transfer(sig.op, abs, BoundsEnv(), ctx).value;
        if (!r.is_elem()) continue;
        ++elems;
        if (!d->member(out, r, ctx)) {
          FAIL_CHECK(d->name() << " " << sig.name << " gives " << r.to_string() << " for "
                                << out.to_sexpr());
          break;
        }
      }
      INFO(d->name() << " " << sig.name);
      if (d == &kLength && sig.result != Sort::Bool && sig.op != Op::IndexOf && sig.op != Op::StrToInt)
        CHECK(elems > 0);
    }
  }
}

// Same with argument lengths kept symbolic and pinned by solver bounds.
TEST_CASE("length transfer soundness on symbolic arguments") {
  AnalysisCtx ctx(12);
  LengthDomain::install(ctx);
  std::mt19937_64 rng(5);
  for (const auto& sig : all_signatures()) {
    for (int i = 0; i < 1500; ++i) {
      std::vector<Value> vals;
      std::vector<Abstraction> abs;
      for (std::size_t k = 0; k < sig.arity; ++k) {
        auto s = sig.params[k];
        vals.push_back(random_value(s, rng));
        SymId sym = (static_cast<SymId>(1000 + k) << 2) | static_cast<SymId>(s);
        std::int64_t n = vals.back().is_str() ? static_cast<std::int64_t>(vals.back().as_str().size())
                                              : vals.back().as_int();
        ctx.solver.set_bounds(sym, n, n);
        abs.push_back(s == Sort::Bool ? kLength.alpha(vals.back()) : LengthDomain::make_expr(LinExpr::var(sym)));
      }
      auto out = apply_op(sig.op, vals);
      auto r = kLength.transfer(sig.op, abs, BoundsEnv(), ctx).value;
      if (r.is_elem() && !kLength.member(out, r, ctx)) {
        FAIL_CHECK(sig.name << " gives " << r.to_string() << " for " << out.to_sexpr());
        break;
      }
    }
  }
}

}  // namespace
}  // namespace holesynth
