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

#include "holesynth/concrete_interp.hpp"
#include "oracles.hpp"

namespace holesynth {
namespace {

Value run(Op op, std::vector<Value> args) { return apply_op(op, args); }
Value S(const char* s) { return Value::str(s); }
Value I(std::int64_t v) { return Value::integer(v); }

TEST_CASE("operator examples") {
  CHECK(run(Op::Substr, {S("Ducati100"), I(0), I(6)}) == S("Ducati"));
  CHECK(run(Op::IndexOf, {S("abc"), S("z"), I(0)}) == I(-1));
  CHECK(run(Op::Concat, {S("a"), S("b")}) == S("ab"));
}

TEST_CASE("edge cases follow SMT-LIB") {
  CHECK(run(Op::Substr, {S("abc"), I(-1), I(2)}) == S(""));
  CHECK(run(Op::Substr, {S("abc"), I(1), I(0)}) == S(""));
  CHECK(run(Op::Substr, {S("abc"), I(3), I(1)}) == S(""));
  CHECK(run(Op::Substr, {S("abc"), I(1), I(99)}) == S("bc"));
  CHECK(run(Op::IndexOf, {S("abc"), S(""), I(3)}) == I(3));
  CHECK(run(Op::IndexOf, {S("abc"), S(""), I(4)}) == I(-1));
  CHECK(run(Op::IndexOf, {S("abcb"), S("b"), I(2)}) == I(3));
  CHECK(run(Op::Replace, {S("a-b-c"), S("-"), S(".")}) == S("a.b-c"));
  CHECK(run(Op::Replace, {S("abc"), S(""), S("x")}) == S("xabc"));
  CHECK(run(Op::At, {S("abc"), I(3)}) == S(""));
  CHECK(run(Op::At, {S("abc"), I(1)}) == S("b"));
  CHECK(run(Op::IntToStr, {I(-4)}) == S(""));
  CHECK(run(Op::IntToStr, {I(407)}) == S("407"));
  CHECK(run(Op::StrToInt, {S("0042")}) == I(42));
  CHECK(run(Op::StrToInt, {S("")}) == I(-1));
  CHECK(run(Op::StrToInt, {S("4a")}) == I(-1));
  CHECK(run(Op::StrToInt, {S("99999999999999999999999")}) == I(INT64_MAX));
  CHECK(run(Op::PrefixOf, {S("ab"), S("abc")}) == Value::boolean(true));
  CHECK(run(Op::SuffixOf, {S("ab"), S("abc")}) == Value::boolean(false));
  CHECK(run(Op::Contains, {S("abc"), S("")}) == Value::boolean(true));
  CHECK(run(Op::Add, {I(INT64_MAX), I(1)}) == I(INT64_MAX));
  CHECK(run(Op::Sub, {I(INT64_MIN), I(1)}) == I(INT64_MIN));
}

TEST_CASE("test_program examples") {
  Param name{"name", Sort::String};
  auto v = make_var("name", 0, Sort::String);
  Program id{"f", {name}, Sort::String, v};
  std::vector<Example> ex{{{S("x")}, S("x")}};
  CHECK(test_program(id, ex));
  Program konst{"f", {name}, Sort::String, make_const(S("y"))};
  CHECK_FALSE(test_program(konst, ex));
  auto first = make_app(Op::Substr, {v, make_const(I(0)),
                                     make_app(Op::IndexOf, {v, make_const(S(" ")), make_const(I(0))})});
  std::vector<Example> nancy{{{S("Nancy FreeHafer")}, S("Nancy")}};
  CHECK(test_term(first, nancy));
}

TEST_CASE("unbound variables") {
  auto v = make_var("y", 0, Sort::String);
  CHECK_THROWS_AS(concrete_eval(Bindings{}, v), UnboundVariable);
  CHECK(concrete_eval(Bindings{{"y", S("q")}}, v) == S("q"));
  CHECK_FALSE(test_term(v, std::vector<Example>{{{}, S("q")}}));
}

TEST_CASE("agrees with an independent evaluator on random terms") {
  std::vector<Term> leaves{make_var("x", 0, Sort::String), make_var("n", 1, Sort::Int),
                           make_const(S(" ")), make_const(S("-")), make_const(I(0)),
                           make_const(I(1)), make_const(I(3))};
  std::vector<Op> ops;
  for (const auto& sig : all_signatures()) ops.push_back(sig.op);
  oracle::TermGen gen(leaves, ops, 17);
  int n = 0;
  for (int k = 0; k < 10000; ++k) {
    Sort s = static_cast<Sort>(k % 3);
    auto t = gen.gen(s, 1 + k % 12);
    if (!t) continue;
    std::vector<Value> params{Value::str(oracle::random_string(gen.rng(), "ab -1", 8)),
                              Value::integer(static_cast<std::int64_t>(gen.rng()() % 12) - 3)};
    auto got = concrete_eval(params, t);
    auto want = oracle::naive_eval(t, params);
    if (!(got == want)) {
      FAIL_CHECK(to_sexpr(t) << " gives " << got.to_sexpr() << ", expected " << want.to_sexpr());
      break;
    }
    ++n;
  }
  CHECK(n >= 9000);
}

}  // namespace
}  // namespace holesynth
