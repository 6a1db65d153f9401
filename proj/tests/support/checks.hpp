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

// Property checks shared by the unit tests and the acceptance runner.

#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "holesynth/abstract_interp.hpp"
#include "holesynth/domains.hpp"
#include "holesynth/engine.hpp"
#include "oracles.hpp"

namespace holesynth::check {

struct Report {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::size_t refuted = 0;  // cases the check under test rejected
  std::string first;  // description of the first violation

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
};

inline std::vector<Op> value_ops() {
  std::vector<Op> ops;
  for (const auto& sig : all_signatures())
    if (sig.result != Sort::Bool) ops.push_back(sig.op);
  return ops;
}

inline ProductDomain all_domains() {
  return ProductDomain({std::make_shared<PrefixDomain>(), std::make_shared<SuffixDomain>(),
                        std::make_shared<LengthDomain>()});
}

// Random hole-free terms of size <= max_size: every Elem the abstract
// interpreter produces must contain the concrete result.
inline Report transfer_soundness(std::size_t terms, std::uint32_t max_size, std::uint64_t seed) {
  Report rep;
  const std::vector<Param> params{{"x", Sort::String}, {"n", Sort::Int}};
  std::vector<Term> leaves{make_var("x", 0, Sort::String), make_var("n", 1, Sort::Int),
                           make_const(Value::str(" ")), make_const(Value::str("Dr. ")),
                           make_const(Value::str("-")), make_const(Value::integer(0)),
                           make_const(Value::integer(1)), make_const(Value::integer(3))};
  std::vector<Op> ops;
  for (const auto& sig : all_signatures()) ops.push_back(sig.op);
  oracle::TermGen gen(leaves, ops, seed);
  auto doms = all_domains();
  AnalysisCtx ctx(24);
  LengthDomain::install(ctx);
  const Sort sorts[] = {Sort::String, Sort::String, Sort::Int, Sort::Bool};
  for (std::size_t k = 0; rep.cases < terms; ++k) {
    auto budget = std::uniform_int_distribution<std::uint32_t>(1, max_size)(gen.rng());
    auto t = gen.gen(sorts[k % 4], budget);
    if (!t || t->size > max_size) continue;
    std::vector<Value> vals{Value::str(oracle::random_string(gen.rng(), "Dr. ab-1", 9)),
                            Value::integer(std::uniform_int_distribution<std::int64_t>(-2, 12)(gen.rng()))};
    auto out = concrete_eval(vals, t);
    // Parameters abstracted as constants, then with symbolic lengths.
    for (int mode = 0; mode < 2; ++mode) {
      AbsEnv env;
      for (std::size_t i = 0; i < params.size(); ++i) {
        auto p = alpha_product(vals[i], doms);
        if (mode == 1) {
          SymId sym = param_symbol(i, params[i].sort);
          std::int64_t n = vals[i].is_str() ? static_cast<std::int64_t>(vals[i].as_str().size()) : vals[i].as_int();
          ctx.solver.set_bounds(sym, n, n);
          p[0] = p[1] = Abstraction::top();
          p[2] = LengthDomain::make_expr(LinExpr::var(sym));
        }
        env.bind(params[i].name, p);
      }
      auto r = abs_eval(env, BoundsEnv(), t, doms, ctx);
      for (std::size_t d = 0; d < doms.size(); ++d) {
        const auto& a = r.value[d];
        if (a.is_elem() && !doms.at(d).member(out, a, ctx)) {
          std::ostringstream os;
          os << to_sexpr(t) << " on x=" << vals[0].to_sexpr() << " n=" << vals[1].to_sexpr()
             << " evaluates to " << out.to_sexpr() << " outside " << doms.at(d).name() << " "
             << a.to_string();
          rep.fail(os.str());
        }
      }
    }
    ++rep.cases;
  }
  return rep;
}

// Values of every hole-free term of height <= h over the leaves, per sort.
inline std::map<Sort, std::set<std::pair<std::string, std::int64_t>>> closure_values(
    const std::vector<Value>& leaf_values, const std::vector<Op>& ops, int h) {
  using Key = std::pair<std::string, std::int64_t>;
  auto key = [](const Value& v) { return v.is_str() ? Key{v.as_str(), 0} : Key{"", v.as_int()}; };
  std::map<Sort, std::set<Key>> cur;
  for (const auto& v : leaf_values) cur[v.sort()].insert(key(v));
  auto value = [](Sort s, const Key& k) { return s == Sort::String ? Value::str(k.first) : Value::integer(k.second); };
  for (int level = 2; level <= h; ++level) {
    auto next = cur;
    for (auto op : ops) {
      const auto& sig = signature(op);
      std::vector<std::vector<Value>> pools;
      for (auto s : sig.param_sorts()) {
        std::vector<Value> vs;
        for (const auto& k : cur[s]) vs.push_back(value(s, k));
        pools.push_back(std::move(vs));
      }
      std::vector<Value> args(sig.arity);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == sig.arity) {
          next[sig.result].insert(key(apply_op(op, args)));
          return;
        }
        for (const auto& v : pools[i]) {
          args[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
    cur = std::move(next);
  }
  return cur;
}

// Terms of each (sort, size) over the leaves, holes included as leaves.
inline std::map<std::pair<Sort, std::uint32_t>, std::vector<Term>> terms_by_size(
    const std::vector<Term>& leaves, const std::vector<Op>& ops, std::uint32_t max_size) {
  std::map<std::pair<Sort, std::uint32_t>, std::vector<Term>> by;
  for (const auto& l : leaves) by[{l->sort, 1}].push_back(l);
  for (std::uint32_t n = 2; n <= max_size; ++n)
    for (auto op : ops) {
      const auto& sig = signature(op);
      std::vector<Term> args(sig.arity);
      std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i == sig.arity) {
          if (left == 0) by[{sig.result, n}].push_back(make_app(op, args));
          return;
        }
        for (std::uint32_t s = 1; s + (sig.arity - i - 1) <= left; ++s)
          for (const auto& t : by[{sig.params[i], s}]) {
            args[i] = t;
            rec(i + 1, left - s);
          }
      };
      rec(0, n - 1);
    }
  return by;
}

struct GoalCase {
  std::string name;
  Product goal;  // over all_domains()
  // Whether a concrete output lies in γ(goal) for input x.
  std::function<bool(const std::string& out, const std::string& x)> contains;
};

// Every one-hole partial String term of size <= max_size over x and a
// two-constant pool; a refuted term must have no filling of height <= 3 whose
// output lands in γ(goal).
inline Report pruning_soundness(std::uint32_t max_size) {
  Report rep;
  auto doms = all_domains();
  AnalysisCtx ctx(24);
  LengthDomain::install(ctx);
  const Value space = Value::str(" "), one = Value::integer(1);
  auto ops = value_ops();
  const SymId xlen = param_symbol(0, Sort::String);

  VarAllocator alloc;
  alloc.fresh(Sort::String);  // keep clear of the parameter symbol
  BoundsEnv benv;
  auto fresh_label = [&](Sort s) {
    Product p;
    for (std::size_t d = 0; d < doms.size(); ++d) {
      auto v = alloc.fresh(s);
      benv = benv.with_fresh(v);
      p.push_back(Abstraction::var(v));
    }
    return std::make_shared<const Product>(std::move(p));
  };
  auto top_label = std::make_shared<const Product>(Product(doms.size(), Abstraction::top()));
  std::vector<Term> leaves{make_var("x", 0, Sort::String), make_const(space), make_const(one),
                           make_hole(0, Sort::String, fresh_label(Sort::String)),
                           make_hole(1, Sort::Int, fresh_label(Sort::Int)),
                           make_hole(2, Sort::String, top_label), make_hole(3, Sort::Int, top_label)};
  std::vector<Term> partial;
  for (const auto& [key, ts] : terms_by_size(leaves, ops, max_size))
    if (key.first == Sort::String)
      for (const auto& t : ts)
        if (t->hole_count == 1) partial.push_back(t);

  auto T = Abstraction::top();
  std::vector<GoalCase> goals{
      {"prefix Dr.", {PrefixDomain::make("Dr. "), T, T},
       [](const std::string& o, const std::string&) { return o.starts_with("Dr. "); }},
      {"suffix er", {T, SuffixDomain::make("er"), T},
       [](const std::string& o, const std::string&) { return o.ends_with("er"); }},
      {"len 5", {T, T, LengthDomain::make_const(5)},
       [](const std::string& o, const std::string&) { return o.size() == 5; }},
      {"len |x|+1", {T, T, LengthDomain::make_expr(LinExpr::var(xlen) + LinExpr(1))},
       [](const std::string& o, const std::string& x) { return o.size() == x.size() + 1; }},
      {"prefix N and len 3", {PrefixDomain::make("N"), T, LengthDomain::make_const(3)},
       [](const std::string& o, const std::string&) { return o.starts_with("N") && o.size() == 3; }},
  };
  const std::vector<std::string> inputs{"Nancy FreeHafer", "Dr. Who", "", "N1"};

  for (const auto& x : inputs) {
    auto fills = closure_values({Value::str(x), space, one}, ops, 3);
    ctx.solver.set_bounds(xlen, static_cast<std::int64_t>(x.size()), static_cast<std::int64_t>(x.size()));
    for (int mode = 0; mode < 2; ++mode) {
      AbsEnv env;
      Product px = alpha_product(Value::str(x), doms);
      if (mode == 0) px = {T, T, LengthDomain::make_expr(LinExpr::var(xlen))};
      env.bind("x", px);
      for (const auto& g : goals) {
        for (const auto& t : partial) {
          ++rep.cases;
          if (satisfies_goal(env, benv, t, g.goal, doms, ctx).holds) continue;
          ++rep.refuted;
          const TermNode* hole = leftmost_hole(t);
          for (const auto& [s, k] : fills[hole->sort]) {
            Value v = hole->sort == Sort::String ? Value::str(s) : Value::integer(k);
            auto out = concrete_eval(std::vector<Value>{Value::str(x)}, fill_leftmost(t, make_const(v)));
            if (g.contains(out.as_str(), x)) {
              rep.fail(to_sexpr(t) + " refuted for goal " + g.name + " on x=\"" + x +
                       "\" but hole value " + v.to_sexpr() + " gives " + out.to_sexpr());
              break;
            }
          }
        }
      }
    }
  }
  return rep;
}

// Random linear systems against exhaustive enumeration.
inline Report solver_oracle(std::size_t systems, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  const std::int64_t lo = 0, hi = 30;
  for (std::size_t k = 0; k < systems; ++k) {
    std::size_t n = 1 + k % 4;
    std::vector<SymId> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(4 * (i + 1) + 1);
    auto cs = oracle::random_system(rng, vars, 6, hi);
    SolverCtx ctx(hi);
    for (auto v : vars) ctx.set_bounds(v, lo, hi);
    for (const auto& c : cs) ctx.assert_constraint(c);
    SymId target = vars[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];

    // Flattened brute force; std::map lookups are too slow for 31^4 boxes.
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> consts;
    for (const auto& c : cs) {
      std::vector<std::int64_t> row;
      for (auto v : vars) row.push_back(c.expr.coeff(v));
      rows.push_back(std::move(row));
      consts.push_back(c.expr.constant_term());
    }
    std::size_t ti = 0;
    while (vars[ti] != target) ++ti;
    std::set<std::int64_t> want;
    std::vector<std::int64_t> a(n, lo);
    while (true) {
      bool ok = true;
      for (std::size_t r = 0; ok && r < rows.size(); ++r) {
        std::int64_t s = consts[r];
        for (std::size_t i = 0; i < n; ++i) s += rows[r][i] * a[i];
        ok = cs[r].rel == Rel::Eq ? s == 0 : s <= 0;
      }
      if (ok) want.insert(a[ti]);
      std::size_t i = 0;
      while (i < n && a[i] == hi) a[i++] = lo;
      if (i == n) break;
      ++a[i];
    }
    ++rep.cases;
    auto sat = ctx.check_sat();
    auto got = ctx.solve_for(target);
    std::vector<std::int64_t> wantv(want.begin(), want.end());
    std::ostringstream os;
    for (const auto& c : cs) os << c.to_string() << "; ";
    if (sat == SatResult::Unknown || (sat == SatResult::Sat) != !want.empty())
      rep.fail("check_sat " + std::string(to_string(sat)) + " on " + os.str());
    else if (got.partial || got.values != wantv)
      rep.fail("solve_for mismatch on " + os.str());
  }
  return rep;
}

struct CompletenessReport {
  std::size_t tested = 0;
  std::size_t expected = 0;
  std::size_t missing = 0;
  std::size_t extra = 0;
  std::size_t duplicates = 0;
  std::string example;
  bool ok() const { return missing == 0 && extra == 0 && duplicates == 0; }
};

// Runs the engine to exhaustion on an unsolvable task and compares the tested
// programs with an independent bottom-up enumeration.
inline CompletenessReport completeness(std::uint32_t max_size, bool use_cache, bool use_templates) {
  Problem p;
  p.params = {{"x", Sort::String}};
  p.ret = Sort::String;
  p.examples = {{{Value::str("ab")}, Value::str("unreachable!")}};
  for (const auto& sig : all_signatures()) p.ops.push_back(sig.op);
  p.constants = {Value::str(" "), Value::integer(1)};
  p.domains = all_domains();
  SearchOptions o;
  o.max_size = max_size;
  o.use_cache = use_cache;
  o.use_templates = use_templates;
  o.record_tested = true;
  o.timeout_s = 600;
  auto res = synthesize(p, o);

  CompletenessReport rep;
  std::multiset<std::string> got;
  for (const auto& t : res.tested_terms) got.insert(to_sexpr(t));
  std::set<std::string> uniq(got.begin(), got.end());
  rep.tested = got.size();
  rep.duplicates = got.size() - uniq.size();
  std::vector<Term> leaves{make_var("x", 0, Sort::String), make_const(Value::str(" ")),
                           make_const(Value::integer(1))};
  auto all = oracle::exhaustive_terms(leaves, value_ops(), max_size)[Sort::String];
  rep.expected = all.size();
  for (const auto& s : all)
    if (!uniq.count(s)) {
      if (rep.missing++ == 0) rep.example = "missing " + s;
    }
  for (const auto& s : uniq)
    if (!all.count(s)) {
      if (rep.extra++ == 0 && rep.example.empty()) rep.example = "extra " + s;
    }
  return rep;
}

}  // namespace holesynth::check
