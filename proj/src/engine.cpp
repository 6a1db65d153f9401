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

#include "holesynth/engine.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <chrono>
#include <deque>

namespace holesynth {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Solved: return "solved";
    case Outcome::Timeout: return "timeout";
    case Outcome::Exhausted: return "exhausted";
  }
  return "?";
}

void SmallTermCache::put(Term t, Product abs) { entries_.emplace_back(std::move(t), std::move(abs)); }

std::vector<Term> SmallTermCache::lookup(Sort s, const Product& label, const BoundsEnv& benv,
                                         const ProductDomain& doms, AnalysisCtx& ctx) const {
  std::vector<Term> out;
  for (const auto& [t, abs] : entries_) {
    if (t->sort != s) continue;
    if (doms.empty() || product_may_meet(benv, abs, label, doms, ctx).holds) out.push_back(t);
  }
  return out;
}

std::vector<std::pair<Term, Product>> SmallTermCache::small(Sort s, std::uint32_t max_size) const {
  std::vector<std::pair<Term, Product>> out;
  for (const auto& e : entries_)
    if (e.first->sort == s && e.first->size <= max_size) out.push_back(e);
  return out;
}

std::vector<Term> infer_templates(const Problem& problem, bool prefix_extension,
                                  const std::function<Term(Sort)>& fresh_hole) {
  std::vector<Term> out;
  if (problem.params.size() != 1 || problem.params[0].sort != Sort::String ||
      problem.ret != Sort::String || problem.examples.empty())
    return out;
  auto has = [&](Op op) {
    return std::find(problem.ops.begin(), problem.ops.end(), op) != problem.ops.end();
  };
  if (!has(Op::Substr)) return out;
  bool contains = true, suffix = true, prefix = true;
  for (const auto& ex : problem.examples) {
    const auto& in = ex.inputs.at(0);
    if (!in.is_str() || !ex.output.is_str()) return out;
    const auto& s = in.as_str();
    const auto& o = ex.output.as_str();
    contains = contains && s.find(o) != std::string::npos;
    suffix = suffix && s.ends_with(o);
    prefix = prefix && s.starts_with(o);
  }
  auto input = make_var(problem.params[0].name, 0, Sort::String);
  if (contains)
    out.push_back(make_app(Op::Substr, {input, fresh_hole(Sort::Int), fresh_hole(Sort::Int)}));
  if (suffix && has(Op::Len))
    out.push_back(make_app(Op::Substr, {input, fresh_hole(Sort::Int), make_app(Op::Len, {input})}));
  if (prefix_extension && prefix) {
    auto zero = std::find_if(problem.constants.begin(), problem.constants.end(),
                             [](const Value& v) { return v.is_int() && v.as_int() == 0; });
    if (zero != problem.constants.end())
      out.push_back(make_app(Op::Substr, {input, make_const(*zero), fresh_hole(Sort::Int)}));
  }
  return out;
}

namespace {

constexpr std::size_t kSorts = 3;
std::size_t sidx(Sort s) { return static_cast<std::size_t>(s); }

// A partial program waiting to be expanded into children of size `target`.
struct Entry {
  Term parent;  // null when `fill` is the whole program
  Term fill;
  std::shared_ptr<const BoundsEnv> benv;
  std::uint32_t target = 0;
};

Term materialize(const Entry& e) { return e.parent ? fill_leftmost(e.parent, e.fill) : e.fill; }

}  // namespace

struct Engine::Impl {
  Problem problem;
  SearchOptions opt;
  ProductDomain eff;
  std::vector<std::size_t> eff_index;
  Product goal;
  AbsEnv env;
  AnalysisCtx ctx;
  VarAllocator vars;
  std::uint32_t next_hole = 0;
  std::vector<Op> ops;
  std::array<std::vector<std::pair<Term, Product>>, kSorts> consts, params, sources;
  SmallTermCache cache;
  std::vector<std::pair<Term, Product>> cache_by_sort[kSorts];
  std::optional<std::size_t> solver_comp;
  std::shared_ptr<const BoundsEnv> empty_benv = std::make_shared<BoundsEnv>();

  Stats stats;
  absl::flat_hash_set<std::uint64_t> seen;
  std::vector<std::deque<Entry>> buckets;
  std::size_t queued = 0;
  // Fill size the current expansion emits; 0 emits every fill.
  std::uint32_t want = 0;
  std::uint32_t max_fill = 1;
  std::array<bool, kNumOps> finite_ok{};
  std::optional<Program> solution;
  std::vector<Term> tested_terms;
  std::vector<std::uint32_t> popped_sizes;

  Impl(Problem p, SearchOptions o)
      : problem(std::move(p)), opt(o), ctx(compute_max_len(problem, o)) {
    const auto& doms = problem.domains;
    if (!problem.goal.empty() && problem.goal.size() != doms.size())
      throw DomainMismatch("goal does not match the domain list");
    for (std::size_t i = 0; i < doms.size(); ++i) {
      bool active = !problem.goal.empty() && !problem.goal[i].is_top();
      if (!active) continue;
      eff_index.push_back(i);
      goal.push_back(problem.goal[i]);
    }
    std::vector<DomainPtr> eff_doms;
    for (auto i : eff_index) eff_doms.push_back(doms.domains()[i]);
    eff = ProductDomain(std::move(eff_doms));

    bool has_length = false;
    for (std::size_t k = 0; k < eff.size(); ++k)
      if (dynamic_cast<const LengthDomain*>(&eff.at(k))) {
        has_length = true;
        solver_comp = k;
      }
    if (has_length) LengthDomain::install(ctx);

    for (std::size_t i = 0; i < problem.params.size(); ++i) {
      vars.fresh(Sort::String);  // reserve ids used by parameter symbols
      const auto& prm = problem.params[i];
      Product full;
      if (i < problem.param_abs.size() && !problem.param_abs[i].empty()) {
        full = problem.param_abs[i];
      } else {
        for (std::size_t d = 0; d < doms.size(); ++d)
          full.push_back(dynamic_cast<const LengthDomain*>(&doms.at(d))
                             ? LengthDomain::make_expr(LinExpr::var(param_symbol(i, prm.sort)))
                             : Abstraction::top());
      }
      Product projected;
      for (auto d : eff_index) projected.push_back(full.at(d));
      env.bind(prm.name, std::move(projected));
      if (has_length && !problem.examples.empty()) {
        std::int64_t lo = INT64_MAX, hi = INT64_MIN;
        for (const auto& ex : problem.examples) {
          const auto& v = ex.inputs.at(i);
          std::int64_t n = v.is_str() ? static_cast<std::int64_t>(v.as_str().size())
                                      : v.is_int() ? v.as_int() : 0;
          lo = std::min(lo, n);
          hi = std::max(hi, n);
        }
        ctx.solver.set_bounds(param_symbol(i, prm.sort), lo, hi);
      }
    }

    select_ops();
    for (const auto& c : problem.constants) {
      auto t = make_const(c);
      consts[sidx(c.sort())].emplace_back(t, abs_of(t));
    }
    for (std::size_t i = 0; i < problem.params.size(); ++i) {
      auto t = make_var(problem.params[i].name, static_cast<std::uint32_t>(i), problem.params[i].sort);
      params[sidx(t->sort)].emplace_back(t, abs_of(t));
    }
    build_cache();
    for (std::size_t s = 0; s < kSorts; ++s) {
      for (auto& x : consts[s]) sources[s].push_back(x);
      for (auto& x : params[s]) sources[s].push_back(x);
      for (auto& x : cache.small(static_cast<Sort>(s), 3)) sources[s].push_back(x);
      cache_by_sort[s] = cache.small(static_cast<Sort>(s), UINT32_MAX);
    }
    buckets.resize(opt.max_size + 2);
    std::uint32_t max_arity = 0;
    for (auto op : ops) {
      max_arity = std::max<std::uint32_t>(max_arity, signature(op).arity);
      finite_ok[static_cast<std::size_t>(op)] = finite_applicable(op);
    }
    max_fill = 1 + max_arity;
    if (solver_comp && max_arity > 0) max_fill = std::max(max_fill, 2 + (max_arity - 1) * 3);
  }

  bool sized(std::uint32_t fill_size) const { return want == 0 || fill_size == want; }

  bool finite_applicable(Op op) const {
    if (eff.empty()) return false;
    const auto& sig = signature(op);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < sig.arity; ++i)
      for (std::size_t k = 0; k < eff.size(); ++k) {
        auto elems = eff.at(k).finite_enum(Abstraction::top(), sig.params[i]);
        if (!elems || elems->empty()) return false;
        combos *= elems->size();
      }
    return combos <= 256;
  }

  static std::int64_t compute_max_len(const Problem& p, const SearchOptions& o) {
    if (o.max_len >= 0) return o.max_len;
    std::size_t longest = 0;
    for (const auto& ex : p.examples) {
      for (const auto& v : ex.inputs)
        if (v.is_str()) longest = std::max(longest, v.as_str().size());
      if (ex.output.is_str()) longest = std::max(longest, ex.output.as_str().size());
    }
    return static_cast<std::int64_t>(longest) + 8;
  }

  // Keeps operators whose result sort is needed and whose argument sorts can
  // be produced.
  void select_ops() {
    std::array<bool, kSorts> productive{};
    for (const auto& c : problem.constants) productive[sidx(c.sort())] = true;
    for (const auto& p : problem.params) productive[sidx(p.sort)] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto op : problem.ops) {
        const auto& sig = signature(op);
        bool ok = std::all_of(sig.param_sorts().begin(), sig.param_sorts().end(),
                              [&](Sort s) { return productive[sidx(s)]; });
        if (ok && !productive[sidx(sig.result)]) productive[sidx(sig.result)] = changed = true;
      }
    }
    std::array<bool, kSorts> reachable{};
    reachable[sidx(problem.ret)] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto op : problem.ops) {
        const auto& sig = signature(op);
        if (!reachable[sidx(sig.result)]) continue;
        for (auto s : sig.param_sorts())
          if (!reachable[sidx(s)]) reachable[sidx(s)] = changed = true;
      }
    }
    for (auto op : problem.ops) {
      const auto& sig = signature(op);
      if (!reachable[sidx(sig.result)]) continue;
      if (!std::all_of(sig.param_sorts().begin(), sig.param_sorts().end(),
                       [&](Sort s) { return productive[sidx(s)]; }))
        continue;
      if (std::find(ops.begin(), ops.end(), op) == ops.end()) ops.push_back(op);
    }
  }

  Product abs_of(const Term& t) {
    if (eff.empty()) return {};
    return abs_eval(env, BoundsEnv(), t, eff, ctx).value;
  }

  void build_cache() {
    for (auto op : ops) {
      const auto& sig = signature(op);
      std::vector<const std::vector<std::pair<Term, Product>>*> pools;
      std::vector<std::vector<Term>> leaves(sig.arity);
      std::size_t combos = 1;
      for (std::size_t i = 0; i < sig.arity; ++i) {
        auto s = sidx(sig.params[i]);
        for (auto& x : consts[s]) leaves[i].push_back(x.first);
        for (auto& x : params[s]) leaves[i].push_back(x.first);
        combos *= leaves[i].size();
      }
      for (std::size_t c = 0; c < combos; ++c) {
        std::array<Term, kMaxArity> args;
        std::size_t rem = c;
        // Last argument varies fastest, matching left-to-right enumeration.
        for (std::size_t i = sig.arity; i-- > 0;) {
          args[i] = leaves[i][rem % leaves[i].size()];
          rem /= leaves[i].size();
        }
        auto t = make_app(op, std::span<const Term>(args.data(), sig.arity));
        cache.put(t, abs_of(t));
      }
    }
  }

  Term fresh_hole(Sort s, BoundsEnv& benv) {
    LabelPtr label;
    if (!eff.empty()) {
      Product p;
      for (std::size_t k = 0; k < eff.size(); ++k) {
        auto v = vars.fresh(s);
        benv = benv.with_fresh(v);
        p.push_back(Abstraction::var(v));
      }
      label = std::make_shared<const Product>(std::move(p));
    }
    return make_hole(next_hole++, s, std::move(label));
  }

  bool fits(const Product& abs, const TermNode* hole, const BoundsEnv& benv) {
    if (eff.empty() || !hole->label) return true;
    return product_may_meet(benv, abs, *hole->label, eff, ctx).holds;
  }

  // Emits every fill of the leftmost hole; `emit` returns false to stop.
  template <class Emit>
  void expand(const Term& t, const BoundsEnv& benv, Emit&& emit) {
    const TermNode* hole = leftmost_hole(t);
    if (!hole) return;
    auto s = sidx(hole->sort);
    auto [par, pos] = leftmost_hole_parent(t);
    bool leaf_forbidden = false;
    if (opt.use_cache && par && (par->flags & kCacheGuard) && pos + 1 == par->arity) {
      leaf_forbidden = true;
      for (std::size_t i = 0; i < pos; ++i)
        if (!par->args[i]->is_leaf()) leaf_forbidden = false;
    }
    if (!leaf_forbidden && sized(1)) {
      for (const auto& [c, abs] : consts[s])  // S-Val
        if (fits(abs, hole, benv) && !emit(c, benv, false)) return;
      for (const auto& [p, abs] : params[s])  // S-Var
        if (fits(abs, hole, benv) && !emit(p, benv, false)) return;
    }
    if (opt.use_cache)
      for (const auto& [c, abs] : cache_by_sort[s])
        if (sized(c->size) && fits(abs, hole, benv) && !emit(c, benv, true)) return;
    for (auto op : ops) {
      const auto& sig = signature(op);
      if (sig.result != hole->sort) continue;
      if (finite_ok[static_cast<std::size_t>(op)] && hole->label) {
        if (sized(1 + sig.arity) && !expand_finite(op, hole, benv, emit)) return;
        continue;
      }
      if (solver_comp && hole->label && (*hole->label)[*solver_comp].is_elem()) {
        if (!expand_solve(op, hole, benv, emit)) return;
        continue;
      }
      if (!sized(1 + sig.arity)) continue;
      BoundsEnv b2 = benv;  // S-Enumer
      std::array<Term, kMaxArity> args;
      for (std::size_t i = 0; i < sig.arity; ++i) args[i] = fresh_hole(sig.params[i], b2);
      auto app = make_app(op, std::span<const Term>(args.data(), sig.arity),
                          opt.use_cache ? kCacheGuard : 0);
      if (!emit(app, b2, false)) return;
    }
  }

  // S-Finite: every active domain enumerates its elements for each argument.
  // Both rule expansions return false once `emit` asks to stop.
  template <class Emit>
  bool expand_finite(Op op, const TermNode* hole, const BoundsEnv& benv, Emit& emit) {
    const auto& sig = signature(op);
    std::vector<std::vector<std::vector<Abstraction>>> lists(sig.arity);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < sig.arity; ++i)
      for (std::size_t k = 0; k < eff.size(); ++k) {
        auto elems = eff.at(k).finite_enum(Abstraction::top(), sig.params[i]);
        combos *= elems->size();
        lists[i].push_back(std::move(*elems));
      }
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rem = c;
      std::vector<Product> labels(sig.arity, Product(eff.size()));
      for (std::size_t i = sig.arity; i-- > 0;)
        for (std::size_t k = eff.size(); k-- > 0;) {
          const auto& l = lists[i][k];
          labels[i][k] = l[rem % l.size()];
          rem /= l.size();
        }
      Product result;
      BoundsEnv b = benv;
      for (std::size_t k = 0; k < eff.size(); ++k) {
        std::array<Abstraction, kMaxArity> col;
        for (std::size_t i = 0; i < sig.arity; ++i) col[i] = labels[i][k];
        auto r = eff.at(k).transfer(op, std::span<const Abstraction>(col.data(), sig.arity), b, ctx);
        b = r.benv;
        result.push_back(r.value);
      }
      if (!product_may_meet(b, result, *hole->label, eff, ctx).holds) continue;
      std::array<Term, kMaxArity> args;
      for (std::size_t i = 0; i < sig.arity; ++i)
        args[i] = make_hole(next_hole++, sig.params[i],
                            std::make_shared<const Product>(std::move(labels[i])));
      auto app = make_app(op, std::span<const Term>(args.data(), sig.arity));
      if (!emit(app, benv, false)) return false;
    }
    return true;
  }

  // Label for the open argument `w` such that the application may produce a
  // length in `target`; nullopt when the combination is infeasible.
  std::optional<Abstraction> solve_label(const Abstraction& produced, const Abstraction& target,
                                         VarId w, const BoundsEnv& benv) {
    auto rs = LengthDomain::alternatives(produced, benv);
    auto es = LengthDomain::alternatives(target, benv);
    if (!rs || !es) return Abstraction::var(w);
    std::vector<LenAlt> out;
    const auto bound_lo = var_sort(w) == Sort::Int ? -LengthDomain::int_bound(ctx) : 0;
    const auto bound_hi =
        var_sort(w) == Sort::Int ? LengthDomain::int_bound(ctx) : ctx.solver.max_len();
    for (const auto& r : *rs)
      for (const auto& e : *es) {
        std::vector<Constraint> cs = r.guards;
        cs.insert(cs.end(), e.guards.begin(), e.guards.end());
        auto eq = Constraint::eq(r.expr, e.expr);
        cs.push_back(eq);
        if (ctx.solver.check_sat_with(cs) == SatResult::Unsat) continue;
        if (eq.expr.coeff(w) == 0) return Abstraction::var(w);
        if (auto iso = isolate(eq, w)) {
          std::vector<Constraint> g;
          for (std::size_t i = 0; i + 1 < cs.size(); ++i)
            g.push_back({cs[i].expr.substitute(w, *iso), cs[i].rel});
          g.push_back(Constraint::ge(*iso, LinExpr(bound_lo)));
          g.push_back(Constraint::le(*iso, LinExpr(bound_hi)));
          out.push_back({std::move(g), *iso});
          continue;
        }
        auto sf = ctx.solver.solve_for_with(cs, w);
        if (sf.partial || sf.values.size() > 8) return Abstraction::var(w);
        for (auto v : sf.values) out.push_back({{}, LinExpr(v)});
      }
    if (out.empty()) return std::nullopt;
    auto a = LengthDomain::make_alts(std::move(out));
    return a.is_top() ? Abstraction::var(w) : a;
  }

  // S-Solve: all but one argument drawn from small terms, the open one
  // labelled by solving the length equation against the hole's label.
  template <class Emit>
  bool expand_solve(Op op, const TermNode* hole, const BoundsEnv& benv, Emit& emit) {
    const auto k = *solver_comp;
    const auto& target = (*hole->label)[k];
    const auto& dom = eff.at(k);
    const auto& sig = signature(op);
    for (std::size_t open = 0; open < sig.arity; ++open) {
      std::vector<const std::vector<std::pair<Term, Product>>*> pools;
      std::size_t combos = 1;
      for (std::size_t i = 0; i < sig.arity; ++i) {
        if (i == open) continue;
        pools.push_back(&sources[sidx(sig.params[i])]);
        combos *= pools.back()->size();
      }
      for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rem = c;
        std::array<const std::pair<Term, Product>*, kMaxArity> picked{};
        for (std::size_t p = pools.size(); p-- > 0;) {
          picked[p] = &(*pools[p])[rem % pools[p]->size()];
          rem /= pools[p]->size();
        }
        std::uint32_t fill_size = 2;
        for (std::size_t p = 0; p < pools.size(); ++p) fill_size += picked[p]->first->size;
        if (!sized(fill_size)) continue;
        BoundsEnv b2 = benv;
        const Sort open_sort = sig.params[open];
        VarId w = vars.fresh(open_sort);
        b2 = b2.with_fresh(w);
        std::array<Abstraction, kMaxArity> col;
        for (std::size_t i = 0, p = 0; i < sig.arity; ++i)
          col[i] = i == open ? Abstraction::var(w) : picked[p++]->second[k];
        auto produced = dom.transfer(op, std::span<const Abstraction>(col.data(), sig.arity), b2, ctx);
        auto label_k = solve_label(produced.value, target, w, produced.benv);
        if (!label_k) continue;
        Product label;
        for (std::size_t j = 0; j < eff.size(); ++j) {
          if (j == k) {
            label.push_back(*label_k);
            continue;
          }
          auto v = vars.fresh(open_sort);
          b2 = b2.with_fresh(v);
          label.push_back(Abstraction::var(v));
        }
        std::array<Term, kMaxArity> args;
        for (std::size_t i = 0, p = 0; i < sig.arity; ++i)
          args[i] = i == open ? make_hole(next_hole++, open_sort,
                                          std::make_shared<const Product>(std::move(label)))
                              : picked[p++]->first;
        auto app = make_app(op, std::span<const Term>(args.data(), sig.arity));
        if (!emit(app, b2, false)) return false;
      }
    }
    return true;
  }

  std::vector<Term> templates(BoundsEnv& benv) {
    if (!opt.use_templates) return {};
    return infer_templates(problem, opt.prefix_templates,
                           [&](Sort s) { return fresh_hole(s, benv); });
  }

  Term root_hole() {
    LabelPtr label;
    if (!eff.empty()) label = std::make_shared<const Product>(goal);
    return make_hole(next_hole++, problem.ret, std::move(label));
  }

  // Size filter, dedup, goal check, then test or enqueue. Returns false once
  // a solution is found or the frontier budget is exceeded.
  bool process(const Term& parent, const Term& fill, const BoundsEnv& benv, bool from_cache) {
    std::uint32_t sz = parent ? parent->size - 1 + fill->size : fill->size;
    if (sz > opt.max_size) return true;
    Term child = parent ? fill_leftmost(parent, fill) : fill;
    std::uint64_t h = eff.empty() ? child->hash : canonical_hash(child);
    if (!seen.insert(h).second) return true;
    ++stats.generated;
    if (from_cache) ++stats.cache_hits;
    std::shared_ptr<const BoundsEnv> cb = empty_benv;
    if (!eff.empty()) {
      auto r = satisfies_goal(env, benv, child, goal, eff, ctx);
      if (!r.holds) {
        ++stats.eliminated;
        return true;
      }
      if (child->hole_count > 0) cb = std::make_shared<const BoundsEnv>(std::move(r.benv));
    }
    if (child->hole_count == 0) return test(child);
    buckets[sz].push_back(Entry{parent, fill, std::move(cb), sz});
    return ++queued <= opt.max_frontier;
  }

  bool test(const Term& t) {
    ++stats.tested;
    if (opt.record_tested) tested_terms.push_back(t);
    if (test_term(t, problem.examples)) {
      solution = Program{problem.name, problem.params, problem.ret, t};
      return false;
    }
    return true;
  }

  SynthResult run() {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(opt.timeout_s));
    SynthResult res;
    auto finish = [&](Outcome o) {
      res.outcome = o;
      res.program = solution;
      stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      res.stats = stats;
      res.tested_terms = std::move(tested_terms);
      res.popped_sizes = std::move(popped_sizes);
      return res;
    };

    BoundsEnv init;
    bool go = process(nullptr, root_hole(), init, false);
    for (const auto& t : templates(init)) {
      if (!go) break;
      go = process(nullptr, t, init, false);
    }
    if (solution) return finish(Outcome::Solved);
    if (!go) return finish(Outcome::Exhausted);

    std::size_t cur = 0;
    while (true) {
      while (cur < buckets.size() && buckets[cur].empty()) ++cur;
      if (cur >= buckets.size()) return finish(Outcome::Exhausted);
      Entry e = std::move(buckets[cur].front());
      buckets[cur].pop_front();
      --queued;
      ++stats.popped;
      if (opt.record_tested) popped_sizes.push_back(static_cast<std::uint32_t>(cur));
      if ((stats.popped & 127) == 0 && Clock::now() > deadline) return finish(Outcome::Timeout);
      Term t = materialize(e);
      // Children grow by (fill size - 1); emit only those landing in this
      // bucket and revisit the parent for the next size.
      want = e.target - t->size + 1;
      bool keep_going = true;
      expand(t, *e.benv, [&](const Term& fill, const BoundsEnv& b, bool from_cache) {
        keep_going = process(t, fill, b, from_cache);
        return keep_going;
      });
      want = 0;
      const std::uint32_t next = e.target + 1;
      if (keep_going && !solution && next <= opt.max_size && next + 1 <= t->size + max_fill) {
        buckets[next].push_back(Entry{nullptr, t, e.benv, next});
        keep_going = ++queued <= opt.max_frontier;
      }
      if (solution) return finish(Outcome::Solved);
      if (!keep_going) return finish(Outcome::Exhausted);
    }
  }
};

Engine::Engine(Problem problem, SearchOptions options)
    : impl_(std::make_unique<Impl>(std::move(problem), options)) {}
Engine::~Engine() = default;

SynthResult Engine::run() { return impl_->run(); }

std::vector<Candidate> Engine::expand(const Candidate& c) {
  std::vector<Candidate> out;
  std::uint64_t seq = c.seq;
  impl_->expand(c.term, c.benv, [&](const Term& fill, const BoundsEnv& b, bool) {
    auto t = fill_leftmost(c.term, fill);
    out.push_back(Candidate{t, t->size, ++seq, b});
    return true;
  });
  return out;
}

std::vector<Candidate> Engine::initial_candidates() {
  std::vector<Candidate> out;
  BoundsEnv benv;
  auto root = impl_->root_hole();
  out.push_back({root, root->size, 0, benv});
  for (const auto& t : impl_->templates(benv)) {
    if (!impl_->eff.empty() &&
        !satisfies_goal(impl_->env, benv, t, impl_->goal, impl_->eff, impl_->ctx).holds)
      continue;
    out.push_back({t, t->size, out.size(), benv});
  }
  for (auto& c : out) c.benv = benv;
  return out;
}

const Problem& Engine::problem() const { return impl_->problem; }
const ProductDomain& Engine::effective_domains() const { return impl_->eff; }
const Product& Engine::goal() const { return impl_->goal; }
const AbsEnv& Engine::abs_env() const { return impl_->env; }
AnalysisCtx& Engine::analysis() { return impl_->ctx; }
const SmallTermCache& Engine::cache() const { return impl_->cache; }

SynthResult synthesize(const Problem& problem, const SearchOptions& options) {
  Engine e(problem, options);
  return e.run();
}

}  // namespace holesynth
