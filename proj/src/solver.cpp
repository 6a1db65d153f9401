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

#include "holesynth/solver.hpp"

#include <algorithm>
#include <set>

namespace holesynth {

LinExpr LinExpr::var(SymId v, std::int64_t coeff) {
  LinExpr e;
  if (coeff != 0) e.coeffs_[v] = coeff;
  return e;
}

std::int64_t LinExpr::coeff(SymId v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? 0 : it->second;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant_ += o.constant_;
  for (auto [v, c] : o.coeffs_) {
    auto& slot = coeffs_[v];
    slot += c;
    if (slot == 0) coeffs_.erase(v);
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  constant_ -= o.constant_;
  for (auto [v, c] : o.coeffs_) {
    auto& slot = coeffs_[v];
    slot -= c;
    if (slot == 0) coeffs_.erase(v);
  }
  return *this;
}

LinExpr& LinExpr::operator*=(std::int64_t k) {
  if (k == 0) {
    coeffs_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= k;
  for (auto& [v, c] : coeffs_) c *= k;
  return *this;
}

LinExpr LinExpr::substitute(SymId v, const LinExpr& e) const {
  auto k = coeff(v);
  if (k == 0) return *this;
  LinExpr out = *this;
  out.coeffs_.erase(v);
  out += e * k;
  return out;
}

std::int64_t LinExpr::evaluate(const std::map<SymId, std::int64_t>& assignment) const {
  std::int64_t total = constant_;
  for (auto [v, c] : coeffs_) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw SolverError("unassigned symbol s" + std::to_string(v));
    total += c * it->second;
  }
  return total;
}

std::string LinExpr::to_string() const {
  std::string out;
  for (auto [v, c] : coeffs_) {
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += std::to_string(c) + "*";
    } else {
      out += c < 0 ? " - " : " + ";
      auto m = c < 0 ? -c : c;
      if (m != 1) out += std::to_string(m) + "*";
    }
    out += "s" + std::to_string(v);
  }
  if (out.empty()) return std::to_string(constant_);
  if (constant_ > 0) out += " + " + std::to_string(constant_);
  if (constant_ < 0) out += " - " + std::to_string(-constant_);
  return out;
}

bool Constraint::holds(const std::map<SymId, std::int64_t>& assignment) const {
  auto v = expr.evaluate(assignment);
  return rel == Rel::Eq ? v == 0 : v <= 0;
}

std::string Constraint::to_string() const {
  return expr.to_string() + (rel == Rel::Eq ? " = 0" : " <= 0");
}

std::optional<LinExpr> isolate(const Constraint& c, SymId v) {
  if (c.rel != Rel::Eq) return std::nullopt;
  auto k = c.expr.coeff(v);
  if (k != 1 && k != -1) return std::nullopt;
  // k*v + rest = 0  =>  v = -rest / k
  LinExpr rest = c.expr - LinExpr::var(v, k);
  return k == 1 ? rest * -1 : rest;
}

std::string_view to_string(SatResult r) {
  switch (r) {
    case SatResult::Sat: return "sat";
    case SatResult::Unsat: return "unsat";
    case SatResult::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

struct Row {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  std::int64_t constant;
  Rel rel;
};

// One search problem: variables are dense indices into lo/hi.
class Search {
 public:
  Search(const SolverCtx& ctx, std::span<const Constraint> a, std::span<const Constraint> b,
         std::optional<SymId> extra_var)
      : limit_(ctx.node_limit()) {
    std::set<SymId> vars;
    for (auto span : {a, b})
      for (const auto& c : span)
        for (auto [v, k] : c.expr.coeffs()) vars.insert(v);
    if (extra_var) vars.insert(*extra_var);
    syms_.assign(vars.begin(), vars.end());
    for (std::size_t i = 0; i < syms_.size(); ++i) {
      index_[syms_[i]] = i;
      auto [lo, hi] = ctx.bounds(syms_[i]);
      lo_.push_back(lo);
      hi_.push_back(hi);
    }
    for (auto span : {a, b})
      for (const auto& c : span) {
        Row r{{}, c.expr.constant_term(), c.rel};
        for (auto [v, k] : c.expr.coeffs()) r.terms.emplace_back(index_.at(v), k);
        rows_.push_back(std::move(r));
      }
  }

  std::size_t index_of(SymId v) const { return index_.at(v); }
  std::pair<std::int64_t, std::int64_t> root_range(std::size_t i) {
    auto lo = lo_, hi = hi_;
    if (!propagate(lo, hi)) return {1, 0};
    return {lo[i], hi[i]};
  }

  SatResult run(std::optional<std::pair<std::size_t, std::int64_t>> fix,
                SolverCtx::Assignment* model) {
    nodes_ = 0;
    auto lo = lo_, hi = hi_;
    if (fix) {
      auto [i, v] = *fix;
      if (v < lo[i] || v > hi[i]) return SatResult::Unsat;
      lo[i] = hi[i] = v;
    }
    return dfs(lo, hi, model);
  }

 private:
  bool propagate(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) const {
    for (int round = 0; round < 256; ++round) {
      bool changed = false;
      for (const auto& r : rows_) {
        std::int64_t mn = r.constant, mx = r.constant;
        for (auto [i, k] : r.terms) {
          mn += k > 0 ? k * lo[i] : k * hi[i];
          mx += k > 0 ? k * hi[i] : k * lo[i];
        }
        if (mn > 0) return false;
        if (r.rel == Rel::Eq && mx < 0) return false;
        for (auto [i, k] : r.terms) {
          std::int64_t own_min = k > 0 ? k * lo[i] : k * hi[i];
          std::int64_t own_max = k > 0 ? k * hi[i] : k * lo[i];
          std::int64_t rest_min = mn - own_min;
          std::int64_t rest_max = mx - own_max;
          // k*x <= -rest_min
          if (k > 0) {
            auto ub = floor_div(-rest_min, k);
            if (ub < hi[i]) hi[i] = ub, changed = true;
          } else {
            auto lb = ceil_div(-rest_min, k);
            if (lb > lo[i]) lo[i] = lb, changed = true;
          }
          if (r.rel == Rel::Eq) {
            // k*x >= -rest_max
            if (k > 0) {
              auto lb = ceil_div(-rest_max, k);
              if (lb > lo[i]) lo[i] = lb, changed = true;
            } else {
              auto ub = floor_div(-rest_max, k);
              if (ub < hi[i]) hi[i] = ub, changed = true;
            }
          }
          if (lo[i] > hi[i]) return false;
        }
      }
      if (!changed) return true;
    }
    return true;
  }

  SatResult dfs(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi,
                SolverCtx::Assignment* model) {
    if (!propagate(lo, hi)) return SatResult::Unsat;
    std::size_t pick = syms_.size();
    for (std::size_t i = 0; i < syms_.size(); ++i)
      if (lo[i] < hi[i]) {
        pick = i;
        break;
      }
    if (pick == syms_.size()) {
      for (const auto& r : rows_) {
        std::int64_t s = r.constant;
        for (auto [i, k] : r.terms) s += k * lo[i];
        if (r.rel == Rel::Eq ? s != 0 : s > 0) return SatResult::Unsat;
      }
      if (model) {
        model->clear();
        for (std::size_t i = 0; i < syms_.size(); ++i) (*model)[syms_[i]] = lo[i];
      }
      return SatResult::Sat;
    }
    bool unknown = false;
    for (std::int64_t v = lo[pick]; v <= hi[pick]; ++v) {
      if (++nodes_ > limit_) return SatResult::Unknown;
      auto lo2 = lo, hi2 = hi;
      lo2[pick] = hi2[pick] = v;
      auto r = dfs(lo2, hi2, model);
      if (r == SatResult::Sat) return r;
      if (r == SatResult::Unknown) {
        if (nodes_ > limit_) return r;
        unknown = true;
      }
    }
    return unknown ? SatResult::Unknown : SatResult::Unsat;
  }

  std::size_t limit_;
  std::size_t nodes_ = 0;
  std::vector<SymId> syms_;
  std::map<SymId, std::size_t> index_;
  std::vector<std::int64_t> lo_, hi_;
  std::vector<Row> rows_;
};

}  // namespace

SolverCtx::SolverCtx(std::int64_t max_len, std::size_t node_limit)
    : max_len_(max_len), node_limit_(node_limit) {
  if (max_len < 0) throw SolverError("max_len must be non-negative");
}

void SolverCtx::set_bounds(SymId v, std::int64_t lo, std::int64_t hi) { bounds_[v] = {lo, hi}; }

std::pair<std::int64_t, std::int64_t> SolverCtx::bounds(SymId v) const {
  auto it = bounds_.find(v);
  if (it != bounds_.end()) return it->second;
  if (hook_)
    if (auto b = hook_(v)) return *b;
  return {0, max_len_};
}

void SolverCtx::pop() {
  if (frames_.empty()) throw SolverError("pop without matching push");
  constraints_.resize(frames_.back());
  frames_.pop_back();
}

SatResult SolverCtx::check_sat(Assignment* model) const { return check_sat_with({}, model); }

SatResult SolverCtx::check_sat_with(std::span<const Constraint> extra, Assignment* model) const {
  Search s(*this, constraints_, extra, std::nullopt);
  return s.run(std::nullopt, model);
}

SolveForResult SolverCtx::solve_for(SymId target) const { return solve_for_with({}, target); }

SolveForResult SolverCtx::solve_for_with(std::span<const Constraint> extra, SymId target) const {
  Search s(*this, constraints_, extra, target);
  auto idx = s.index_of(target);
  auto [lo, hi] = s.root_range(idx);
  SolveForResult out;
  for (std::int64_t v = lo; v <= hi; ++v) {
    auto r = s.run(std::make_pair(idx, v), nullptr);
    if (r == SatResult::Sat) out.values.push_back(v);
    if (r == SatResult::Unknown) out.partial = true;
  }
  return out;
}

}  // namespace holesynth
