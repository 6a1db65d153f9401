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

// Bounded linear integer arithmetic over small, non-negative-ish domains.
// Decides conjunctions by interval propagation followed by exhaustive search.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holesynth/value.hpp"

namespace holesynth {

using SymId = std::uint64_t;

/// sum(coeff_i * x_i) + constant, with no zero coefficients stored.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(std::int64_t c) : constant_(c) {}
  static LinExpr constant(std::int64_t c) { return LinExpr(c); }
  static LinExpr var(SymId v, std::int64_t coeff = 1);

  const std::map<SymId, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t constant_term() const { return constant_; }
  std::int64_t coeff(SymId v) const;
  bool is_constant() const { return coeffs_.empty(); }

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(std::int64_t k);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, std::int64_t k) { return a *= k; }
  friend bool operator==(const LinExpr&, const LinExpr&) = default;

  /// Substitutes `v := e`.
  LinExpr substitute(SymId v, const LinExpr& e) const;
  std::int64_t evaluate(const std::map<SymId, std::int64_t>& assignment) const;
  std::string to_string() const;

 private:
  std::map<SymId, std::int64_t> coeffs_;
  std::int64_t constant_ = 0;
};

enum class Rel : std::uint8_t { Eq, Le };

/// Normalized form `expr rel 0`.
struct Constraint {
  LinExpr expr;
  Rel rel = Rel::Eq;

  static Constraint eq(const LinExpr& lhs, const LinExpr& rhs) { return {lhs - rhs, Rel::Eq}; }
  static Constraint le(const LinExpr& lhs, const LinExpr& rhs) { return {lhs - rhs, Rel::Le}; }
  static Constraint ge(const LinExpr& lhs, const LinExpr& rhs) { return {rhs - lhs, Rel::Le}; }
  static Constraint lt(const LinExpr& lhs, const LinExpr& rhs) {
    return {lhs - rhs + LinExpr(1), Rel::Le};
  }

  bool holds(const std::map<SymId, std::int64_t>& assignment) const;
  std::string to_string() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// If `c` is an equality where `v` has coefficient +1 or -1, returns the
/// expression `e` (free of `v`) such that `c` is equivalent to `v = e`.
std::optional<LinExpr> isolate(const Constraint& c, SymId v);

enum class SatResult : std::uint8_t { Sat, Unsat, Unknown };
std::string_view to_string(SatResult r);

struct SolveForResult {
  std::vector<std::int64_t> values;  // ascending
  bool partial = false;              // node budget exhausted somewhere
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// Assertion stack plus per-symbol bounds. Symbols without explicit bounds
/// take the range given by the default-bounds hook, or [0, max_len].
class SolverCtx {
 public:
  using Assignment = std::map<SymId, std::int64_t>;
  using BoundsHook = std::function<std::optional<std::pair<std::int64_t, std::int64_t>>(SymId)>;

  explicit SolverCtx(std::int64_t max_len = 16, std::size_t node_limit = 100000);

  std::int64_t max_len() const { return max_len_; }
  std::size_t node_limit() const { return node_limit_; }
  void set_node_limit(std::size_t n) { node_limit_ = n; }

  void set_bounds(SymId v, std::int64_t lo, std::int64_t hi);
  std::pair<std::int64_t, std::int64_t> bounds(SymId v) const;
  void set_default_bounds(BoundsHook hook) { hook_ = std::move(hook); }

  void assert_constraint(const Constraint& c) { constraints_.push_back(c); }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  void push() { frames_.push_back(constraints_.size()); }
  /// Throws SolverError when there is no matching push.
  void pop();
  std::size_t depth() const { return frames_.size(); }

  SatResult check_sat(Assignment* model = nullptr) const;
  /// Checks the asserted constraints together with `extra`.
  SatResult check_sat_with(std::span<const Constraint> extra, Assignment* model = nullptr) const;
  SolveForResult solve_for(SymId target) const;
  SolveForResult solve_for_with(std::span<const Constraint> extra, SymId target) const;

 private:
  std::int64_t max_len_;
  std::size_t node_limit_;
  std::map<SymId, std::pair<std::int64_t, std::int64_t>> bounds_;
  BoundsHook hook_;
  std::vector<Constraint> constraints_;
  std::vector<std::size_t> frames_;
};

}  // namespace holesynth
