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

// Abstract-domain framework: lattice elements with built-in top, bottom and
// abstract variables, bounds environments, narrowing comparisons, products.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holesynth/ops.hpp"
#include "holesynth/solver.hpp"
#include "holesynth/value.hpp"

namespace holesynth {

using DomainId = std::uint16_t;
/// Abstract variable id. The low two bits carry the sort of the program
/// position the variable stands for.
using VarId = std::uint64_t;

inline Sort var_sort(VarId v) { return static_cast<Sort>(v & 3u); }

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class MissingBounds : public Error {
 public:
  using Error::Error;
};

/// Domain-specific payload of an Elem. Immutable once built.
class ElemPayload {
 public:
  virtual ~ElemPayload() = default;
  virtual bool equals(const ElemPayload& other) const = 0;
  virtual std::uint64_t hash() const = 0;
  virtual std::string to_string() const = 0;
};

class Abstraction {
 public:
  enum class Kind : std::uint8_t { Top, Bot, Var, Elem };

  Abstraction() = default;  // Top
  static Abstraction top() { return Abstraction(); }
  static Abstraction bot() {
    Abstraction a;
    a.kind_ = Kind::Bot;
    return a;
  }
  static Abstraction var(VarId v) {
    Abstraction a;
    a.kind_ = Kind::Var;
    a.var_ = v;
    return a;
  }
  static Abstraction elem(DomainId d, std::shared_ptr<const ElemPayload> p) {
    Abstraction a;
    a.kind_ = Kind::Elem;
    a.domain_ = d;
    a.payload_ = std::move(p);
    return a;
  }

  Kind kind() const { return kind_; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_bot() const { return kind_ == Kind::Bot; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_elem() const { return kind_ == Kind::Elem; }

  VarId var_id() const { return var_; }
  DomainId domain() const { return domain_; }
  const ElemPayload& payload() const { return *payload_; }

  /// Payload downcast; the caller guarantees the dynamic type.
  template <class T>
  const T& as() const {
    return static_cast<const T&>(*payload_);
  }
  template <class T>
  const T* try_as() const {
    return is_elem() ? dynamic_cast<const T*>(payload_.get()) : nullptr;
  }

  std::uint64_t hash() const;
  std::string to_string() const;
  friend bool operator==(const Abstraction& a, const Abstraction& b);

 private:
  Kind kind_ = Kind::Top;
  DomainId domain_ = 0;
  VarId var_ = 0;
  std::shared_ptr<const ElemPayload> payload_;
};

enum class AbsClass : std::uint8_t { Top, Bot, Var, Val };
AbsClass classify(const Abstraction& a);

struct Bounds {
  Abstraction lo = Abstraction::bot();
  Abstraction hi = Abstraction::top();
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Persistent map VarId -> Bounds; updates return a new environment and
/// share structure with the old one until written.
class BoundsEnv {
 public:
  BoundsEnv() : map_(std::make_shared<const Map>()) {}

  bool contains(VarId v) const { return map_->count(v) != 0; }
  /// Throws MissingBounds for unknown variables.
  const Bounds& at(VarId v) const;
  BoundsEnv with(VarId v, Bounds b) const;
  /// Adds (Bot, Top) bounds for a fresh variable.
  BoundsEnv with_fresh(VarId v) const { return with(v, Bounds{}); }
  std::size_t size() const { return map_->size(); }
  const std::map<VarId, Bounds>& entries() const { return *map_; }
  friend bool operator==(const BoundsEnv& a, const BoundsEnv& b) {
    return a.map_ == b.map_ || *a.map_ == *b.map_;
  }

 private:
  using Map = std::map<VarId, Bounds>;
  explicit BoundsEnv(std::shared_ptr<const Map> m) : map_(std::move(m)) {}
  std::shared_ptr<const Map> map_;
};

/// Monotone fresh-variable counter scoped to one synthesis run.
class VarAllocator {
 public:
  VarId fresh(Sort s) { return (next_++ << 2) | static_cast<VarId>(s); }
  std::uint64_t issued() const { return next_ - 1; }

 private:
  std::uint64_t next_ = 1;
};

/// Per-run state shared by transfer functions (the solver context backing
/// solver-aided domains).
struct AnalysisCtx {
  explicit AnalysisCtx(std::int64_t max_len = 16) : solver(max_len) {}
  SolverCtx solver;
};

struct TransferResult {
  Abstraction value;
  BoundsEnv benv;
};

/// One abstract domain. Comparisons and transfers only ever see Elem payloads
/// that this domain built; top, bottom and variables are handled generically.
class Domain {
 public:
  Domain(DomainId id, std::string name) : id_(id), name_(std::move(name)) {}
  virtual ~Domain() = default;

  DomainId id() const { return id_; }
  const std::string& name() const { return name_; }

  /// Partial order on two Elems of this domain.
  virtual bool leq(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const = 0;
  virtual std::optional<Abstraction> join(const Abstraction&, const Abstraction&,
                                          AnalysisCtx&) const {
    return std::nullopt;
  }
  virtual std::optional<Abstraction> meet(const Abstraction&, const Abstraction&,
                                          AnalysisCtx&) const {
    return std::nullopt;
  }
  /// Whether two Elems have intersecting concretizations.
  virtual bool overlaps(const Abstraction& e1, const Abstraction& e2, AnalysisCtx& ctx) const {
    return leq(e1, e2, ctx) || leq(e2, e1, ctx);
  }
  virtual Abstraction alpha(const Value& v) const = 0;
  virtual bool member(const Value& v, const Abstraction& elem, AnalysisCtx& ctx) const = 0;
  virtual TransferResult transfer(Op op, std::span<const Abstraction> args, const BoundsEnv& benv,
                                  AnalysisCtx& ctx) const = 0;
  /// Elements below `upper` for a position of sort `s`, if finitely many.
  virtual std::optional<std::vector<Abstraction>> finite_enum(const Abstraction& /*upper*/,
                                                              Sort /*s*/) const {
    return std::nullopt;
  }
  virtual bool solver_backed() const { return false; }
  /// Elements are exact values, so an abstract variable compared with an
  /// element may be narrowed without losing concrete solutions.
  virtual bool pointwise() const { return false; }
  /// Parses the domain's literal syntax used by output annotations.
  virtual Abstraction parse_literal(std::string_view text, AnalysisCtx& ctx) const;

 private:
  DomainId id_;
  std::string name_;
};

using DomainPtr = std::shared_ptr<const Domain>;

struct NarrowResult {
  BoundsEnv benv;
  bool holds = false;
};

/// a1 ⊑ a2 with abstract-variable narrowing.
NarrowResult leq_narrow(const BoundsEnv& benv, const Abstraction& a1, const Abstraction& a2,
                        const Domain& dom, AnalysisCtx& ctx);
NarrowResult leq_narrow(const BoundsEnv& benv, const Abstraction& a1, const Abstraction& a2,
                        const Domain& dom);

/// Lattice order on arbitrary abstractions without variables.
bool abs_leq(const Abstraction& a1, const Abstraction& a2, const Domain& dom, AnalysisCtx& ctx);

/// Goal check used for pruning: false only when no concrete value described
/// by `a` can lie in γ(goal). Variables are narrowed in pointwise domains.
NarrowResult may_meet_narrow(const BoundsEnv& benv, const Abstraction& a, const Abstraction& goal,
                             const Domain& dom, AnalysisCtx& ctx);

/// Ordered list of domains forming a product; components stay independent.
class ProductDomain {
 public:
  ProductDomain() = default;
  explicit ProductDomain(std::vector<DomainPtr> doms) : doms_(std::move(doms)) {}

  std::size_t size() const { return doms_.size(); }
  bool empty() const { return doms_.empty(); }
  const Domain& at(std::size_t i) const { return *doms_[i]; }
  const std::vector<DomainPtr>& domains() const { return doms_; }

 private:
  std::vector<DomainPtr> doms_;
};

using Product = std::vector<Abstraction>;

std::string product_to_string(const Product& p);
std::uint64_t product_hash(const Product& p);

/// Componentwise ⊑ in declared domain order, short-circuiting on failure.
/// Throws DomainMismatch when the tuples do not fit the domain list.
NarrowResult product_leq_narrow(const BoundsEnv& benv, const Product& p1, const Product& p2,
                                const ProductDomain& dom, AnalysisCtx& ctx);
NarrowResult product_may_meet(const BoundsEnv& benv, const Product& p, const Product& goal,
                              const ProductDomain& dom, AnalysisCtx& ctx);

/// Hash mixing shared by terms and payloads.
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  v *= 0x9e3779b97f4a7c15ULL;
  v ^= v >> 32;
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
std::uint64_t hash_string(std::string_view s);

}  // namespace holesynth
