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

#pragma once

#include <string>
#include <vector>

#include "holesynth/concrete_interp.hpp"
#include "holesynth/lattice.hpp"
#include "holesynth/term.hpp"

namespace holesynth {

/// Abstractions of the program parameters, by position and name.
class AbsEnv {
 public:
  AbsEnv() = default;
  void bind(std::string name, Product p);
  /// Throws UnboundVariable.
  const Product& lookup(std::string_view name) const;
  const Product& lookup(std::uint32_t index, std::string_view name) const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<std::string, Product>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, Product>> entries_;
};

struct AbsResult {
  Product value;
  BoundsEnv benv;
  bool refuted = false;
};

/// Forward abstract evaluation of a possibly partial term.
AbsResult abs_eval(const AbsEnv& env, const BoundsEnv& benv, const Term& t,
                   const ProductDomain& doms, AnalysisCtx& ctx);

/// Product abstraction of a constant.
Product alpha_product(const Value& v, const ProductDomain& doms);

/// Evaluates `t` and checks it against `goal`. False means no completion of
/// `t` can produce a value in γ(goal), so the candidate may be dropped.
NarrowResult satisfies_goal(const AbsEnv& env, const BoundsEnv& benv, const Term& t,
                            const Product& goal, const ProductDomain& doms, AnalysisCtx& ctx);

}  // namespace holesynth
