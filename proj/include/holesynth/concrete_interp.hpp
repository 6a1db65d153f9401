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

// Reference interpreter following SMT-LIB string-theory semantics.

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "holesynth/term.hpp"
#include "holesynth/value.hpp"

namespace holesynth {

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

using Bindings = std::map<std::string, Value>;

struct Example {
  std::vector<Value> inputs;  // by parameter position
  Value output;
  friend bool operator==(const Example&, const Example&) = default;
};

/// Applies one operator to concrete arguments of the right sorts.
Value apply_op(Op op, std::span<const Value> args);

/// Evaluates a hole-free term; variables are looked up by name.
Value concrete_eval(const Bindings& bindings, const Term& t);
/// Same, with variables looked up by parameter position.
Value concrete_eval(std::span<const Value> params, const Term& t);

/// True iff the body reproduces every example; evaluation errors count as
/// failure.
bool test_program(const Program& p, std::span<const Example> examples);
bool test_term(const Term& body, std::span<const Example> examples);

}  // namespace holesynth
