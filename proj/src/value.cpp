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

#include "holesynth/value.hpp"

namespace holesynth {

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::String: return "String";
    case Sort::Int: return "Int";
    case Sort::Bool: return "Bool";
  }
  return "?";
}

Sort sort_from_name(std::string_view name) {
  if (name == "String") return Sort::String;
  if (name == "Int") return Sort::Int;
  if (name == "Bool") return Sort::Bool;
  throw std::invalid_argument("unknown sort: " + std::string(name));
}

std::string quote_string(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string Value::to_sexpr() const {
  switch (sort()) {
    case Sort::String: return quote_string(as_str());
    case Sort::Int: {
      auto v = as_int();
      if (v < 0) {
        // Negate through unsigned arithmetic to stay defined at INT64_MIN.
        auto mag = static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v);
        return "(- " + std::to_string(mag) + ")";
      }
      return std::to_string(v);
    }
    case Sort::Bool: return as_bool() ? "true" : "false";
  }
  return {};
}

}  // namespace holesynth
