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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace holesynth {

/// Sorts of the string theory fragment we synthesize over.
enum class Sort : std::uint8_t { String, Int, Bool };

std::string_view sort_name(Sort s);
/// Parses "String" / "Int" / "Bool"; throws std::invalid_argument otherwise.
Sort sort_from_name(std::string_view name);

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A concrete value: a string, a (mathematical, 64-bit) integer or a boolean.
class Value {
 public:
  Value() : data_(std::string()) {}
  explicit Value(std::string s) : data_(std::move(s)) {}
  explicit Value(const char* s) : data_(std::string(s)) {}
  explicit Value(std::int64_t i) : data_(i) {}
  explicit Value(int i) : data_(static_cast<std::int64_t>(i)) {}
  explicit Value(bool b) : data_(b) {}

  static Value str(std::string s) { return Value(std::move(s)); }
  static Value integer(std::int64_t i) { return Value(i); }
  static Value boolean(bool b) { return Value(b); }

  Sort sort() const {
    switch (data_.index()) {
      case 0: return Sort::String;
      case 1: return Sort::Int;
      default: return Sort::Bool;
    }
  }
  bool is_str() const { return data_.index() == 0; }
  bool is_int() const { return data_.index() == 1; }
  bool is_bool() const { return data_.index() == 2; }

  const std::string& as_str() const { return std::get<std::string>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }

  /// SMT-LIB literal syntax: "a""b", (- 3), true.
  std::string to_sexpr() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<std::string, std::int64_t, bool> data_;
};

/// Quotes a string as an SMT-LIB string literal (doubling embedded quotes).
std::string quote_string(std::string_view s);

}  // namespace holesynth
