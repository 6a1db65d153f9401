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

// S-expression reader and printer for SMT-LIB / SyGuS text.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "holesynth/value.hpp"

namespace holesynth {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct SExpr {
  enum class Kind : std::uint8_t { Symbol, String, List };

  Kind kind = Kind::List;
  /// Symbol text, or the unescaped contents of a string literal.
  std::string text;
  std::vector<SExpr> items;
  int line = 0;
  int col = 0;

  static SExpr symbol(std::string s) { return {Kind::Symbol, std::move(s), {}, 0, 0}; }
  static SExpr string(std::string s) { return {Kind::String, std::move(s), {}, 0, 0}; }
  static SExpr list(std::vector<SExpr> items) { return {Kind::List, {}, std::move(items), 0, 0}; }

  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  bool is_string() const { return kind == Kind::String; }
  bool is_list() const { return kind == Kind::List; }
  std::size_t size() const { return items.size(); }
  const SExpr& operator[](std::size_t i) const { return items.at(i); }

  /// Structural equality; source positions are ignored.
  friend bool operator==(const SExpr& a, const SExpr& b) {
    return a.kind == b.kind && a.text == b.text && a.items == b.items;
  }
};

/// A top-level comment, kept so files can carry run directives.
struct Comment {
  std::string text;  // without the leading ';' characters and surrounding blanks
  int line = 0;
};

struct ReadResult {
  std::vector<SExpr> exprs;
  std::vector<Comment> comments;
};

/// Reads every top-level s-expression. Throws ParseError.
ReadResult read_sexprs(std::string_view text);
/// Reads exactly one s-expression. Throws ParseError.
SExpr read_sexpr(std::string_view text);

std::string to_string(const SExpr& e);

}  // namespace holesynth
