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

#include "holesynth/sexpr.hpp"

#include <cctype>

namespace holesynth {

ParseError::ParseError(const std::string& msg, int line, int col)
    : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  ReadResult all() {
    ReadResult r;
    while (skip(&r.comments)) r.exprs.push_back(expr());
    return r;
  }

  SExpr one() {
    if (!skip(nullptr)) fail("expected an s-expression");
    SExpr e = expr();
    if (skip(nullptr)) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  char peek() const { return s_[pos_]; }
  bool done() const { return pos_ >= s_.size(); }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Skips blanks and comments; returns false at end of input.
  bool skip(std::vector<Comment>* comments) {
    while (!done()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == ';') {
        int line = line_;
        std::size_t start = pos_;
        while (!done() && peek() != '\n') advance();
        if (comments) {
          std::string_view body = s_.substr(start, pos_ - start);
          while (!body.empty() && body.front() == ';') body.remove_prefix(1);
          while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
            body.remove_prefix(1);
          while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
            body.remove_suffix(1);
          comments->push_back({std::string(body), line});
        }
      } else {
        return true;
      }
    }
    return false;
  }

  SExpr expr() {
    SExpr e;
    e.line = line_;
    e.col = col_;
    char c = peek();
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::List;
      while (true) {
        if (!skip(nullptr)) throw ParseError("unterminated list", e.line, e.col);
        if (peek() == ')') {
          advance();
          return e;
        }
        e.items.push_back(expr());
      }
    }
    if (c == ')') fail("unexpected ')'");
    if (c == '"') {
      advance();
      e.kind = SExpr::Kind::String;
      while (true) {
        if (done()) throw ParseError("unterminated string literal", e.line, e.col);
        char d = peek();
        advance();
        if (d == '"') {
          if (!done() && peek() == '"') {
            e.text.push_back('"');
            advance();
            continue;
          }
          return e;
        }
        e.text.push_back(d);
      }
    }
    e.kind = SExpr::Kind::Symbol;
    if (c == '|') {
      advance();
      while (true) {
        if (done()) throw ParseError("unterminated quoted symbol", e.line, e.col);
        char d = peek();
        advance();
        if (d == '|') break;
        e.text.push_back(d);
      }
      e.text = "|" + e.text + "|";
      return e;
    }
    while (!done()) {
      char d = peek();
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"' ||
          d == ';')
        break;
      e.text.push_back(d);
      advance();
    }
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void print(const SExpr& e, std::string& out) {
  switch (e.kind) {
    case SExpr::Kind::Symbol: out += e.text; return;
    case SExpr::Kind::String: out += quote_string(e.text); return;
    case SExpr::Kind::List:
      out.push_back('(');
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out.push_back(' ');
        print(e.items[i], out);
      }
      out.push_back(')');
  }
}

}  // namespace

ReadResult read_sexprs(std::string_view text) { return Reader(text).all(); }
SExpr read_sexpr(std::string_view text) { return Reader(text).one(); }

std::string to_string(const SExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

}  // namespace holesynth
