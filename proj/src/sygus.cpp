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

#include "holesynth/sygus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace holesynth {

namespace {

constexpr std::string_view kDirectiveKeys[] = {"abs-out", "bench-args"};

[[noreturn]] void fail_at(const SExpr& e, const std::string& msg) {
  throw ParseError(msg, e.line, e.col);
}

Sort parse_sort(const SExpr& e) {
  if (!e.is_symbol()) fail_at(e, "expected a sort, got " + to_string(e));
  if (e.text == "String") return Sort::String;
  if (e.text == "Int") return Sort::Int;
  if (e.text == "Bool") return Sort::Bool;
  fail_at(e, "unsupported sort " + e.text);
}

std::vector<Param> parse_params(const SExpr& e) {
  if (!e.is_list()) fail_at(e, "expected a parameter list");
  std::vector<Param> out;
  for (const auto& p : e.items) {
    if (!p.is_list() || p.size() != 2 || !p[0].is_symbol())
      fail_at(p, "expected (name Sort), got " + to_string(p));
    out.push_back({p[0].text, parse_sort(p[1])});
  }
  return out;
}

std::optional<std::int64_t> parse_numeral(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// (name Sort (rules...)) in either dialect.
Production parse_production(const SExpr& e) {
  if (!e.is_list() || e.size() != 3 || !e[0].is_symbol() || !e[2].is_list())
    fail_at(e, "expected (Nonterminal Sort (rules...)), got " + to_string(e));
  return {e[0].text, parse_sort(e[1]), e[2].items};
}

void parse_synth_fun(const SExpr& cmd, SygusFile& f) {
  if (cmd.size() < 4 || !cmd[1].is_symbol()) fail_at(cmd, "malformed synth-fun");
  if (!f.fun_name.empty()) fail_at(cmd, "more than one synth-fun");
  f.fun_name = cmd[1].text;
  f.params = parse_params(cmd[2]);
  f.ret = parse_sort(cmd[3]);
  if (cmd.size() == 4) return;
  if (cmd.size() == 5) {
    if (!cmd[4].is_list()) fail_at(cmd[4], "expected a grammar");
    for (const auto& p : cmd[4].items) f.grammar.push_back(parse_production(p));
    return;
  }
  if (cmd.size() == 6) {
    // Predeclared nonterminals followed by grouped rules.
    f.v2_grammar = true;
    if (!cmd[4].is_list() || !cmd[5].is_list()) fail_at(cmd, "malformed grammar");
    for (const auto& p : cmd[5].items) f.grammar.push_back(parse_production(p));
    if (cmd[4].size() != f.grammar.size()) fail_at(cmd[4], "nonterminal declarations do not match rules");
    for (std::size_t i = 0; i < f.grammar.size(); ++i) {
      const auto& d = cmd[4][i];
      if (!d.is_list() || d.size() != 2 || !d[0].is_symbol(f.grammar[i].name) ||
          parse_sort(d[1]) != f.grammar[i].sort)
        fail_at(d, "nonterminal declaration does not match its rules");
    }
    return;
  }
  fail_at(cmd, "malformed synth-fun");
}

bool is_call(const SExpr& e, const SygusFile& f) {
  return e.is_list() && e.size() >= 1 && e[0].is_symbol(f.fun_name);
}

[[noreturn]] void unsupported(const SExpr& c) {
  throw UnsupportedConstraint("unsupported constraint (not an input/output example): " + to_string(c));
}

void push_unique(std::vector<Value>& v, Value x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(std::move(x));
}

void add_to_pool(ConstantPool& pool, const Value& v) {
  if (v.is_str()) push_unique(pool.strings, v);
  if (v.is_int()) push_unique(pool.ints, v);
}

}  // namespace

std::optional<std::string> SygusFile::directive(std::string_view key) const {
  for (const auto& [k, v] : directives)
    if (k == key) return v;
  return std::nullopt;
}

std::optional<Value> literal_value(const SExpr& e) {
  if (e.is_string()) return Value::str(e.text);
  if (e.is_symbol("true")) return Value::boolean(true);
  if (e.is_symbol("false")) return Value::boolean(false);
  if (e.is_symbol()) {
    if (auto n = parse_numeral(e.text)) return Value::integer(*n);
    return std::nullopt;
  }
  if (e.size() == 2 && e[0].is_symbol("-") && e[1].is_symbol())
    if (auto n = parse_numeral(e[1].text)) return Value::integer(-*n);
  return std::nullopt;
}

SygusFile parse_sygus(std::string_view text) {
  auto read = read_sexprs(text);
  SygusFile f;
  for (const auto& c : read.comments) {
    for (auto key : kDirectiveKeys) {
      std::string_view body = c.text;
      if (body.starts_with(key) && body.size() > key.size() && body[key.size()] == ':') {
        body.remove_prefix(key.size() + 1);
        while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
        f.directives.emplace_back(std::string(key), std::string(body));
      }
    }
  }
  for (const auto& cmd : read.exprs) {
    if (!cmd.is_list() || cmd.size() == 0 || !cmd[0].is_symbol())
      fail_at(cmd, "expected a command");
    const auto& head = cmd[0].text;
    if (head == "set-logic") {
      if (cmd.size() != 2 || !cmd[1].is_symbol()) fail_at(cmd, "malformed set-logic");
      f.logic = cmd[1].text;
    } else if (head == "synth-fun") {
      parse_synth_fun(cmd, f);
    } else if (head == "declare-var") {
      if (cmd.size() != 3 || !cmd[1].is_symbol()) fail_at(cmd, "malformed declare-var");
      f.declared_vars.push_back({cmd[1].text, parse_sort(cmd[2])});
    } else if (head == "constraint") {
      if (cmd.size() != 2) fail_at(cmd, "malformed constraint");
      f.constraints.push_back(cmd[1]);
    } else if (head == "check-synth") {
    } else {
      f.warnings.push_back(std::to_string(cmd.line) + ":" + std::to_string(cmd.col) +
                           ": ignoring command " + head);
    }
  }
  if (f.fun_name.empty()) throw ParseError("no synth-fun command", 1, 1);
  return f;
}

SygusFile load_sygus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sygus(ss.str());
}

std::string print_sygus(const SygusFile& f) {
  std::string out;
  for (const auto& [k, v] : f.directives) out += "; " + k + ": " + v + "\n";
  if (!f.logic.empty()) out += "(set-logic " + f.logic + ")\n";
  out += "(synth-fun " + f.fun_name + " (";
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    if (i) out += ' ';
    out += "(" + f.params[i].name + " " + std::string(sort_name(f.params[i].sort)) + ")";
  }
  out += ") " + std::string(sort_name(f.ret));
  auto production = [](const Production& p) {
    std::string s = "(" + p.name + " " + std::string(sort_name(p.sort)) + " (";
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
      if (i) s += ' ';
      s += to_string(p.rules[i]);
    }
    return s + "))";
  };
  if (!f.grammar.empty()) {
    if (f.v2_grammar) {
      out += "\n  (";
      for (std::size_t i = 0; i < f.grammar.size(); ++i) {
        if (i) out += ' ';
        out += "(" + f.grammar[i].name + " " + std::string(sort_name(f.grammar[i].sort)) + ")";
      }
      out += ")";
    }
    out += "\n  (";
    for (std::size_t i = 0; i < f.grammar.size(); ++i) {
      if (i) out += "\n   ";
      out += production(f.grammar[i]);
    }
    out += ")";
  }
  out += ")\n";
  for (const auto& v : f.declared_vars)
    out += "(declare-var " + v.name + " " + std::string(sort_name(v.sort)) + ")\n";
  for (const auto& c : f.constraints) out += "(constraint " + to_string(c) + ")\n";
  out += "(check-synth)\n";
  return out;
}

std::vector<Example> extract_examples(const SygusFile& f) {
  std::vector<Example> out;
  for (const auto& c : f.constraints) {
    if (!c.is_list() || c.size() != 3 || !c[0].is_symbol("=")) unsupported(c);
    const SExpr* call = nullptr;
    const SExpr* result = nullptr;
    if (is_call(c[1], f)) {
      call = &c[1];
      result = &c[2];
    } else if (is_call(c[2], f)) {
      call = &c[2];
      result = &c[1];
    } else {
      unsupported(c);
    }
    if (call->size() != f.params.size() + 1) unsupported(c);
    Example ex;
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      auto v = literal_value((*call)[i + 1]);
      if (!v || v->sort() != f.params[i].sort) unsupported(c);
      ex.inputs.push_back(*v);
    }
    auto v = literal_value(*result);
    if (!v || v->sort() != f.ret) unsupported(c);
    ex.output = *v;
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<Value> ConstantPool::all() const {
  std::vector<Value> out = strings;
  out.insert(out.end(), ints.begin(), ints.end());
  return out;
}

ConstantPool mine_constants(const SygusFile& f) {
  ConstantPool pool;
  for (const auto& p : f.grammar)
    for (const auto& r : p.rules)
      if (auto v = literal_value(r)) add_to_pool(pool, *v);
  if (!pool.strings.empty() || !pool.ints.empty()) return pool;
  for (const auto& ex : extract_examples(f)) {
    for (const auto& v : ex.inputs) add_to_pool(pool, v);
    add_to_pool(pool, ex.output);
  }
  return pool;
}

std::vector<Op> grammar_ops(const SygusFile& f) {
  std::vector<Op> out;
  if (f.grammar.empty()) {
    for (const auto& sig : all_signatures()) out.push_back(sig.op);
    return out;
  }
  for (const auto& p : f.grammar)
    for (const auto& r : p.rules) {
      if (!r.is_list() || r.size() == 0 || !r[0].is_symbol()) continue;
      auto op = op_from_name(r[0].text);
      if (!op || signature(*op).arity + 1u != r.size()) continue;
      if (std::find(out.begin(), out.end(), *op) == out.end()) out.push_back(*op);
    }
  return out;
}

Term term_from_sexpr(const SExpr& e, std::span<const Param> params) {
  if (auto v = literal_value(e)) return make_const(*v);
  if (e.is_symbol()) {
    for (std::size_t i = 0; i < params.size(); ++i)
      if (params[i].name == e.text)
        return make_var(params[i].name, static_cast<std::uint32_t>(i), params[i].sort);
    throw Error("unknown symbol " + e.text);
  }
  if (!e.is_list() || e.size() == 0 || !e[0].is_symbol()) throw Error("malformed term " + to_string(e));
  auto op = op_from_name(e[0].text);
  if (!op) throw Error("unsupported operator " + e[0].text);
  std::vector<Term> args;
  for (std::size_t i = 1; i < e.size(); ++i) args.push_back(term_from_sexpr(e[i], params));
  if (args.size() != signature(*op).arity)
    throw Error("wrong number of arguments in " + to_string(e));
  return make_app(*op, args);
}

Program parse_define_fun(std::string_view text) {
  auto e = read_sexpr(text);
  if (!e.is_list() || e.size() != 5 || !e[0].is_symbol("define-fun") || !e[1].is_symbol())
    fail_at(e, "expected (define-fun name params sort body)");
  Program p;
  p.name = e[1].text;
  p.params = parse_params(e[2]);
  p.ret = parse_sort(e[3]);
  p.body = term_from_sexpr(e[4], p.params);
  if (p.body->sort != p.ret) fail_at(e[4], "body sort does not match the declared sort");
  return p;
}

AbsSpec parse_abs_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw Error("abstraction must look like domain:literal, got " + std::string(text));
  AbsSpec s{std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
  if (s.domain == "len") s.domain = "length";
  return s;
}

Problem to_problem(const SygusFile& f, const RunConfig& cfg) {
  if (cfg.domains.empty()) throw Error("the domain list is empty");
  Problem p;
  p.name = f.fun_name;
  p.params = f.params;
  p.ret = f.ret;
  p.examples = extract_examples(f);
  if (p.examples.empty()) throw UnsupportedConstraint("no input/output examples");
  p.ops = grammar_ops(f);
  p.constants = mine_constants(f).all();

  std::vector<DomainPtr> doms;
  for (const auto& name : cfg.domains) {
    auto d = make_domain(name);
    for (const auto& other : doms)
      if (other->id() == d->id()) throw Error("domain listed twice: " + name);
    doms.push_back(std::move(d));
  }
  p.domains = ProductDomain(std::move(doms));
  p.goal.assign(p.domains.size(), Abstraction::top());

  AnalysisCtx ctx;
  for (const auto& spec : cfg.abs_out) {
    auto probe = make_domain(spec.domain);
    std::optional<std::size_t> slot;
    for (std::size_t i = 0; i < p.domains.size(); ++i)
      if (p.domains.at(i).id() == probe->id()) slot = i;
    if (!slot) throw Error("abstraction for " + spec.domain + " but that domain is not enabled");
    const Domain& dom = p.domains.at(*slot);
    if (!dynamic_cast<const LengthDomain*>(&dom)) {
      p.goal[*slot] = dom.parse_literal(spec.literal, ctx);
      continue;
    }
    // A length spec is a term over the parameters, read through the domain.
    Term t;
    try {
      t = term_from_sexpr(read_sexpr(spec.literal), p.params);
    } catch (const ParseError& e) {
      throw Error("bad length abstraction '" + spec.literal + "': " + e.what());
    }
    ProductDomain only({p.domains.domains()[*slot]});
    AbsEnv env;
    for (std::size_t i = 0; i < p.params.size(); ++i)
      env.bind(p.params[i].name,
               {LengthDomain::make_expr(LinExpr::var(param_symbol(i, p.params[i].sort)))});
    p.goal[*slot] = abs_eval(env, BoundsEnv(), t, only, ctx).value.at(0);
  }
  return p;
}

SearchOptions to_options(const RunConfig& cfg) {
  SearchOptions o;
  o.timeout_s = cfg.timeout_s;
  o.max_size = cfg.max_size;
  o.max_len = cfg.max_len;
  o.use_cache = cfg.use_cache;
  o.use_templates = cfg.use_templates;
  return o;
}

}  // namespace holesynth
