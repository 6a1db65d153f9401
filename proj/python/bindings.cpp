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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holesynth/cli.hpp"
#include "holesynth/concrete_interp.hpp"
#include "holesynth/sygus.hpp"

namespace py = pybind11;
using namespace holesynth;

namespace {

py::object to_py(const Value& v) {
  if (v.is_str()) return py::str(v.as_str());
  if (v.is_int()) return py::int_(v.as_int());
  return py::bool_(v.as_bool());
}

Value from_py(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) return Value::boolean(h.cast<bool>());
  if (py::isinstance<py::int_>(h)) return Value::integer(h.cast<std::int64_t>());
  if (py::isinstance<py::str>(h)) return Value::str(h.cast<std::string>());
  throw py::type_error("expected str, int or bool");
}

RunConfig make_config(double timeout, std::uint32_t max_size, std::optional<std::vector<std::string>> domains,
                      const std::vector<std::string>& abs_out, std::int64_t max_len, bool use_cache,
                      bool use_templates) {
  RunConfig cfg;
  cfg.timeout_s = timeout;
  cfg.max_size = max_size;
  if (domains) cfg.domains = *domains;
  for (const auto& a : abs_out) cfg.abs_out.push_back(parse_abs_spec(a));
  cfg.max_len = max_len;
  cfg.use_cache = use_cache;
  cfg.use_templates = use_templates;
  return cfg;
}

py::dict report(const SynthResult& r) {
  py::dict d;
  d["outcome"] = std::string(to_string(r.outcome));
  d["solved"] = r.outcome == Outcome::Solved;
  d["program"] = r.program ? py::object(py::str(r.program->to_define_fun())) : py::none();
  d["size"] = r.program ? py::object(py::int_(r.program->body->size)) : py::none();
  d["height"] = r.program ? py::object(py::int_(r.program->body->height)) : py::none();
  d["time_ms"] = r.stats.elapsed_ms;
  d["tested"] = r.stats.tested;
  d["eliminated"] = r.stats.eliminated;
  d["generated"] = r.stats.generated;
  d["cache_hits"] = r.stats.cache_hits;
  return d;
}

SynthResult solve_file(const SygusFile& f, const RunConfig& cfg) {
  auto problem = to_problem(f, cfg);
  auto opts = to_options(cfg);
  py::gil_scoped_release release;
  return synthesize(problem, opts);
}

}  // namespace

PYBIND11_MODULE(_holesynth, m) {
  m.doc() = "Abstraction-guided enumerative synthesis of string programs from examples.";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "solve",
      [](const std::string& path, double timeout, std::uint32_t max_size,
         std::optional<std::vector<std::string>> domains, const std::vector<std::string>& abs_out,
         std::int64_t max_len, bool use_cache, bool use_templates) {
        auto cfg = make_config(timeout, max_size, domains, abs_out, max_len, use_cache, use_templates);
        return report(solve_file(load_sygus(path), cfg));
      },
      py::arg("path"), py::kw_only(), py::arg("timeout") = 60.0, py::arg("max_size") = 12,
      py::arg("domains") = py::none(), py::arg("abs_out") = std::vector<std::string>{},
      py::arg("max_len") = -1, py::arg("use_cache") = true, py::arg("use_templates") = true,
      "Synthesizes a program for a SyGuS file and returns its statistics.");

  m.def(
      "solve_text",
      [](const std::string& text, double timeout, std::uint32_t max_size,
         const std::vector<std::string>& abs_out) {
        auto cfg = make_config(timeout, max_size, std::nullopt, abs_out, -1, true, true);
        return report(solve_file(parse_sygus(text), cfg));
      },
      py::arg("text"), py::kw_only(), py::arg("timeout") = 60.0, py::arg("max_size") = 12,
      py::arg("abs_out") = std::vector<std::string>{});

  m.def(
      "evaluate",
      [](const std::string& define_fun, const py::list& inputs) {
        auto p = parse_define_fun(define_fun);
        std::vector<Value> vals;
        for (const auto& h : inputs) vals.push_back(from_py(h));
        return to_py(concrete_eval(vals, p.body));
      },
      py::arg("define_fun"), py::arg("inputs"), "Runs a define-fun on concrete inputs.");

  m.def(
      "examples",
      [](const std::string& path) {
        py::list out;
        for (const auto& ex : extract_examples(load_sygus(path))) {
          py::list ins;
          for (const auto& v : ex.inputs) ins.append(to_py(v));
          out.append(py::make_tuple(ins, to_py(ex.output)));
        }
        return out;
      },
      py::arg("path"));
}
