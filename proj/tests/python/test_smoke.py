# Copyright 2026 The Holesynth Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pathlib

import pytest

import holesynth

BENCH = pathlib.Path(__file__).resolve().parents[2] / "benchmarks"


def test_solve_phone():
    r = holesynth.solve(str(BENCH / "phone.sl"))
    assert r["solved"]
    assert r["size"] == 4
    assert r["eliminated"] == 0
    for inputs, output in holesynth.examples(str(BENCH / "phone.sl")):
        assert holesynth.evaluate(r["program"], inputs) == output


def test_prefix_spec_prunes():
    top = holesynth.solve(str(BENCH / "dr-name.sl"))
    pre = holesynth.solve(str(BENCH / "dr-name.sl"), abs_out=['prefix:"Dr. "'])
    assert pre["solved"]
    assert pre["eliminated"] > 0
    assert pre["tested"] < top["tested"]


def test_exhaustion_reported():
    text = """
(set-logic SLIA)
(synth-fun f ((x String)) String ((Start String (x "c" (str.++ Start Start)))))
(constraint (= (f "ab") "zz"))
"""
    r = holesynth.solve_text(text, max_size=4)
    assert not r["solved"]
    assert r["outcome"] == "exhausted"
    assert r["program"] is None


def test_evaluate_semantics():
    prog = '(define-fun f ((s String) (n Int)) String (str.substr s n 2))'
    assert holesynth.evaluate(prog, ["hello", 1]) == "el"
    assert holesynth.evaluate(prog, ["hello", -1]) == ""


def test_errors():
    with pytest.raises(ValueError):
        holesynth.solve_text("(synth-fun f")
    with pytest.raises(RuntimeError):
        holesynth.solve(str(BENCH / "does-not-exist.sl"))
