# Copyright 2026 The probeq Authors.
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

import json
import os
from fractions import Fraction

import pytest

import probeq

FIXTURES = os.environ.get(
    "PROBEQ_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")
)


def fixture(name):
    return os.path.join(FIXTURES, name + ".json")


def test_fixture_equivalence_both_modes():
    b = probeq.load(fixture("fig2-B"))
    c = probeq.load(fixture("fig2-C"))
    for mode in ("randomized", "deterministic"):
        equivalent, witness, point = probeq.cost_equivalence(b, c, mode=mode, seed=7)
        assert equivalent
        assert witness is None and point is None


def test_substituted_weight():
    b = probeq.load(fixture("fig2-B"))
    assert probeq.cost_weight(b, [], [3]) == Fraction(-3, 7)


def test_weighted_round_trip_and_zeroness():
    doc = {
        "kind": "weighted",
        "version": 1,
        "states": 2,
        "alphabet": ["a"],
        "transitions": {"a": [[0, 1, "1/2"]]},
        "initial": ["1", "0"],
        "final": ["0", "1"],
    }
    a = probeq.parse_document(json.dumps(doc))
    assert probeq.weight(a, ["a"]) == Fraction(1, 2)
    zero, witness = probeq.tzeng_zeroness(a)
    assert not zero and witness == ["a"]
    assert probeq.parse_document(a.to_json()).to_json() == a.to_json()
    assert probeq.equivalence(a, a) == (True, None)


def test_circuits():
    sq = probeq.load(fixture("sq10"))
    assert probeq.acit_test(sq, probeq.load(fixture("sq10-alt")))
    assert not probeq.acit_test(sq, probeq.load(fixture("sq10-plus1")))
    assert probeq.circuit_value(sq) == 2 ** 1024


def test_reduction():
    c = probeq.parse_document(
        json.dumps(
            {
                "kind": "circuit",
                "version": 1,
                "gates": [["const", "1"], ["add", 0, 0], ["mul", 1, 1]],
                "output": 2,
            }
        )
    )
    vpa, word, scale, depth = probeq.circuit_to_vpa(c)
    assert depth % 2 == 1
    assert probeq.vpa_weight(vpa, word) == Fraction(4, int(scale))


def test_errors_and_cli():
    with pytest.raises(probeq.ProbeqError, match="Parse"):
        probeq.parse_document('{"kind": "weighted", "version": 1, "states": 1, "alphabet": [],'
                              ' "transitions": {}, "initial": ["0.5"], "final": ["1"]}')
    code, out, _ = probeq.run_cli(["acit", fixture("sq10"), fixture("sq10-plus1")])
    assert code == 1
    assert json.loads(out)["verdict"] == "unequal"
