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

"""Exact equivalence checking for weighted, cost and visibly pushdown automata."""

from fractions import Fraction

from . import _probeq
from ._probeq import (
    ArithmeticCircuit,
    CostAutomaton,
    ProbeqError,
    WeightedAutomaton,
    WeightedVPA,
    acit_test,
    circuit_to_vpa,
    cost_equivalence,
    equivalence,
    parse_document,
    randomized_zeroness,
    run_cli,
    tzeng_zeroness,
    vpa_equivalence,
)

__all__ = [
    "ArithmeticCircuit",
    "CostAutomaton",
    "ProbeqError",
    "WeightedAutomaton",
    "WeightedVPA",
    "acit_test",
    "circuit_to_vpa",
    "circuit_value",
    "cost_equivalence",
    "cost_weight",
    "equivalence",
    "load",
    "parse_document",
    "randomized_zeroness",
    "run_cli",
    "tzeng_zeroness",
    "vpa_equivalence",
    "vpa_weight",
    "weight",
]


def load(path):
    with open(path, encoding="utf-8") as f:
        return parse_document(f.read())


def weight(a, word):
    return Fraction(_probeq.weight(a, list(word)))


def cost_weight(a, word, point):
    return Fraction(_probeq.cost_weight(a, list(word), [str(Fraction(x)) for x in point]))


def vpa_weight(v, word):
    return Fraction(_probeq.vpa_weight(v, list(word)))


def circuit_value(c):
    return Fraction(_probeq.circuit_value(c))
