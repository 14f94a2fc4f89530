#!/usr/bin/env python3
# Copyright 2026 The Pacing Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes gadget_golden.json: expected compiled games for a few circuits.

Run once and commit the output; the C++ tests compare against the frozen
file. Uses only the gadget formulas and the layout convention (b-buyers by
node, then c-buyers by gate output; goods per gate, gadget goods before edge
goods).
"""

import json
import sys
from fractions import Fraction as F

LICENSE = ("Copyright 2026 The Pacing Authors. Licensed under the Apache "
           "License, Version 2.0.")

AUX = F(1000)

CIRCUITS = {
    "not_cycle": (2, [("NOT", 1, 2, None), ("NOT", 2, 1, None)]),
    "nor": (3, [("NOR", 1, 2, 3), ("NOT", 3, 1, None), ("NOT", 1, 2, None)]),
    "npurify": (5, [("NPURIFY", 1, 2, 3), ("NOT", 2, 4, None),
                    ("NOR", 3, 4, 5), ("NOT", 5, 1, None)]),
}


def fmt(x):
    return f"{x.numerator}/{x.denominator}"


def main_gadgets(gamma):
    d = F(1, 3) - gamma
    k = 3 * d / 2
    return {
        # kind -> list of (output slot, budget, value for c); b value = c/k
        "NOT": [("v", F(2), 1 + d, (1 + d) / k)],
        "NOR": [("w", F(3), 2 - d, (2 - d) / k)],
        "NPURIFY": [("v", F(3, 2), 1 - d / 2, (1 - d / 2) / k),
                    ("w", F(3, 2), F(1, 2) + d / 2, (F(1, 2) + d / 2) / k)],
    }, 1 / k + 1


def weak_gadgets():
    return {
        "NOT": [("v", F(3, 2), F(1), F(9))],
        "NOR": [("w", F(5, 2), F(2), F(18))],
        "NPURIFY": [("v", F(9, 5), F(3, 2), F(27, 2)),
                    ("w", F(14, 5), F(2), F(18))],
    }, F(1000)


def compile_case(name, variant, gamma):
    nodes, gates = CIRCUITS[name]
    gadgets, edge_value = (main_gadgets(gamma) if variant == "main"
                           else weak_gadgets())
    buyers = [f"b_{v}" for v in range(1, nodes + 1)]
    budgets = {}
    goods = []
    values = []
    for kind, u, v, w in gates:
        slots = {"u": u, "v": v, "w": w}
        inputs = [u] if kind in ("NOT", "NPURIFY") else [u, v]
        outs = []
        for slot, budget, c_value, b_value in gadgets[kind]:
            o = slots[slot]
            outs.append(o)
            budgets[f"b_{o}"] = budget
            buyers.append(f"c_{o}")
            budgets[f"c_{o}"] = AUX
            goods.append(f"g_{o}")
            values.append([f"b_{o}", f"g_{o}", fmt(b_value)])
            values.append([f"c_{o}", f"g_{o}", fmt(c_value)])
        for i in inputs:
            for o in outs:
                g = f"g_({i},{o})"
                goods.append(g)
                values.append([f"b_{i}", g, "1/1"])
                values.append([f"b_{o}", g, fmt(edge_value)])
    return {
        "name": name,
        "variant": variant,
        "gamma": fmt(gamma),
        "circuit": {
            "nodes": nodes,
            "gates": [{"kind": k, "u": u, "v": v, "w": w}
                      for k, u, v, w in gates],
        },
        "buyers": buyers,
        "goods": goods,
        "budgets": [fmt(budgets[b]) for b in buyers],
        "values": values,
    }


def main():
    cases = []
    for name in CIRCUITS:
        for gamma in (F(0), F(1, 12)):
            cases.append(compile_case(name, "main", gamma))
        cases.append(compile_case(name, "weak", F(1, 20)))
    json.dump({"license": LICENSE, "cases": cases}, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
