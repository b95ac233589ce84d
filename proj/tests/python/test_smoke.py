# Copyright 2026 The modspace Authors
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

import math
import os
from pathlib import Path

import pytest

import modspace

FIXTURES = Path(os.environ.get("MODSPACE_FIXTURES", Path(__file__).parents[2] / "fixtures"))


def line(xs):
    return [[abs(a - b) for b in xs] for a in xs]


def test_d0_matches_closed_form():
    d = line([0.0, 0.5, 3.0])
    for p in (0.0, 1.0, 2.0):
        g = modspace.scaled_gauge(d, p)
        for i in range(3):
            for j in range(3):
                assert g[i][j] == pytest.approx(d[i][j] ** (1.0 / (p + 1.0)), abs=1e-8)


def test_dstar_of_scaled_modular():
    g = modspace.scaled_gauge(line([0.0, 4.0]), 2.0, kind="dstar")
    assert g[0][1] == pytest.approx(2.0, abs=1e-8)


def test_lp_distances_match_direct_norm():
    f = [[1.0, -2.0, 0.5], [0.0, 1.0, 1.5]]
    masses = [0.2, 0.3, 0.5]
    d = modspace.lp_distances(f, masses, 2.0)
    direct = math.sqrt(sum(m * (a - b) ** 2 for a, b, m in zip(f[0], f[1], masses)))
    assert d[0][1] == pytest.approx(direct, rel=1e-8)


def test_adequacy_single_anchor_equilateral():
    tri = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    defect, _, _ = modspace.adequacy_defect(tri, [0])
    assert defect == 2.0
    assert modspace.adequacy_defect(tri, [0, 1, 2])[0] == 0.0


def test_fuzzy_matrix():
    m = modspace.fuzzy_matrix(line([0.0, 1.0]), 1.0)
    assert m[0][0] == 1.0 and m[0][1] == pytest.approx(0.5)


def test_run_fixture_is_deterministic():
    cfg = (FIXTURES / "axioms_scaled.json").read_text()
    a = modspace.run_experiment(cfg, FIXTURES, 5)
    b = modspace.run_experiment(cfg, FIXTURES, 5)
    assert a == b
    assert a[0] == 0 and a[1]["verdict"] == "pass"
    assert set(modspace.experiment_kinds()) >= {"axioms", "kr", "fuzzy"}


def test_schema_error_is_value_error():
    with pytest.raises(ValueError, match="config.modular"):
        modspace.run_experiment({"experiment": "axioms"})
