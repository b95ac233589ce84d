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

"""Python bindings for the modspace C++ library."""

import json

from ._core import (
    SchemaError,
    adequacy_defect,
    experiment_kinds,
    fuzzy_matrix,
    lp_distances,
    scaled_gauge,
)
from ._core import run_experiment as _run_experiment


def run_experiment(config, base_dir=".", seed=0):
    """Run an experiment config (dict or JSON string); returns (exit_code, report dict)."""
    text = config if isinstance(config, str) else json.dumps(config)
    code, report = _run_experiment(text, str(base_dir), seed)
    return code, json.loads(report)


__all__ = [
    "SchemaError",
    "adequacy_defect",
    "experiment_kinds",
    "fuzzy_matrix",
    "lp_distances",
    "run_experiment",
    "scaled_gauge",
]
