# Copyright 2026 The tropaut Authors
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


"""Automorphism groups of multigraphs and metric graphs."""

import json

from ._core import (
    Multigraph,
    are_isomorphic,
    automorphism_count_oracle,
    automorphism_order,
    banana,
    betti_number,
    bouquet,
    bridges,
    canonical_form,
    classify_extremal,
    classify_fixed_point_extremal,
    contract,
    cut_vertices,
    enumerate_leafless,
    family,
    fixed_point_bound,
    hurwitz_bound,
    is_connected,
    is_leafless,
    isometry_order,
    leafless_core,
    lollipop,
    metric_genus,
    stabilizer_order,
    subdivide,
)
from . import _core

__all__ = [
    "Multigraph",
    "are_isomorphic",
    "automorphism_count_oracle",
    "automorphism_group",
    "automorphism_order",
    "banana",
    "betti_number",
    "bouquet",
    "bridges",
    "canonical_form",
    "classify_extremal",
    "classify_fixed_point_extremal",
    "contract",
    "cut_vertices",
    "enumerate_leafless",
    "family",
    "fixed_point_bound",
    "hurwitz_bound",
    "is_connected",
    "is_leafless",
    "isometry_order",
    "leafless_core",
    "lollipop",
    "metric_genus",
    "random_metric_sweep",
    "stabilizer_order",
    "subdivide",
    "verify_bound",
    "verify_fixed_point_bound",
]


def automorphism_group(graph, cap=10000):
    """Order and generators as a dict."""
    return json.loads(_core.automorphism_group_json(graph, cap))


def verify_bound(betti, max_vertices, min_degree=2, jobs=1):
    return json.loads(_core.verify_bound_json(betti, max_vertices, min_degree, jobs))


def verify_fixed_point_bound(betti, max_vertices, jobs=1):
    return json.loads(_core.verify_fixed_point_bound_json(betti, max_vertices, jobs))


def random_metric_sweep(g, trials, seed):
    return json.loads(_core.random_metric_sweep_json(g, trials, seed))
