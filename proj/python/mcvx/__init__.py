# Copyright 2026 The Authors.
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

"""Online inverse linear optimization over M-convex sets."""

import json as _json

from ._mcvx import (
    ArcSet,
    Error,
    Learner,
    MConvexSet,
    OrderPolytope,
    argmax_bruteforce,
    argmax_exchange,
    centroid_mistake_bound,
    figure_csv,
    topo_mistake_bound,
    topological_weights,
    verify_m_convexity,
)
from ._mcvx import run_experiment as _run_experiment
from ._mcvx import verify_trace as _verify_trace


def run_experiment(config):
    """Run a config (dict or JSON string); returns (summary dict, trace text)."""
    text = config if isinstance(config, str) else _json.dumps(config)
    summary, trace = _run_experiment(text)
    return _json.loads(summary), trace


def verify_trace(trace_text):
    """Audit a JSON-lines trace; returns the report as a dict."""
    return _json.loads(_verify_trace(trace_text))


__all__ = [
    "ArcSet",
    "Error",
    "Learner",
    "MConvexSet",
    "OrderPolytope",
    "argmax_bruteforce",
    "argmax_exchange",
    "centroid_mistake_bound",
    "figure_csv",
    "run_experiment",
    "topo_mistake_bound",
    "topological_weights",
    "verify_m_convexity",
    "verify_trace",
]
