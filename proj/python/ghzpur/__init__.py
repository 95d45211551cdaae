# Copyright 2026 The ghzpur Authors
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

"""Hyperentanglement-assisted GHZ purification simulator."""

import json as _json

from ._ghzpur import (
    __version__,
    closed_form_fidelity,
    closed_form_success,
    ghz_state,
    hadamard_polarization,
    p_one,
    p_two,
    ratio_r,
    run_bitflip,
    run_phaseflip,
    simulate_json,
    sweep,
    verify,
)


def simulate(config, reproducible=True):
    """Runs a config (dict or JSON text) and returns the record as a dict."""
    text = config if isinstance(config, str) else _json.dumps(config)
    return _json.loads(simulate_json(text, reproducible))


__all__ = [
    "__version__",
    "closed_form_fidelity",
    "closed_form_success",
    "ghz_state",
    "hadamard_polarization",
    "p_one",
    "p_two",
    "ratio_r",
    "run_bitflip",
    "run_phaseflip",
    "simulate",
    "simulate_json",
    "sweep",
    "verify",
]
