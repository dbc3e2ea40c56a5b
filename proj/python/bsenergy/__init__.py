# Copyright 2026 The bsenergy Authors
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
"""Energy and hardness analysis of photonic Boson Sampling."""

import json

from ._bsenergy import (
    ConfigError,
    InfeasibleError,
    Workbench,
    __version__,
    click_statistics,
    flop_lower_bound,
    haar_random_unitary,
    mode_count,
    output_distribution,
    permanent,
)


def load(path=None, overrides=()):
    """Workbench from a JSON config file (defaults when path is None)."""
    text = ""
    if path is not None:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    return Workbench(text, list(overrides))


def from_dict(config, overrides=()):
    return Workbench(json.dumps(config), list(overrides))


__all__ = [
    "ConfigError",
    "InfeasibleError",
    "Workbench",
    "__version__",
    "click_statistics",
    "flop_lower_bound",
    "from_dict",
    "haar_random_unitary",
    "load",
    "mode_count",
    "output_distribution",
    "permanent",
]
