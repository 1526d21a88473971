# This file is part of qschur-smallreps.
#
# Copyright 2026 The qschur-smallreps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# SPDX-License-Identifier: Apache-2.0
"""
Contains common configuration for all acceptance runs.
"""

from __future__ import annotations

import os
from collections import namedtuple

AcceptanceCase = namedtuple("AcceptanceCase", ["suite", "params", "budget_s"])


class AcceptanceCfg:
    """
    Acceptance configuration class. Contains the worker count, the time budget scale and the
    configurations every suite is run with.
    """

    # pylint: disable=too-few-public-methods

    def __init__(self, only: str | None = None) -> None:
        raw_workers = os.environ.get("QSCHUR_WORKERS", "1")
        raw_scale = os.environ.get("E2E_BUDGET_SCALE", "1")
        try:
            self.workers = int(raw_workers)
            self.budget_scale = float(raw_scale)
        except ValueError as exc:
            raise ValueError("QSCHUR_WORKERS or E2E_BUDGET_SCALE is malformed") from exc
        if self.workers < 1 or self.budget_scale <= 0:
            raise ValueError("QSCHUR_WORKERS and E2E_BUDGET_SCALE must be positive")

        cases = []
        for n, r in ((2, 2), (3, 2), (3, 3)):
            cases.append(AcceptanceCase("qgl", {"n": n, "r": r, "t_max": 2}, 120))
            cases.append(AcceptanceCase("affine-hecke", {"n": n, "r": r, "t_max": 2}, 60))
        for n, r in ((3, 2), (3, 3)):
            cases.append(AcceptanceCase("commuting", {"n": n, "r": r, "t_max": 2}, 120))
        for n, r in ((2, 2), (3, 2), (3, 3), (4, 2)):
            cases.append(AcceptanceCase("eval-compat-En", {"n": n, "r": r}, 60))
            cases.append(AcceptanceCase("eval-compat-Fn", {"n": n, "r": r}, 60))
        for n in range(2, 5):
            for r in range(1, 5):
                cases.append(AcceptanceCase("lemmas", {"n": n, "r": r, "t_max": 2}, 180))
        for r in range(1, 5):
            cases.append(AcceptanceCase("jm", {"r": r, "t_max": 2}, 300))
        cases.append(AcceptanceCase("drinfeld", {"n": 7, "r_max": 6}, 40))
        cases.append(AcceptanceCase("ring", {"seed": 0}, 10))
        for mutation in ("t-middle-sign", "e-coproduct-side", "naive-affine-t"):
            params = {"n": 2, "r": 2, "t_max": 1, "mutations": [mutation]}
            cases.append(AcceptanceCase("mutation", params, 60))

        self.cases = [case for case in cases if only is None or case.suite == only]
