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
Acceptance runs: every suite on its reference configurations, each within a time budget.
"""
import argparse
import importlib.util
import os
import sys
import time
from pathlib import Path

from termcolor import cprint

# Assuming this script is called from the root folder of this project.
prj_path = Path(os.getcwd())
if str(prj_path) not in sys.path:
    sys.path.insert(0, str(prj_path))

from qschur.smallreps import (
    Status,
    SuiteConfig,
    verify_affine_hecke,
    verify_commuting,
    verify_drinfeld,
    verify_eval_compat,
    verify_jm,
    verify_lemmas,
    verify_qgl,
    verify_ring,
)

config_path = Path.joinpath(Path.cwd(), "e2etest", "common", "config.py")
spec = importlib.util.spec_from_file_location("config", config_path)
config = importlib.util.module_from_spec(spec)
sys.modules["config"] = config
spec.loader.exec_module(config)

from config import AcceptanceCase, AcceptanceCfg

SENSITIVE_SUITES = (verify_qgl, verify_affine_hecke, verify_commuting)


def run_case(case: AcceptanceCase, workers: int) -> list:
    """
    Run one acceptance configuration and return its reports.
    """
    params = dict(case.params)
    if case.suite == "jm":
        return [verify_jm(SuiteConfig(r=params["r"], t_max=params["t_max"], workers=workers))]
    if case.suite == "drinfeld":
        cfg = SuiteConfig(n=params["n"], workers=workers)
        return [verify_drinfeld(cfg, params["r_max"])]
    if case.suite == "ring":
        return [verify_ring(SuiteConfig(seed=params["seed"], workers=workers))]
    cfg = SuiteConfig(workers=workers, **params)
    if case.suite == "mutation":
        reports = [suite(cfg) for suite in SENSITIVE_SUITES]
        return reports + [verify_eval_compat(cfg, "En")]
    runners = {
        "qgl": verify_qgl,
        "affine-hecke": verify_affine_hecke,
        "commuting": verify_commuting,
        "lemmas": verify_lemmas,
        "eval-compat-En": lambda c: verify_eval_compat(c, "En"),
        "eval-compat-Fn": lambda c: verify_eval_compat(c, "Fn"),
    }
    return [runners[case.suite](cfg)]


def check_case(case: AcceptanceCase, reports: list) -> bool:
    """
    A mutated configuration is accepted when at least one suite catches it, any other when
    every report passes.
    """
    if case.suite == "mutation":
        return any(report.status is Status.FAIL for report in reports)
    return all(report.passed for report in reports)


def main(test_cfg: AcceptanceCfg):
    """
    Run the acceptance configurations and exit with 1 on the first failure or overrun.
    """
    for case in test_cfg.cases:
        budget = case.budget_s * test_cfg.budget_scale
        start = time.monotonic()
        reports = run_case(case, test_cfg.workers)
        elapsed = time.monotonic() - start
        cases = sum(report.cases for report in reports)
        label = f"{case.suite} {case.params}"
        if not check_case(case, reports):
            cprint(f"{label}: failed.", color="red", flush=True)
            for report in reports:
                for failure in report.failures[:5]:
                    print(f"  {failure.case}", flush=True)
            sys.exit(1)
        if elapsed > budget:
            cprint(f"{label}: {elapsed:.1f} s over the {budget:.0f} s budget.", "red", flush=True)
            sys.exit(1)
        cprint(f"{label}: {cases} cases in {elapsed:.1f} s.", color="green", flush=True)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--suite", default=None, type=str)
    args = parser.parse_args()

    main(AcceptanceCfg(only=args.suite))
