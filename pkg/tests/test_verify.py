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

# pylint: disable=useless-suppression,missing-function-docstring,missing-class-docstring
# pylint: disable=too-many-statements,too-many-public-methods

import json
import random
import unittest
from unittest import mock

from qschur.smallreps import DomainError, ParseError, UnsupportedInputError
from qschur.smallreps.tensor import Mutation
from qschur.smallreps.verify import (
    WORKERS_ENV,
    Failure,
    Report,
    Status,
    SuiteConfig,
    cartan_entry,
    random_multisegment,
    verify_affine_hecke,
    verify_all,
    verify_commuting,
    verify_drinfeld,
    verify_eval_compat,
    verify_jm,
    verify_lemmas,
    verify_qgl,
    verify_ring,
    workers_from_env,
)


def config(**kwargs):
    params = {"n": 2, "r": 2, "window": (1, 2), "t_max": 1, "workers": 1, "timing": False}
    params.update(kwargs)
    return SuiteConfig(**params)


class ConfigTests(unittest.TestCase):
    def test_defaults(self):
        cfg = SuiteConfig(workers=1)
        self.assertEqual(cfg.window, (-3, 6))
        self.assertEqual(
            cfg.to_dict(), {"n": 3, "r": 2, "window": [-3, 6], "t_max": 2, "seed": 0}
        )

    def test_validation(self):
        with self.assertRaises(DomainError):
            SuiteConfig(n=1, workers=1)
        with self.assertRaises(DomainError):
            SuiteConfig(r=0, workers=1)
        with self.assertRaises(DomainError):
            SuiteConfig(t_max=0, workers=1)
        with self.assertRaises(DomainError):
            SuiteConfig(n=3, window=(2, 3), workers=1)
        with self.assertRaises(DomainError):
            SuiteConfig(workers=0)

    def test_empty_window(self):
        cfg = config(window=(5, 4))
        self.assertTrue(cfg.window_empty())
        self.assertEqual(cfg.window_basis(), [])
        report = verify_qgl(cfg)
        self.assertEqual((report.cases, report.status), (0, Status.PASS))

    def test_replace_resets_window_with_n(self):
        cfg = config(mutations=[Mutation.T_MIDDLE_SIGN])
        wider = cfg.replace(n=4)
        self.assertEqual(wider.window, (-4, 8))
        self.assertEqual(wider.mutations, cfg.mutations)
        self.assertEqual(cfg.replace(seed=5).window, (1, 2))
        self.assertEqual(cfg.to_dict()["mutations"], ["t-middle-sign"])

    def test_workers_from_env(self):
        with mock.patch.dict("os.environ", {WORKERS_ENV: "3"}):
            self.assertEqual(workers_from_env(), 3)
            self.assertEqual(SuiteConfig().workers, 3)
        with mock.patch.dict("os.environ", {WORKERS_ENV: ""}):
            self.assertEqual(workers_from_env(), 1)
        for bad in ("zero", "0", "-2"):
            with mock.patch.dict("os.environ", {WORKERS_ENV: bad}):
                with self.assertRaises(ValueError):
                    workers_from_env()

    def test_cartan_entry(self):
        self.assertEqual(cartan_entry(1, 1, 3), 2)
        self.assertEqual(cartan_entry(1, 2, 3), -1)
        self.assertEqual(cartan_entry(3, 1, 3), -1)
        self.assertEqual(cartan_entry(1, 3, 4), 0)
        self.assertEqual(cartan_entry(1, 2, 2), -2)


class ReportTests(unittest.TestCase):
    def test_passed(self):
        self.assertTrue(Report("x", {}, 0, [], Status.PASS).passed)
        self.assertTrue(Report("x", {}, 1, [("c", "1", "2")], Status.REPORT_ONLY).passed)
        self.assertFalse(Report("x", {}, 1, [("c", "1", "2")], Status.FAIL).passed)

    def test_json_is_deterministic(self):
        report = Report("qgl", {"r": 2, "n": 3}, 1, [Failure("c", "1", "2")], Status.FAIL, 3)
        text = report.to_json()
        self.assertTrue(text.startswith('{"cases": 1, "config": {"n": 3, "r": 2}'))
        self.assertEqual(Report.from_dict(json.loads(text)), report)

    def test_from_dict_errors(self):
        with self.assertRaises(ParseError):
            Report.from_dict([])
        good = Report("qgl", {}, 1, [], Status.PASS).to_dict()
        with self.assertRaises(ParseError):
            Report.from_dict(dict(good, failures=[{"case": "c"}]))
        with self.assertRaises(ParseError):
            Report.from_dict(dict(good, cases="many"))


class SuiteTests(unittest.TestCase):
    def test_ring(self):
        report = verify_ring(config(), samples=5)
        self.assertEqual(report.suite, "ring")
        self.assertEqual(report.status, Status.PASS)
        self.assertGreater(report.cases, 0)

    def test_qgl(self):
        for cfg in (config(), config(n=3, r=1, window=(0, 4)), config(n=3, r=2, window=(1, 3))):
            report = verify_qgl(cfg)
            self.assertEqual(report.status, Status.PASS, report.failures[:3])
            self.assertEqual(report.elapsed_ms, 0)

    def test_affine_hecke(self):
        report = verify_affine_hecke(config(window=(-1, 3)))
        self.assertEqual(report.suite, "affine-hecke")
        self.assertEqual(report.status, Status.PASS, report.failures[:3])
        report = verify_affine_hecke(config(n=2, r=3, window=(0, 2)))
        self.assertEqual(report.status, Status.PASS, report.failures[:3])

    def test_commuting(self):
        report = verify_commuting(config(window=(0, 3)))
        self.assertEqual(report.status, Status.PASS, report.failures[:3])

    def test_eval_compat(self):
        report = verify_eval_compat(config(r=1), "En")
        self.assertEqual(report.suite, "eval-compat-En")
        self.assertEqual(report.config["which"], "En")
        self.assertEqual((report.cases, report.status), (2, Status.PASS))
        report = verify_eval_compat(config(r=1), "Fn")
        self.assertEqual(report.status, Status.REPORT_ONLY)
        self.assertTrue(report.passed)
        with self.assertRaises(DomainError):
            verify_eval_compat(config(), "Kn")

    def test_eval_compat_checks_every_finite_basis_vector(self):
        for n, r in ((2, 2), (3, 2), (3, 3)):
            cfg = config(n=n, r=r, window=None)
            report = verify_eval_compat(cfg, "En")
            self.assertEqual(report.status, Status.PASS, report.failures[:3])
            self.assertEqual(report.cases, n**r)
            report = verify_eval_compat(cfg, "Fn")
            self.assertEqual((report.cases, report.status), (n**r, Status.REPORT_ONLY))
            self.assertTrue(report.passed)

    def test_lemmas(self):
        report = verify_lemmas(config(window=(0, 2)))
        self.assertEqual(report.status, Status.PASS, report.failures[:3])

    def test_jm(self):
        report = verify_jm(config(r=3))
        self.assertEqual(report.config, {"r": 3, "t_max": 1})
        self.assertEqual(report.status, Status.PASS, report.failures[:3])
        # 4 basis checks, then per shape: star, d(t), x_tt, longest element, Young generators
        # and 8 congruences
        shapes = [(1, 1, 1, 2, 4, 8), (4, 2, 1, 2, 2, 8), (1, 1, 1, 2, 0, 8)]
        self.assertEqual(report.cases, 4 + sum(map(sum, shapes)))
        with self.assertRaises(UnsupportedInputError):
            verify_jm(config(r=6))

    def test_drinfeld(self):
        report = verify_drinfeld(config(n=5, window=None), r_max=4)
        self.assertEqual(report.config, {"n": 5, "r_max": 4, "seed": 0})
        self.assertEqual(report.status, Status.PASS, report.failures[:3])
        with self.assertRaises(DomainError):
            verify_drinfeld(config(n=4, window=None), r_max=4)

    def test_random_multisegment(self):
        rng = random.Random(3)
        for _ in range(50):
            ms = random_multisegment(rng, 4)
            self.assertTrue(1 <= ms.total <= 4)

    def test_all(self):
        reports = verify_all(config(r=1), r_max=3)
        self.assertEqual(
            [r.suite for r in reports],
            [
                "ring",
                "qgl",
                "affine-hecke",
                "commuting",
                "eval-compat-En",
                "eval-compat-Fn",
                "lemmas",
                "jm",
                "drinfeld",
            ],
        )
        self.assertTrue(all(r.passed for r in reports))
        self.assertEqual(reports[-1].config["n"], 4)

    def test_all_skips_jm_above_guard(self):
        cfg = config(r=6, window=(4, 1))
        with mock.patch("qschur.smallreps.verify.verify_jm") as mock_jm, mock.patch(
            "qschur.smallreps.verify.verify_drinfeld"
        ) as mock_drinfeld, mock.patch(
            "qschur.smallreps.verify.verify_eval_compat"
        ), mock.patch(
            "qschur.smallreps.verify.verify_lemmas"
        ), mock.patch(
            "qschur.smallreps.verify.verify_ring"
        ), mock.patch(
            "qschur.smallreps.verify.verify_affine_hecke"
        ):
            with self.assertLogs(level="WARNING"):
                verify_all(cfg, r_max=3)
        mock_jm.assert_not_called()
        mock_drinfeld.assert_called_once()

    def test_workers_do_not_change_the_report(self):
        serial = verify_affine_hecke(config())
        parallel = verify_affine_hecke(config(workers=2))
        self.assertEqual(serial, parallel)


class MutationTests(unittest.TestCase):
    def test_t_middle_sign_breaks_affine_hecke(self):
        report = verify_affine_hecke(config(mutations=[Mutation.T_MIDDLE_SIGN]))
        self.assertEqual(report.status, Status.FAIL)
        self.assertFalse(report.passed)
        self.assertEqual(report.config["mutations"], ["t-middle-sign"])

    def test_e_coproduct_side_breaks_qgl(self):
        report = verify_qgl(config(n=3, window=(1, 3), mutations=[Mutation.E_COPRODUCT_SIDE]))
        self.assertEqual(report.status, Status.FAIL)
        self.assertTrue(any(f.case.startswith("coproduct") for f in report.failures))

    def test_naive_affine_t_breaks_affine_hecke(self):
        report = verify_affine_hecke(config(window=(-1, 2), mutations=[Mutation.NAIVE_AFFINE_T]))
        self.assertEqual(report.status, Status.FAIL)
