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
Command line entry point.

Exit codes: 0 when every asserted suite passes, 1 when one fails, 2 on usage errors.
Report-only suites never change the exit code.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from termcolor import cprint

from qschur.smallreps import __version__
from qschur.smallreps.codec import (
    encode_drinfeld,
    encode_hecke,
    encode_laurent,
    encode_multisegment,
    encode_tensor,
    encode_upoly,
    parse_affine_word,
    parse_partition,
    parse_pure_tensor,
    parse_sign,
    parse_window,
)
from qschur.smallreps.combinatorics import std_tableaux
from qschur.smallreps.database import ReportArchiveSQLite
from qschur.smallreps.drinfeld import P_from_lambda, Q_from_lambda, central_scalar, s_lambda_a
from qschur.smallreps.exceptions import (
    ConsistencyError,
    DomainError,
    ParseError,
    UnsupportedInputError,
)
from qschur.smallreps.hecke import ev_a, murphy_basis_elt
from qschur.smallreps.tensor import Mutation, tensor_space
from qschur.smallreps.verify import (
    DEFAULT_R_MAX,
    Report,
    Status,
    SuiteConfig,
    verify_affine_hecke,
    verify_all,
    verify_commuting,
    verify_drinfeld,
    verify_eval_compat,
    verify_jm,
    verify_lemmas,
    verify_qgl,
    verify_ring,
)

SUITES = ("qgl", "hecke", "commuting", "eval-compat", "lemmas", "jm", "drinfeld", "ring", "all")
STATUS_COLORS = {Status.PASS: "green", Status.FAIL: "red", Status.REPORT_ONLY: "yellow"}


def _arg(parse):
    """Adapt a codec parser to argparse, which reports ArgumentTypeError as a usage error."""

    def wrapped(text: str):
        try:
            return parse(text)
        except ParseError as exc:
            raise argparse.ArgumentTypeError(exc.msg) from exc

    wrapped.__name__ = parse.__name__
    return wrapped


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of ``qschur-smallreps``."""
    parser = argparse.ArgumentParser(
        prog="qschur-smallreps",
        description="Exact computations and identity checks for small affine q-Schur modules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default WARNING).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run a verification suite.")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--n", type=int, default=None, help="Modulus (default 3).")
    verify.add_argument("--r", type=int, default=2, help="Rank (default 2).")
    verify.add_argument("--window", type=_arg(parse_window), default=None, help="LO..HI")
    verify.add_argument("--t-max", type=int, default=2)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--which", choices=["En", "Fn"], default="En")
    verify.add_argument("--r-max", type=int, default=DEFAULT_R_MAX)
    verify.add_argument(
        "--mutate",
        action="append",
        default=[],
        choices=[m.value for m in Mutation],
        help="Inject a defect in the tensor actions.",
    )
    verify.add_argument("--json", action="store_true", help="Emit JSON reports.")
    verify.add_argument("--no-timing", action="store_true", help="Report elapsed_ms as 0.")
    verify.add_argument("--archive", type=Path, default=None, help="Store reports in this file.")

    drinfeld = commands.add_parser("drinfeld", help="Drinfeld polynomials.")
    drinfeld_cmd = drinfeld.add_subparsers(dest="action", required=True)
    from_partition = drinfeld_cmd.add_parser("from-partition")
    from_partition.add_argument("--lambda", dest="lam", type=_arg(parse_partition), required=True)
    from_partition.add_argument("--n", type=int, required=True)
    from_partition.add_argument("--json", action="store_true")

    segments = commands.add_parser("segments", help="Multisegments.")
    segments_cmd = segments.add_subparsers(dest="action", required=True)
    seg_partition = segments_cmd.add_parser("from-partition")
    seg_partition.add_argument("--lambda", dest="lam", type=_arg(parse_partition), required=True)
    seg_partition.add_argument("--json", action="store_true")

    scalar = commands.add_parser("central-scalar", help="Central element eigenvalue.")
    scalar.add_argument("--lambda", dest="lam", type=_arg(parse_partition), required=True)
    scalar.add_argument("--t", type=int, required=True)
    scalar.add_argument("--sign", type=_arg(parse_sign), default=1)
    scalar.add_argument("--json", action="store_true")

    hecke = commands.add_parser("hecke", help="Finite Hecke algebra.")
    hecke_cmd = hecke.add_subparsers(dest="action", required=True)
    murphy = hecke_cmd.add_parser("murphy")
    murphy.add_argument("--lambda", dest="lam", type=_arg(parse_partition), required=True)
    murphy.add_argument("--json", action="store_true")
    evaluate = hecke_cmd.add_parser("ev", help="Evaluate an affine word in H(r).")
    evaluate.add_argument("--r", type=int, required=True)
    evaluate.add_argument("--word", type=_arg(parse_affine_word), required=True, help="T1 X2^-1")
    evaluate.add_argument("--json", action="store_true")

    tensor = commands.add_parser("tensor", help="Actions on the tensor space.")
    tensor_cmd = tensor.add_subparsers(dest="action", required=True)
    act = tensor_cmd.add_parser("act", help="Right action of an affine word on a pure tensor.")
    act.add_argument("--n", type=int, required=True)
    act.add_argument("--vector", type=_arg(parse_pure_tensor), required=True, help="w[3,1,2]")
    act.add_argument("--word", type=_arg(parse_affine_word), required=True)
    act.add_argument("--json", action="store_true")
    eps = tensor_cmd.add_parser("eps", help="Push a pure tensor into Omega_n^(x)r.")
    eps.add_argument("--n", type=int, required=True)
    eps.add_argument("--vector", type=_arg(parse_pure_tensor), required=True)
    eps.add_argument("--json", action="store_true")

    archive = commands.add_parser("archive", help="Inspect a report archive.")
    archive.add_argument("action", choices=["list", "clear"])
    archive.add_argument("--archive", type=Path, required=True)
    archive.add_argument("--json", action="store_true")
    return parser


def _suite_config(args: argparse.Namespace) -> SuiteConfig:
    return SuiteConfig(
        n=3 if args.n is None else args.n,
        r=args.r,
        window=args.window,
        t_max=args.t_max,
        seed=args.seed,
        mutations=[Mutation(m) for m in args.mutate],
        timing=not args.no_timing,
    )


def _run_suite(args: argparse.Namespace) -> list[Report]:
    cfg = _suite_config(args)
    suite = args.suite
    if suite == "drinfeld":
        n = args.r_max + 1 if args.n is None else args.n
        return [verify_drinfeld(cfg.replace(n=max(n, 2)), args.r_max)]
    if suite == "all":
        return verify_all(cfg, args.r_max)
    runners = {
        "qgl": verify_qgl,
        "hecke": verify_affine_hecke,
        "commuting": verify_commuting,
        "lemmas": verify_lemmas,
        "jm": verify_jm,
        "ring": verify_ring,
    }
    if suite == "eval-compat":
        return [verify_eval_compat(cfg, args.which)]
    return [runners[suite](cfg)]


def print_report(report: Report) -> None:
    """One colored table row per report, followed by its failures."""
    cprint(
        f"{report.suite:<16} {report.status.value:<12} {report.cases:>8} cases "
        f"{report.elapsed_ms:>8} ms",
        color=STATUS_COLORS[report.status],
        flush=True,
    )
    for failure in report.failures:
        print(f"  {failure.case}", flush=True)
        print(f"    lhs: {failure.lhs}", flush=True)
        print(f"    rhs: {failure.rhs}", flush=True)


def _emit_reports(reports: Sequence[Report], as_json: bool) -> None:
    if as_json and len(reports) == 1:
        print(reports[0].to_json(), flush=True)
    elif as_json:
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True), flush=True)
    else:
        for report in reports:
            print_report(report)


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = _run_suite(args)
    _emit_reports(reports, args.json)
    if args.archive is not None:
        archive = ReportArchiveSQLite(args.archive)
        for report in reports:
            archive.store_report(report)
    return 0 if all(report.passed for report in reports) else 1


def _cmd_drinfeld(args: argparse.Namespace) -> int:
    tuple_q = Q_from_lambda(args.lam, args.n)
    polys_p = P_from_lambda(args.lam, args.n)
    if args.json:
        payload = dict(encode_drinfeld(tuple_q), P=[encode_upoly(p) for p in polys_p])
        print(json.dumps(payload, sort_keys=True), flush=True)
    else:
        for i, poly in enumerate(tuple_q.polys, start=1):
            print(f"Q_{i}(u) = {poly}", flush=True)
        for j, poly in enumerate(polys_p, start=1):
            print(f"P_{j}(u) = {poly}", flush=True)
    return 0


def _cmd_segments(args: argparse.Namespace) -> int:
    ms = s_lambda_a(args.lam)
    if args.json:
        print(json.dumps(encode_multisegment(ms), sort_keys=True), flush=True)
    else:
        print(ms, flush=True)
    return 0


def _cmd_central_scalar(args: argparse.Namespace) -> int:
    value = central_scalar(args.lam, args.t, args.sign)
    if args.json:
        print(json.dumps(encode_laurent(value), sort_keys=True), flush=True)
    else:
        print(value, flush=True)
    return 0


def _cmd_hecke(args: argparse.Namespace) -> int:
    if args.action == "ev":
        element = ev_a(args.word, args.r)
        if args.json:
            print(json.dumps(encode_hecke(element), sort_keys=True), flush=True)
        else:
            print(element, flush=True)
        return 0
    tableaux = std_tableaux(args.lam)
    rows = [
        (s, t, murphy_basis_elt(args.lam, s, t)) for s in tableaux for t in tableaux
    ]
    if args.json:
        payload = [
            {"s": [list(row) for row in s.rows], "t": [list(row) for row in t.rows],
             "element": encode_hecke(x)}
            for s, t, x in rows
        ]
        print(json.dumps(payload, sort_keys=True), flush=True)
    else:
        for s, t, x in rows:
            print(f"x[{list(s.rows)}, {list(t.rows)}] = {x}", flush=True)
    return 0


def _cmd_tensor(args: argparse.Namespace) -> int:
    space = tensor_space(args.n, len(args.vector))
    v = space.basis(args.vector)
    if args.action == "act":
        image = space.apply_word(v, args.word)
    else:
        image = space.eps_a(v)
    if args.json:
        print(json.dumps(encode_tensor(image), sort_keys=True), flush=True)
    else:
        print(image, flush=True)
    return 0


def _cmd_archive(args: argparse.Namespace) -> int:
    archive = ReportArchiveSQLite(args.archive)
    if args.action == "clear":
        archive.clear()
        return 0
    _emit_reports_list(archive.load_all_reports(), args.json)
    return 0


def _emit_reports_list(reports: Sequence[Report], as_json: bool) -> None:
    if as_json:
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True), flush=True)
    else:
        for report in reports:
            print_report(report)


COMMANDS = {
    "verify": _cmd_verify,
    "drinfeld": _cmd_drinfeld,
    "segments": _cmd_segments,
    "central-scalar": _cmd_central_scalar,
    "hecke": _cmd_hecke,
    "tensor": _cmd_tensor,
    "archive": _cmd_archive,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and run the selected command.

    Returns
    -------
    int
        The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=getattr(logging, args.log_level))
    try:
        return COMMANDS[args.command](args)
    except (ParseError, DomainError, UnsupportedInputError) as exc:
        cprint(f"error: {exc.msg}", color="red", file=sys.stderr, flush=True)
        return 2
    except ValueError as exc:
        cprint(f"error: {exc}", color="red", file=sys.stderr, flush=True)
        return 2
    except ConsistencyError as exc:
        cprint(f"internal inconsistency: {exc.msg}", color="red", file=sys.stderr, flush=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
