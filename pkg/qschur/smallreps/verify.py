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
Verification suites. Every suite applies both sides of a family of identities to exact values
and collects the instances where they differ into a :class:`Report`.

Suites split their work into independent cases which run in a process pool when more than one
worker is configured through ``QSCHUR_WORKERS``.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import os
import random
import time
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Iterable, Optional, Sequence

from qschur.smallreps.combinatorics import (
    Partition,
    apply_to_tableau,
    d_of,
    dual_partition,
    enumerate_compositions,
    longest_element,
    partitions,
    std_tableaux,
    young_generators,
    young_subgroup,
)
from qschur.smallreps.drinfeld import (
    Multisegment,
    P_from_lambda,
    P_from_Q,
    Q_from_lambda,
    Q_from_segments_cor,
    Segment,
    central_scalar,
    is_dominant,
    multisegment_partition,
    partial_inverse,
    partial_map,
    product_identity,
    residue_power_sum,
    s_lambda_a,
)
from qschur.smallreps.exceptions import (
    ConsistencyError,
    DomainError,
    ParseError,
    UnsupportedInputError,
)
from qschur.smallreps.hecke import (
    Q2_MINUS_1,
    AffineLetter,
    AffineWord,
    HeckeElt,
    ev_a,
    hecke_inv_gen,
    in_ideal_above,
    murphy_basis,
    murphy_basis_elt,
    murphy_L,
    murphy_power,
    residue_congruence,
    star,
    superstandard_murphy,
    x_lambda,
    y_lambda,
)
from qschur.smallreps.ring import (
    ONE,
    ZERO,
    LaurentQA,
    Monomial,
    UPoly,
    poly_from_inverse_roots,
    q_pow,
    qbinom,
    qint,
)
from qschur.smallreps.tensor import (
    GenKind,
    GenLabel,
    Mutation,
    TensorElt,
    bar,
    tensor_space,
    u_lambda_j,
    weight_of,
)

WORKERS_ENV = "QSCHUR_WORKERS"
JM_MAX_RANK = 5
DEFAULT_R_MAX = 6
ROUND_TRIP_SAMPLES = 200


class Status(Enum):
    """Outcome of a suite."""

    PASS = "pass"
    FAIL = "fail"
    REPORT_ONLY = "report-only"


Failure = namedtuple("Failure", ["case", "lhs", "rhs"])
"""An identity instance whose two sides differ, both sides rendered as strings."""

CaseResult = namedtuple("CaseResult", ["checked", "failures"])


class Report:
    """
    Result of a verification suite.

    Attributes
    ----------
    suite : str
        Suite name.
    config : dict
        Parameters the suite ran with.
    cases : int
        Number of identity instances checked.
    failures : list[Failure]
        Instances whose sides differ.
    status : Status
        ``pass`` iff there are no failures, ``report-only`` for suites that never fail.
    elapsed_ms : int
        Wall time, 0 when timing is disabled.
    """

    def __init__(
        self,
        suite: str,
        config: dict,
        cases: int,
        failures: Sequence[Failure],
        status: Status,
        elapsed_ms: int = 0,
    ) -> None:
        self.suite = suite
        self.config = dict(config)
        self.cases = cases
        self.failures = [Failure(*f) for f in failures]
        self.status = Status(status)
        self.elapsed_ms = int(elapsed_ms)

    @property
    def passed(self) -> bool:
        """False only for a failed asserted suite."""
        return self.status is not Status.FAIL

    def to_dict(self) -> dict:
        """The JSON report object."""
        return {
            "suite": self.suite,
            "config": self.config,
            "cases": self.cases,
            "failures": [f._asdict() for f in self.failures],
            "status": self.status.value,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        """Deterministic JSON text."""
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Any) -> Report:
        """
        Rebuild a report from its JSON object.

        Raises
        ------
        ParseError
            If a field is missing or has the wrong type.
        """
        if not isinstance(data, dict):
            raise ParseError("A report must be a JSON object.")
        missing = {"suite", "config", "cases", "failures", "status", "elapsed_ms"} - set(data)
        if missing:
            raise ParseError(f"Report is missing the fields {sorted(missing)}.")
        try:
            failures = [Failure(f["case"], f["lhs"], f["rhs"]) for f in data["failures"]]
            return cls(
                str(data["suite"]),
                dict(data["config"]),
                int(data["cases"]),
                failures,
                Status(data["status"]),
                int(data["elapsed_ms"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"Malformed report: {exc}") from exc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"Report({self.suite!r}, {self.status.value}, cases={self.cases})"


def workers_from_env() -> int:
    """
    Worker count from ``QSCHUR_WORKERS``, 1 when unset.

    Raises
    ------
    ValueError
        If the variable is not a positive integer.
    """
    raw = os.environ.get(WORKERS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got '{raw}'.") from exc
    if value < 1:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got '{raw}'.")
    return value


class SuiteConfig:
    """
    Parameters shared by the suites.

    Parameters
    ----------
    n : int
        Modulus, ``n >= 2``.
    r : int
        Rank, ``r >= 1``.
    window : Optional[tuple[int, int]]
        Entries of the quantified pure tensors, ``[-n, 2n]`` by default. An empty window
        (``lo > hi``) is accepted; otherwise it must contain ``[1, n]``.
    t_max : int
        Largest power of the central elements.
    seed : int
        Seed of the randomized checks.
    workers : Optional[int]
        Process count, read from ``QSCHUR_WORKERS`` when None.
    mutations : Iterable[Mutation]
        Defects injected in the tensor actions.
    timing : bool
        Whether reports carry the elapsed time.

    Raises
    ------
    DomainError
        If a parameter is out of range.
    """

    # pylint: disable=too-many-instance-attributes,too-many-arguments

    def __init__(
        self,
        n: int = 3,
        r: int = 2,
        window: Optional[tuple[int, int]] = None,
        t_max: int = 2,
        seed: int = 0,
        workers: Optional[int] = None,
        mutations: Iterable[Mutation] = (),
        timing: bool = True,
    ) -> None:
        if n < 2:
            raise DomainError(f"n must be at least 2, got {n}.")
        if r < 1:
            raise DomainError(f"r must be at least 1, got {r}.")
        if t_max < 1:
            raise DomainError(f"t_max must be at least 1, got {t_max}.")
        window = (-n, 2 * n) if window is None else (int(window[0]), int(window[1]))
        if window[0] <= window[1] and not (window[0] <= 1 and window[1] >= n):
            raise DomainError(f"Window {window[0]}..{window[1]} must contain 1..{n}.")
        self.n = n
        self.r = r
        self.window = window
        self.t_max = t_max
        self.seed = seed
        self.workers = workers_from_env() if workers is None else workers
        if self.workers < 1:
            raise DomainError(f"Worker count must be positive, got {self.workers}.")
        self.mutations = frozenset(Mutation(m) for m in mutations)
        self.timing = timing

    def window_empty(self) -> bool:
        """True when no pure tensor is quantified."""
        return self.window[0] > self.window[1]

    def window_basis(self) -> list[tuple[int, ...]]:
        """Quantified index tuples."""
        if self.window_empty():
            return []
        lo, hi = self.window
        return list(itertools.product(range(lo, hi + 1), repeat=self.r))

    def to_dict(self) -> dict:
        """Report view of the configuration; the worker count is left out."""
        out = {
            "n": self.n,
            "r": self.r,
            "window": list(self.window),
            "t_max": self.t_max,
            "seed": self.seed,
        }
        if self.mutations:
            out["mutations"] = sorted(m.value for m in self.mutations)
        return out

    def replace(self, **changes) -> SuiteConfig:
        """A copy with some parameters changed."""
        params = {
            "n": self.n,
            "r": self.r,
            "window": self.window,
            "t_max": self.t_max,
            "seed": self.seed,
            "workers": self.workers,
            "mutations": self.mutations,
            "timing": self.timing,
        }
        if "n" in changes and "window" not in changes:
            params["window"] = None
        params.update(changes)
        return SuiteConfig(**params)


class _Checker:
    """Counts identity instances and records the failing ones."""

    def __init__(self) -> None:
        self.checked = 0
        self.failures: list[Failure] = []

    def equal(self, case: str, lhs: Any, rhs: Any) -> None:
        """Record one instance of ``lhs == rhs``."""
        self.checked += 1
        if lhs != rhs:
            self.failures.append(Failure(case, str(lhs), str(rhs)))

    def holds(self, case: str, value: bool, lhs: Any = "", rhs: Any = "") -> None:
        """Record one instance of a predicate."""
        self.checked += 1
        if not value:
            self.failures.append(Failure(case, str(lhs), str(rhs)))

    def result(self) -> CaseResult:
        """The counts gathered so far."""
        return CaseResult(self.checked, self.failures)


def _call(case: Callable[[], CaseResult]) -> CaseResult:
    return case()


def _run(
    suite: str,
    config: dict,
    cases: Sequence[Callable[[], CaseResult]],
    workers: int,
    timing: bool,
    report_only: bool = False,
) -> Report:
    logging.info("Running suite %s on %s cases", suite, len(cases))
    start = time.perf_counter()
    if workers > 1 and len(cases) > 1:
        logging.debug("Suite %s uses %s workers", suite, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_call, cases))
    else:
        results = [case() for case in cases]
    elapsed = int((time.perf_counter() - start) * 1000) if timing else 0
    checked = sum(res.checked for res in results)
    failures = [f for res in results for f in res.failures]
    if report_only:
        status = Status.REPORT_ONLY
        if failures:
            logging.warning("Suite %s disagrees on %s of %s cases", suite, len(failures), checked)
    else:
        status = Status.FAIL if failures else Status.PASS
    logging.info("Suite %s finished: %s (%s cases, %s ms)", suite, status.value, checked, elapsed)
    return Report(suite, config, checked, failures, status, elapsed)


def _w(idx: Sequence[int]) -> str:
    return "w[" + ",".join(str(i) for i in idx) + "]"


def _power(act, g, k: int, v):
    for _ in range(k):
        v = act(g, v)
    return v


def cartan_entry(i: int, j: int, n: int) -> int:
    """Entry ``c_ij`` of the Cartan matrix of affine type ``A_{n-1}``."""
    if i == j:
        return 2
    if n == 2:
        return -2
    if j == bar(i + 1, n) or i == bar(j + 1, n):
        return -1
    return 0


def _left_generators(n: int, t_max: int) -> list[GenLabel]:
    gens = []
    for i in range(1, n + 1):
        gens.extend(
            GenLabel(kind, i) for kind in (GenKind.E, GenKind.F, GenKind.KPLUS, GenKind.KMINUS)
        )
    for t in range(1, t_max + 1):
        gens.extend((GenLabel(GenKind.ZPLUS, t), GenLabel(GenKind.ZMINUS, t)))
    return gens


def _right_letters(r: int) -> list[AffineLetter]:
    letters = [AffineLetter("T", k, 1) for k in range(1, r)]
    for t in range(1, r + 1):
        letters.extend((AffineLetter("X", t, 1), AffineLetter("X", t, -1)))
    return letters


def _letter_name(h: AffineLetter) -> str:
    return f"{h.kind}{h.index}" + ("^-1" if h.power == -1 else "")


def _gen_name(g: GenLabel) -> str:
    return f"{GenKind(g.kind).value}{g.index}"


# ring


def _random_laurent(rng: random.Random, terms: int = 3) -> LaurentQA:
    out = {}
    for _ in range(rng.randint(0, terms)):
        key = (rng.randint(-2, 2), rng.randint(-3, 3))
        out[key] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return LaurentQA(out)


def _random_upoly(rng: random.Random, degree: int) -> UPoly:
    coeffs = [_random_laurent(rng) for _ in range(degree)]
    lead = LaurentQA.monomial(rng.choice([1, -1, 2, Fraction(1, 3)]), rng.randint(-2, 2),
                              rng.randint(-3, 3))
    return UPoly(coeffs + [lead])


def verify_ring(cfg: SuiteConfig, samples: int = 25) -> Report:
    """Ring axioms, q-integers, q-Pascal and exact division on seeded random values."""
    rng = random.Random(cfg.seed)
    chk = _Checker()
    for k in range(samples):
        x, y, z = (_random_laurent(rng) for _ in range(3))
        chk.equal(f"associativity #{k}", (x * y) * z, x * (y * z))
        chk.equal(f"commutativity #{k}", x * y, y * x)
        chk.equal(f"distributivity #{k}", x * (y + z), x * y + x * z)
        chk.equal(f"additive inverse #{k}", x - x, ZERO)
    q_minus = LaurentQA({(0, 1): 1, (0, -1): -1})
    for n in range(-6, 7):
        chk.equal(f"qint({n})", qint(n) * q_minus, q_pow(n) - q_pow(-n))
    for n in range(1, 9):
        for m in range(1, n):
            rhs = q_pow(m) * qbinom(n - 1, m) + q_pow(m - n) * qbinom(n - 1, m - 1)
            chk.equal(f"q-Pascal({n},{m})", qbinom(n, m), rhs)
    for k in range(samples):
        f = _random_upoly(rng, rng.randint(0, 4))
        g = _random_upoly(rng, rng.randint(0, 4))
        chk.equal(f"exact_divide #{k}", (f * g).exact_divide(g), f)
    for k in range(samples):
        roots = [
            Monomial(rng.choice([1, -1, 2]), rng.randint(-2, 2), rng.randint(-3, 3))
            for _ in range(rng.randint(0, 4))
        ]
        shuffled = list(roots)
        rng.shuffle(shuffled)
        chk.equal(f"root order #{k}", poly_from_inverse_roots(roots),
                  poly_from_inverse_roots(shuffled))
    result = chk.result()
    return _run("ring", cfg.to_dict(), [lambda: result], 1, cfg.timing)


# quantum affine gl_n


def _qgl_case(n: int, r: int, mutations: frozenset, t_max: int, idx: tuple) -> CaseResult:
    # pylint: disable=too-many-locals,too-many-branches
    space = tensor_space(n, r, mutations)
    act = space.act_left
    v = space.basis(idx)
    name = _w(idx)
    chk = _Checker()
    K = lambda i: GenLabel(GenKind.KPLUS, i)  # noqa: E731
    Kinv = lambda i: GenLabel(GenKind.KMINUS, i)  # noqa: E731
    E = lambda i: GenLabel(GenKind.E, i)  # noqa: E731
    F = lambda i: GenLabel(GenKind.F, i)  # noqa: E731
    indices = range(1, n + 1)

    for i in indices:
        chk.equal(f"QGL1 K{i}K{i}^-1 on {name}", act(K(i), act(Kinv(i), v)), v)
        chk.equal(f"QGL1 K{i}^-1K{i} on {name}", act(Kinv(i), act(K(i), v)), v)
        for j in indices:
            if i < j:
                chk.equal(f"QGL1 K{i}K{j} on {name}", act(K(i), act(K(j), v)),
                          act(K(j), act(K(i), v)))
    for i in indices:
        for j in indices:
            exp = int(i == j) - int(i == bar(j + 1, n))
            chk.equal(f"QGL2 K{i}E{j} on {name}", act(K(i), act(E(j), v)),
                      act(E(j), act(K(i), v)).scale(q_pow(exp)))
            chk.equal(f"QGL2 K{i}F{j} on {name}", act(K(i), act(F(j), v)),
                      act(F(j), act(K(i), v)).scale(q_pow(-exp)))
    weight = weight_of(idx, n)
    for i in indices:
        for j in indices:
            lhs = act(E(i), act(F(j), v)) - act(F(j), act(E(i), v))
            if i == j:
                rhs = v.scale(qint(weight[i - 1] - weight[bar(i + 1, n) - 1]))
            else:
                rhs = space.zero()
            chk.equal(f"QGL3 E{i}F{j} on {name}", lhs, rhs)
    for label, gen in (("QGL4", E), ("QGL5", F)):
        for i in indices:
            for j in indices:
                if i == j:
                    continue
                m = 1 - cartan_entry(i, j, n)
                total = space.zero()
                for a in range(m + 1):
                    term = _power(act, gen(i), a, act(gen(j), _power(act, gen(i), m - a, v)))
                    total = total + term.scale(qbinom(m, a).scale((-1) ** a))
                chk.equal(f"{label} i={i} j={j} on {name}", total, space.zero())
    zs = [
        GenLabel(kind, t)
        for t in range(1, t_max + 1)
        for kind in (GenKind.ZPLUS, GenKind.ZMINUS)
    ]
    for z1, z2 in itertools.combinations(zs, 2):
        chk.equal(f"QGL6 {_gen_name(z1)}{_gen_name(z2)} on {name}", act(z1, act(z2, v)),
                  act(z2, act(z1, v)))
    for z in zs:
        for i in indices:
            for label, g in (("QGL7", K(i)), ("QGL7", Kinv(i)), ("QGL8", E(i)), ("QGL8", F(i))):
                chk.equal(f"{label} {_gen_name(z)}{_gen_name(g)} on {name}", act(z, act(g, v)),
                          act(g, act(z, v)))
    if r > 1:
        for g in _left_generators(n, t_max):
            chk.equal(f"coproduct {_gen_name(g)} on {name}", act(g, v), space.act_left_split(g, v))
    return chk.result()


def verify_qgl(cfg: SuiteConfig) -> Report:
    """
    Defining relations of quantum affine ``gl_n`` as operator identities on every pure tensor of
    the window, and agreement of the iterated coproduct with its two-fold splitting.
    """
    cases = [
        partial(_qgl_case, cfg.n, cfg.r, cfg.mutations, cfg.t_max, idx)
        for idx in cfg.window_basis()
    ]
    return _run("qgl", cfg.to_dict(), cases, cfg.workers, cfg.timing)


# affine Hecke algebra


def _affine_case(n: int, r: int, mutations: frozenset, idx: tuple) -> CaseResult:
    space = tensor_space(n, r, mutations)
    v = space.basis(idx)
    name = _w(idx)
    chk = _Checker()

    def act(letters: Sequence[AffineLetter], vec: TensorElt) -> TensorElt:
        for h in letters:
            vec = space.act_right(h, vec)
        return vec

    T = lambda k: AffineLetter("T", k, 1)  # noqa: E731
    X = lambda t, p=1: AffineLetter("X", t, p)  # noqa: E731
    for k in range(1, r):
        chk.equal(f"quadratic T{k} on {name}", act([T(k), T(k)], v),
                  act([T(k)], v).scale(Q2_MINUS_1) + v.scale(q_pow(2)))
        chk.equal(f"T{k}X{k}T{k} on {name}", act([T(k), X(k), T(k)], v),
                  act([X(k + 1)], v).scale(q_pow(2)))
        for t in range(1, r + 1):
            if t in (k, k + 1):
                continue
            for p in (1, -1):
                chk.equal(f"T{k}X{t}^{p} on {name}", act([T(k), X(t, p)], v),
                          act([X(t, p), T(k)], v))
    for k in range(1, r - 1):
        chk.equal(f"braid T{k}T{k + 1} on {name}", act([T(k), T(k + 1), T(k)], v),
                  act([T(k + 1), T(k), T(k + 1)], v))
    for k, l in itertools.combinations(range(1, r), 2):
        if l - k >= 2:
            chk.equal(f"far T{k}T{l} on {name}", act([T(k), T(l)], v), act([T(l), T(k)], v))
    for t in range(1, r + 1):
        chk.equal(f"X{t}X{t}^-1 on {name}", act([X(t), X(t, -1)], v), v)
        chk.equal(f"X{t}^-1X{t} on {name}", act([X(t, -1), X(t)], v), v)
    for s, t in itertools.combinations(range(1, r + 1), 2):
        for p1, p2 in itertools.product((1, -1), repeat=2):
            chk.equal(f"X{s}^{p1}X{t}^{p2} on {name}", act([X(s, p1), X(t, p2)], v),
                      act([X(t, p2), X(s, p1)], v))
    return chk.result()


def _hecke_internal_case(r: int) -> CaseResult:
    """The presentation inside ``H(r)`` and its image under the evaluation map."""
    chk = _Checker()
    one = HeckeElt.identity(r)
    T = lambda i: HeckeElt.generator(i, r)  # noqa: E731
    for i in range(1, r):
        chk.equal(f"H({r}) quadratic T{i}", T(i) * T(i),
                  T(i).scale(Q2_MINUS_1) + one.scale(q_pow(2)))
        chk.equal(f"H({r}) T{i}T{i}^-1", T(i) * hecke_inv_gen(i, r), one)
        chk.equal(f"H({r}) T{i}^-1T{i}", hecke_inv_gen(i, r) * T(i), one)
    for i in range(1, r - 1):
        chk.equal(f"H({r}) braid T{i}T{i + 1}", T(i) * T(i + 1) * T(i), T(i + 1) * T(i) * T(i + 1))
    for i, j in itertools.combinations(range(1, r), 2):
        if j - i >= 2:
            chk.equal(f"H({r}) far T{i}T{j}", T(i) * T(j), T(j) * T(i))

    def ev(*letters: AffineLetter, scalar: LaurentQA = ONE) -> HeckeElt:
        return ev_a(AffineWord(letters, scalar), r)

    Tl = lambda k: AffineLetter("T", k, 1)  # noqa: E731
    Xl = lambda t, p=1: AffineLetter("X", t, p)  # noqa: E731
    for k in range(1, r):
        chk.equal(f"ev_a T{k}X{k}T{k}", ev(Tl(k), Xl(k), Tl(k)), ev(Xl(k + 1), scalar=q_pow(2)))
        chk.equal(f"ev_a quadratic T{k}", ev(Tl(k), Tl(k)),
                  ev(Tl(k), scalar=Q2_MINUS_1) + ev(scalar=q_pow(2)))
        for t in range(1, r + 1):
            if t not in (k, k + 1):
                chk.equal(f"ev_a T{k}X{t}", ev(Tl(k), Xl(t)), ev(Xl(t), Tl(k)))
    for t in range(1, r + 1):
        chk.equal(f"ev_a X{t}X{t}^-1", ev(Xl(t), Xl(t, -1)), one)
        chk.equal(f"ev_a X{t}^-1X{t}", ev(Xl(t, -1), Xl(t)), one)
    for s, t in itertools.combinations(range(1, r + 1), 2):
        chk.equal(f"ev_a X{s}X{t}", ev(Xl(s), Xl(t)), ev(Xl(t), Xl(s)))
    return chk.result()


def verify_affine_hecke(cfg: SuiteConfig) -> Report:
    """
    The affine Hecke presentation for the right action on the window, and inside ``H(r)``
    directly and through the evaluation map.
    """
    cases = [partial(_hecke_internal_case, cfg.r)]
    cases.extend(
        partial(_affine_case, cfg.n, cfg.r, cfg.mutations, idx) for idx in cfg.window_basis()
    )
    return _run("affine-hecke", cfg.to_dict(), cases, cfg.workers, cfg.timing)


# commuting actions


def _commuting_case(n: int, r: int, mutations: frozenset, t_max: int, idx: tuple) -> CaseResult:
    space = tensor_space(n, r, mutations)
    v = space.basis(idx)
    chk = _Checker()
    for g in _left_generators(n, t_max):
        for h in _right_letters(r):
            lhs = space.act_left(g, space.act_right(h, v))
            rhs = space.act_right(h, space.act_left(g, v))
            chk.equal(f"{_gen_name(g)} vs {_letter_name(h)} on {_w(idx)}", lhs, rhs)
    return chk.result()


def verify_commuting(cfg: SuiteConfig) -> Report:
    """Every left generator commutes with every right generator on the window."""
    cases = [
        partial(_commuting_case, cfg.n, cfg.r, cfg.mutations, cfg.t_max, idx)
        for idx in cfg.window_basis()
    ]
    return _run("commuting", cfg.to_dict(), cases, cfg.workers, cfg.timing)


# evaluation maps


def _eval_case(n: int, r: int, mutations: frozenset, which: str, idx: tuple) -> CaseResult:
    space = tensor_space(n, r, mutations)
    v = space.basis(idx)
    chk = _Checker()
    if which == "En":
        lhs = space.eps_a(space.act_left(GenLabel(GenKind.E, n), v))
        rhs = space.apply_ev_en(v)
    else:
        lhs = space.eps_a(space.act_left(GenLabel(GenKind.F, n), v))
        rhs = space.apply_ev_fn(v)
    chk.equal(f"{which} on {_w(idx)}", lhs, rhs)
    return chk.result()


def verify_eval_compat(cfg: SuiteConfig, which: str = "En") -> Report:
    """
    Compare ``eps_a`` after ``E_n`` (or ``F_n``) with the evaluation image on every basis vector
    of ``Omega_n^(x)r``. The ``F_n`` comparison is report-only.
    """
    if which not in ("En", "Fn"):
        raise DomainError(f"Unknown evaluation check {which}, expected En or Fn.")
    space = tensor_space(cfg.n, cfg.r, cfg.mutations)
    cases = [
        partial(_eval_case, cfg.n, cfg.r, cfg.mutations, which, idx)
        for idx in space.finite_basis()
    ]
    config = dict(cfg.to_dict(), which=which)
    return _run(
        f"eval-compat-{which}", config, cases, cfg.workers, cfg.timing, report_only=which == "Fn"
    )


# closed formulas


def _ttu_rhs(space, lam: tuple, k: int) -> TensorElt:
    total = space.basis(u_lambda_j(lam, k + 1)).scale(q_pow(k))
    for s in range(1, k + 1):
        coeff = Q2_MINUS_1 * q_pow(2 * k - s - 1)
        total = total + space.basis(u_lambda_j(lam, s)).scale(coeff)
    return total


def _ttg_rhs(space, lam: tuple, k: int, tail: tuple) -> TensorElt:
    rest = tuple(value for value in range(2, k) for _ in range(lam[value - 1]))
    total = space.zero()
    for s in range(1, lam[0] + 1):
        idx = (1,) * (s - 1) + (k,) + (1,) * (lam[0] - s) + rest + tail
        total = total + space.basis(idx).scale(q_pow(1 - s))
    return total


def _lemma_case(n: int, r: int, mutations: frozenset, lam: tuple) -> CaseResult:
    space = tensor_space(n, r, mutations)
    chk = _Checker()
    for k in range(1, lam[0]):
        v = space.basis(u_lambda_j(lam, 1))
        for i in range(1, k + 1):
            v = space.act_right(AffineLetter("T", i, 1), v)
        chk.equal(f"u-lemma lambda={lam} k={k}", v, _ttu_rhs(space, lam, k))
    for k in range(2, n + 1):
        prefix = tuple(value for value in range(1, k) for _ in range(lam[value - 1]))
        for tail in itertools.product(range(k, n + 1), repeat=r - len(prefix)):
            lhs = space.apply_fk(k, space.basis(prefix + tail))
            chk.equal(f"f-lemma lambda={lam} k={k} tail={tail}", lhs,
                      _ttg_rhs(space, lam, k, tail))
    return chk.result()


def _central_case(n: int, r: int, mutations: frozenset, t_max: int, idx: tuple) -> CaseResult:
    space = tensor_space(n, r, mutations)
    v = space.basis(idx)
    chk = _Checker()
    for t in range(1, t_max + 1):
        for kind, power in ((GenKind.ZPLUS, 1), (GenKind.ZMINUS, -1)):
            rhs = space.zero()
            for s in range(1, r + 1):
                part = v
                for _ in range(t):
                    part = space.act_right(AffineLetter("X", s, power), part)
                rhs = rhs + part
            chk.equal(f"power sum {kind.value}{t} on {_w(idx)}",
                      space.act_left(GenLabel(kind, t), v), rhs)
    return chk.result()


def verify_lemmas(cfg: SuiteConfig) -> Report:
    """
    Closed formulas against direct operator application: ``u_(lambda,1) T_1 ... T_k``, the
    nested q-commutators ``f_k`` on ``omega_1^lambda_1 ... omega_(k-1)^lambda_(k-1) omega_j``,
    and the central elements as power sums of the ``X_s``.
    """
    cases = [
        partial(_lemma_case, cfg.n, cfg.r, cfg.mutations, lam)
        for lam in enumerate_compositions(cfg.n, cfg.r)
    ]
    cases.extend(
        partial(_central_case, cfg.n, cfg.r, cfg.mutations, cfg.t_max, idx)
        for idx in cfg.window_basis()
    )
    return _run("lemmas", cfg.to_dict(), cases, cfg.workers, cfg.timing)


# Murphy calculus


def _jm_basis_case(r: int) -> CaseResult:
    chk = _Checker()
    for i, j in itertools.combinations(range(1, r + 1), 2):
        chk.equal(f"L{i}L{j}", murphy_L(i, r) * murphy_L(j, r), murphy_L(j, r) * murphy_L(i, r))
    det = murphy_basis(r).transition_determinant()
    logging.info("Murphy basis of H(%s): transition determinant %s", r, det)
    chk.holds(f"Murphy basis of H({r}) is a basis", not det.is_zero(), det, "nonzero")
    return chk.result()


def _jm_case(r: int, t_max: int, lam: Partition) -> CaseResult:
    chk = _Checker()
    tableaux = std_tableaux(lam)
    for s_tab in tableaux:
        for t_tab in tableaux:
            chk.equal(f"star x_st lambda={tuple(lam)}",
                      star(murphy_basis_elt(lam, s_tab, t_tab)),
                      murphy_basis_elt(lam, t_tab, s_tab))
    x = x_lambda(lam)
    name = tuple(lam)
    for t_tab in tableaux:
        chk.equal(f"t^lambda d(t) lambda={name}", apply_to_tableau(lam, d_of(t_tab)), t_tab.rows)
    chk.equal(f"x_tt lambda={name}", superstandard_murphy(lam), x)
    w0 = longest_element(lam)
    chk.equal(f"longest element lambda={name}", w0.length, sum(p * (p - 1) // 2 for p in lam))
    chk.equal(f"longest element lambda={name} is maximal",
              w0, max(young_subgroup(lam), key=lambda w: w.length))
    y = y_lambda(lam)
    for i in young_generators(lam):
        chk.equal(f"x_lambda T{i} lambda={name}", x.times_generator(i), x.scale(q_pow(2)))
        chk.equal(f"y_lambda T{i} lambda={name}", y.times_generator(i), -y)
    for t in range(1, t_max + 1):
        for sign in (1, -1):
            for s in range(1, r + 1):
                chk.holds(f"residue congruence lambda={tuple(lam)} s={s} t={sign * t}",
                          residue_congruence(lam, s, t, sign))
            total = HeckeElt(r)
            for s in range(1, r + 1):
                total = total + x * murphy_power(s, r, sign * t)
            diff = total - x.scale(central_scalar(lam, t, sign))
            chk.holds(f"central congruence lambda={tuple(lam)} t={sign * t}",
                      in_ideal_above(lam, diff), diff, "0 mod higher shapes")
    return chk.result()


def verify_jm(cfg: SuiteConfig) -> Report:
    """
    Residue and central-element congruences of ``x_lambda`` modulo higher shapes for every
    ``lambda`` of ``r``, the cellular anti-involution on the Murphy basis and its transition
    determinant.

    Raises
    ------
    UnsupportedInputError
        If ``r`` exceeds the cost guard.
    """
    if cfg.r > JM_MAX_RANK:
        raise UnsupportedInputError(
            f"verify jm is limited to r <= {JM_MAX_RANK}: H({cfg.r}) has dimension "
            f"{math.factorial(cfg.r)} and the Murphy elimination grows accordingly."
        )
    cases = [partial(_jm_basis_case, cfg.r)]
    cases.extend(partial(_jm_case, cfg.r, cfg.t_max, lam) for lam in partitions(cfg.r))
    config = {"r": cfg.r, "t_max": cfg.t_max}
    return _run("jm", config, cases, cfg.workers, cfg.timing)


# Drinfeld polynomials


def _drinfeld_case(n: int, lam: Partition) -> CaseResult:
    chk = _Checker()
    name = f"lambda={tuple(lam)}"
    try:
        tuple_q = Q_from_lambda(lam, n)
    except ConsistencyError as exc:
        chk.holds(f"recursion vs segments {name}", False, exc.msg, Q_from_segments_cor(lam, n))
        return chk.result()
    chk.equal(f"recursion vs segments {name}", tuple_q, Q_from_segments_cor(lam, n))
    lhs, rhs = product_identity(lam, n)
    chk.equal(f"product identity {name}", lhs, rhs)
    dominant = is_dominant(tuple_q)
    chk.holds(f"dominance {name}", dominant, tuple_q, "dominant")
    if dominant:
        chk.equal(f"P recovery {name}", [str(p) for p in P_from_Q(tuple_q)],
                  [str(p) for p in P_from_lambda(lam, n)])
    chk.equal(f"segments to tuple {name}", partial_map(s_lambda_a(lam), n), tuple_q)
    chk.equal(f"segment partition {name}", multisegment_partition(s_lambda_a(lam)),
              dual_partition(lam))
    chk.equal(f"degree sum {name}", sum(tuple_q.degrees), lam.size)
    for t in range(1, 4):
        for sign in (1, -1):
            chk.equal(f"central scalar {name} t={sign * t}", central_scalar(lam, t, sign),
                      residue_power_sum(lam, t, sign))
    return chk.result()


def random_multisegment(rng: random.Random, max_total: int) -> Multisegment:
    """A multisegment of total length ``1..max_total`` with random monomial centers."""
    total = rng.randint(1, max_total)
    segments = []
    while total:
        length = rng.randint(1, total)
        total -= length
        center = Monomial(rng.choice([1, -1, 2, Fraction(1, 2)]), rng.randint(-2, 2),
                          rng.randint(-4, 4))
        segments.append(Segment(center, length))
    return Multisegment(segments)


def _round_trip_case(n: int, seed: int, samples: int) -> CaseResult:
    rng = random.Random(seed)
    chk = _Checker()
    for k in range(samples):
        ms = random_multisegment(rng, min(5, n - 1))
        chk.equal(f"round trip #{k}", partial_inverse(partial_map(ms, n)), ms)
    return chk.result()


def verify_drinfeld(cfg: SuiteConfig, r_max: int = DEFAULT_R_MAX) -> Report:
    """
    Closed-form Drinfeld tuples of every partition of ``r <= r_max`` against each other and
    against the segment description, central scalars against residue sums, and the round trip
    through the multisegment map on seeded random multisegments.

    Raises
    ------
    DomainError
        If ``n <= r_max``.
    """
    if cfg.n <= r_max:
        raise DomainError(f"verify drinfeld needs n > r_max, got n={cfg.n}, r_max={r_max}.")
    cases = [
        partial(_drinfeld_case, cfg.n, lam) for r in range(1, r_max + 1) for lam in partitions(r)
    ]
    cases.append(partial(_round_trip_case, cfg.n, cfg.seed, ROUND_TRIP_SAMPLES))
    config = {"n": cfg.n, "r_max": r_max, "seed": cfg.seed}
    return _run("drinfeld", config, cases, cfg.workers, cfg.timing)


def verify_all(cfg: SuiteConfig, r_max: int = DEFAULT_R_MAX) -> list[Report]:
    """
    Every suite in turn. The Drinfeld suite runs with ``n = max(n, r_max + 1)`` and the Murphy
    suite is skipped above its cost guard.
    """
    reports = [
        verify_ring(cfg),
        verify_qgl(cfg),
        verify_affine_hecke(cfg),
        verify_commuting(cfg),
        verify_eval_compat(cfg, "En"),
        verify_eval_compat(cfg, "Fn"),
        verify_lemmas(cfg),
    ]
    if cfg.r <= JM_MAX_RANK:
        reports.append(verify_jm(cfg))
    else:
        logging.warning("Skipping verify jm for r=%s above %s", cfg.r, JM_MAX_RANK)
    reports.append(verify_drinfeld(cfg.replace(n=max(cfg.n, r_max + 1)), r_max))
    return reports
