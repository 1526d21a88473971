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
Segments, multisegments and Drinfeld polynomial tuples of small representations.

Inverse roots follow the convention of :func:`poly_from_inverse_roots`: a root list
``[r_1, ..., r_k]`` stands for ``(1 - r_1 u) ... (1 - r_k u)``, whose zeros in ``u`` are the
``r_i^-1``.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Iterable, Optional, Sequence

from qschur.smallreps.combinatorics import Partition, residue
from qschur.smallreps.exceptions import ConsistencyError, DomainError, UnsupportedInputError
from qschur.smallreps.ring import ONE, ZERO, LaurentQA, Monomial, UPoly, poly_from_inverse_roots


class Segment:
    """
    The segment ``[c; k)``: the progression ``c q^(-k+1), c q^(-k+3), ..., c q^(k-1)``.
    """

    __slots__ = ("center", "length")

    def __init__(self, center: Monomial, length: int) -> None:
        if not isinstance(center, Monomial):
            raise DomainError(f"Segment center must be a Monomial, got {center!r}.")
        if length < 1:
            raise DomainError(f"Segment length must be at least 1, got {length}.")
        self.center = center
        self.length = int(length)

    def sort_key(self):
        """Length descending, then the center."""
        return (-self.length, self.center.sort_key())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Segment):
            return NotImplemented
        return (self.center, self.length) == (other.center, other.length)

    def __lt__(self, other: Segment) -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash((self.center, self.length))

    def __repr__(self) -> str:
        return f"Segment({self.center!r}, {self.length})"

    def __str__(self) -> str:
        return f"[{self.center};{self.length})"


def segment_expand(seg: Segment) -> list[Monomial]:
    """The ``k`` monomials of ``[c; k)`` by increasing power of ``q``."""
    k = seg.length
    return [seg.center.shift_q(-k + 1 + 2 * t) for t in range(k)]


class Multisegment:
    """
    A multiset of segments kept in canonical order: length descending, then by center.

    The empty multisegment is allowed and stands for the empty product.
    """

    __slots__ = ("segments",)

    def __init__(self, segments: Iterable[Segment] = ()) -> None:
        self.segments = tuple(sorted(segments))

    @property
    def total(self) -> int:
        """Sum of the segment lengths."""
        return sum(seg.length for seg in self.segments)

    def __add__(self, other: Multisegment) -> Multisegment:
        return Multisegment(self.segments + other.segments)

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self) -> int:
        return hash(self.segments)

    def __repr__(self) -> str:
        return f"Multisegment({list(self.segments)!r})"

    def __str__(self) -> str:
        return " + ".join(str(seg) for seg in self.segments) if self.segments else "0"


def multisegment_partition(ms: Multisegment) -> Partition:
    """The segment lengths, sorted weakly decreasing."""
    return Partition(sorted((seg.length for seg in ms), reverse=True))


class DrinfeldTuple:
    """
    An ``n``-tuple of polynomials in ``u`` with constant term 1, optionally with the inverse
    roots of every entry.

    Parameters
    ----------
    polys : Sequence[UPoly]
        The polynomials ``Q_1, ..., Q_n``.
    factored : Optional[Sequence[Sequence[Monomial]]]
        Inverse roots of each polynomial, or None when only the expanded form is known.

    Raises
    ------
    DomainError
        If a constant term differs from 1, or the tuple is empty.
    ConsistencyError
        If a root list does not reproduce its polynomial.
    """

    __slots__ = ("polys", "factored")

    def __init__(
        self,
        polys: Sequence[UPoly],
        factored: Optional[Sequence[Sequence[Monomial]]] = None,
    ) -> None:
        polys = tuple(polys)
        if not polys:
            raise DomainError("A Drinfeld tuple needs at least one polynomial.")
        for k, poly in enumerate(polys, start=1):
            if poly.constant_term() != ONE:
                raise DomainError(f"Q_{k} = {poly} does not have constant term 1.")
        if factored is not None:
            factored = tuple(tuple(sorted(roots)) for roots in factored)
            if len(factored) != len(polys):
                raise DomainError("Factored form must list roots for every polynomial.")
            for k, (poly, roots) in enumerate(zip(polys, factored), start=1):
                if poly_from_inverse_roots(roots) != poly:
                    logging.error("Roots %s do not expand to Q_%s = %s", roots, k, poly)
                    raise ConsistencyError(f"Factored form of Q_{k} does not match {poly}.")
        self.polys = polys
        self.factored = factored

    @classmethod
    def from_roots(cls, roots: Sequence[Sequence[Monomial]]) -> DrinfeldTuple:
        """Build the tuple from the inverse roots of each entry."""
        return cls([poly_from_inverse_roots(r) for r in roots], roots)

    @property
    def n(self) -> int:
        """Number of polynomials."""
        return len(self.polys)

    @property
    def degrees(self) -> tuple[int, ...]:
        """``(deg Q_1, ..., deg Q_n)``."""
        return tuple(poly.degree for poly in self.polys)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DrinfeldTuple):
            return NotImplemented
        return self.polys == other.polys

    def __hash__(self) -> int:
        return hash(self.polys)

    def __repr__(self) -> str:
        return f"DrinfeldTuple({[str(p) for p in self.polys]})"


def partial_map(ms: Multisegment, n: int) -> DrinfeldTuple:
    """
    The tuple attached to a multisegment: with ``P_k`` the product of ``(1 - c u)`` over the
    segments ``[c; k)``, ``Q_i(u) = P_i(u q^(-i+1)) P_{i+1}(u q^(-i+2)) ... P_{n-1}(u q^(n-2i))``
    and ``Q_n = 1``.

    Raises
    ------
    DomainError
        If ``n`` does not exceed the total length.
    """
    if n <= ms.total:
        raise DomainError(f"The map from multisegments needs n > r, got n={n}, r={ms.total}.")
    roots = []
    for i in range(1, n + 1):
        roots_i = [
            seg.center.shift_q(seg.length - 2 * i + 1)
            for seg in ms
            if i <= seg.length <= n - 1
        ]
        roots.append(roots_i)
    return DrinfeldTuple.from_roots(roots)


def _check_parts(lam: Partition, n: int) -> None:
    if len(lam) > n:
        raise DomainError(f"Partition {lam} has more than {n} parts.")


def P_from_lambda(lam: Partition, n: int) -> list[UPoly]:
    """
    ``P_j(u)``, ``j = 1..n-1``, the product of ``(1 - a q^(2s-1-j) u)`` over
    ``lambda_{j+1} < s <= lambda_j``.
    """
    _check_parts(lam, n)
    return [poly_from_inverse_roots(_p_roots(lam, j)) for j in range(1, n)]


def _p_roots(lam: Partition, j: int) -> list[Monomial]:
    return [Monomial(1, 1, 2 * s - 1 - j) for s in range(lam.part(j + 1) + 1, lam.part(j) + 1)]


def Q_from_segments_cor(lam: Partition, n: int) -> DrinfeldTuple:
    """
    Tuple whose ``i``-th entry has its zeros in ``u`` on the segment
    ``[a^-1 q^(-lambda_i+2i-1); lambda_i)``; the inverse roots are their reciprocals.
    """
    _check_parts(lam, n)
    roots: list[list[Monomial]] = []
    for i in range(1, n + 1):
        k = lam.part(i)
        if k == 0:
            roots.append([])
            continue
        zeros = segment_expand(Segment(Monomial(1, -1, 2 * i - 1 - k), k))
        roots.append([zero.inverse() for zero in zeros])
    return DrinfeldTuple.from_roots(roots)


def Q_from_lambda(lam: Partition, n: int) -> DrinfeldTuple:
    """
    Drinfeld tuple of the small representation attached to ``lambda`` and ``a``.

    ``Q_m`` for the last nonzero part is a product over its cells, and
    ``Q_i(u) = P_i(u q^(-i+1)) Q_{i+1}(u q^2)`` for ``i < m``.

    The recursion is authoritative: its tuple, factored form included, is what this returns.
    :func:`Q_from_segments_cor` is computed independently from the segment zeros and only
    confirms it.

    Raises
    ------
    DomainError
        If ``lambda`` has more than ``n`` parts.
    ConsistencyError
        If the two descriptions disagree.
    """
    _check_parts(lam, n)
    m = len(lam)
    roots: list[list[Monomial]] = [[] for _ in range(n)]
    if m:
        roots[m - 1] = [Monomial(1, 1, 2 * (s - m)) for s in range(1, lam.part(m) + 1)]
        for i in range(m - 1, 0, -1):
            p_part = [root.shift_q(1 - i) for root in _p_roots(lam, i)]
            q_part = [root.shift_q(2) for root in roots[i]]
            roots[i - 1] = p_part + q_part
    result = DrinfeldTuple.from_roots(roots)
    expected = Q_from_segments_cor(lam, n)
    if result != expected:
        logging.error("Recursive tuple %s differs from segment tuple %s", result, expected)
        raise ConsistencyError(f"Drinfeld tuple of {lam} disagrees between both descriptions.")
    return result


def s_lambda_a(lam: Partition) -> Multisegment:
    """
    The multisegment with one ``[a q^(2k-1-i); i)`` for every ``i`` and every
    ``lambda_{i+1} < k <= lambda_i``.
    """
    segments = []
    for i in range(1, len(lam) + 1):
        for k in range(lam.part(i + 1) + 1, lam.part(i) + 1):
            segments.append(Segment(Monomial(1, 1, 2 * k - 1 - i), i))
    return Multisegment(segments)


def central_scalar(lam: Partition, t: int, sign: int) -> LaurentQA:
    """
    ``c_t^(+-)(lambda)``: the sum of ``(a q^(2(j-i)))^(+-t)`` over the cells ``(i, j)``.
    """
    if sign not in (1, -1):
        raise DomainError(f"Sign must be +1 or -1, got {sign}.")
    total = ZERO
    for i, j in lam.cells():
        total = total + Monomial(1, sign * t, sign * 2 * t * (j - i)).to_laurent()
    return total


def residue_power_sum(lam: Partition, t: int, sign: int) -> LaurentQA:
    """``sum_s residue(lambda, s)^(+-t)`` over ``s = 1..|lambda|``."""
    total = ZERO
    for s in range(1, lam.size + 1):
        total = total + (residue(lam, s) ** (sign * t)).to_laurent()
    return total


def product_identity(lam: Partition, n: int) -> tuple[UPoly, UPoly]:
    """
    Both sides of ``prod_i Q_i(u) = prod_cells (1 - a q^(2(j-i)) u)``.
    """
    lhs = UPoly([ONE])
    for poly in Q_from_lambda(lam, n).polys:
        lhs = lhs * poly
    rhs = poly_from_inverse_roots(Monomial(1, 1, 2 * (j - i)) for i, j in lam.cells())
    return lhs, rhs


def _ratio(Q: DrinfeldTuple, i: int) -> UPoly | None:
    num = Q.polys[i - 1].substitute_scale(Monomial(1, 0, i - 1))
    den = Q.polys[i].substitute_scale(Monomial(1, 0, i + 1))
    return num.exact_divide(den)


def is_dominant(Q: DrinfeldTuple) -> bool:
    """
    True iff every ``Q_i(q^(i-1) u) / Q_{i+1}(q^(i+1) u)`` is a polynomial.

    Raises
    ------
    UnsupportedInputError
        If a quotient exists only with coefficients outside the Laurent ring.
    """
    return all(_ratio(Q, i) is not None for i in range(1, Q.n))


def P_from_Q(Q: DrinfeldTuple) -> list[UPoly]:
    """
    The quotients ``Q_i(q^(i-1) u) / Q_{i+1}(q^(i+1) u)``, ``i = 1..n-1``.

    Raises
    ------
    DomainError
        If ``Q`` is not dominant.
    """
    out = []
    for i in range(1, Q.n):
        ratio = _ratio(Q, i)
        if ratio is None:
            raise DomainError(f"Drinfeld tuple is not dominant at position {i}.")
        out.append(ratio)
    return out


def partial_inverse(Q: DrinfeldTuple) -> Multisegment:
    """
    Recover the multisegment from a tuple with known inverse roots.

    The roots of ``P_i`` are those of ``Q_i(q^(i-1) u)`` less those of ``Q_{i+1}(q^(i+1) u)``,
    and each of them is the center of a segment of length ``i``.

    Raises
    ------
    UnsupportedInputError
        If the tuple has no factored form.
    DomainError
        If ``Q_n != 1`` or the tuple is not dominant.
    """
    if Q.factored is None:
        raise UnsupportedInputError("Recovering segments needs the factored form of the tuple.")
    if Q.polys[-1].degree != 0:
        raise DomainError(f"The last polynomial must be 1, got {Q.polys[-1]}.")
    segments = []
    for i in range(1, Q.n):
        upper = Counter(root.shift_q(i - 1) for root in Q.factored[i - 1])
        lower = Counter(root.shift_q(i + 1) for root in Q.factored[i])
        if lower - upper:
            raise DomainError(f"Drinfeld tuple is not dominant at position {i}.")
        for center, mult in sorted((upper - lower).items()):
            segments.extend(Segment(center, i) for _ in range(mult))
    return Multisegment(segments)
