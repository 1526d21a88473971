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
Compositions, partitions, permutations of ``{1..r}`` and standard tableaux.

Permutations are stored in one-line notation and multiplied left to right: ``w * v`` first
applies ``w`` and then ``v``. With this convention ``t = t^lambda d(t)`` literally: ``d(t)``
applied entry by entry to the superstandard tableau gives ``t``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from qschur.smallreps.exceptions import DomainError
from qschur.smallreps.ring import Monomial

Composition = Tuple[int, ...]


def as_composition(parts: Iterable[int], n: int | None = None) -> Composition:
    """
    Validate a composition, padding it with trailing zeros to length ``n`` when given.

    Raises
    ------
    DomainError
        If a part is negative or the composition has more than ``n`` parts.
    """
    values = tuple(int(p) for p in parts)
    if any(p < 0 for p in values):
        raise DomainError(f"Composition parts must be nonnegative, got {values}.")
    if n is not None:
        if len(values) > n and any(values[n:]):
            raise DomainError(f"Composition {values} has more than {n} parts.")
        values = (values + (0,) * n)[:n]
    return values


def enumerate_compositions(n: int, r: int) -> list[Composition]:
    """
    All compositions of ``r`` into ``n`` nonnegative parts.

    The order is descending lexicographic, so ``(r, 0, ..., 0)`` comes first. There are
    ``C(r+n-1, n-1)`` of them.
    """
    if n < 1 or r < 0:
        raise DomainError(f"Compositions need n >= 1 and r >= 0, got n={n}, r={r}.")
    if n == 1:
        return [(r,)]
    out = []
    for first in range(r, -1, -1):
        for rest in enumerate_compositions(n - 1, r - first):
            out.append((first,) + rest)
    return out


class Partition(tuple):
    """
    A partition: a weakly decreasing tuple of positive parts. Trailing zeros are dropped on
    construction, the number of nonzero parts is ``len(self)``.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(p <= 0 for p in values):
            raise DomainError(f"Partition parts must be positive, got {tuple(values)}.")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise DomainError(f"Partition parts must be weakly decreasing, got {tuple(values)}.")
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        """The integer ``r`` being partitioned."""
        return sum(self)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self)

    def part(self, i: int) -> int:
        """The 1-based part ``lambda_i``, zero beyond the last part."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> list[tuple[int, int]]:
        """Cells ``(row, column)`` of the Young diagram, 1-based, row by row."""
        return [(i, j) for i, row in enumerate(self, start=1) for j in range(1, row + 1)]

    def padded(self, n: int) -> Composition:
        """This partition as a composition of length ``n``."""
        return as_composition(self, n)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def partitions(r: int) -> list[Partition]:
    """All partitions of ``r`` in descending lexicographic order."""

    def _gen(rest: int, cap: int) -> Iterable[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in _gen(rest - first, first):
                yield (first,) + tail

    if r < 0:
        raise DomainError(f"Cannot partition a negative integer {r}.")
    return [Partition(p) for p in _gen(r, r)]


def dual_partition(lam: Partition) -> Partition:
    """The conjugate partition, ``lambda'_i = #{j : lambda_j >= i}``."""
    width = lam[0] if lam else 0
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, width + 1))


def dominance_le(mu: Partition, lam: Partition) -> bool:
    """
    True iff ``mu`` is dominated by ``lam``: every partial sum of ``mu`` is at most the
    corresponding partial sum of ``lam``.

    Raises
    ------
    DomainError
        If the two partitions have different sizes.
    """
    if mu.size != lam.size:
        raise DomainError(f"Dominance compares partitions of one size, got {mu} and {lam}.")
    mu_sums = itertools.accumulate(mu.padded(max(len(mu), len(lam), 1)))
    lam_sums = itertools.accumulate(lam.padded(max(len(mu), len(lam), 1)))
    return all(x <= y for x, y in zip(mu_sums, lam_sums))


def dominates_strictly(mu: Partition, lam: Partition) -> bool:
    """``mu`` strictly dominates ``lam``."""
    return mu != lam and dominance_le(lam, mu)


class Permutation(tuple):
    """
    A permutation of ``{1..r}`` in one-line notation, ``w[k-1]`` being the image of ``k``.

    Products compose left to right, ``(w * v)(k) = v(w(k))``.
    """

    def __new__(cls, images: Iterable[int]) -> Permutation:
        values = tuple(int(x) for x in images)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DomainError(f"{values} is not a permutation of 1..{len(values)}.")
        return super().__new__(cls, values)

    @classmethod
    def identity(cls, r: int) -> Permutation:
        """The identity of ``S_r``."""
        return cls(range(1, r + 1))

    @classmethod
    def simple(cls, i: int, r: int) -> Permutation:
        """The simple transposition ``s_i`` swapping ``i`` and ``i+1``."""
        if not 1 <= i < r:
            raise DomainError(f"s_{i} is not a simple transposition of S_{r}.")
        images = list(range(1, r + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @property
    def rank(self) -> int:
        """The ``r`` of ``S_r``."""
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation) or len(other) != len(self):
            raise DomainError("Permutations must have the same rank to be multiplied.")
        return Permutation(other[x - 1] for x in self)

    def inverse(self) -> Permutation:
        """The inverse permutation."""
        images = [0] * len(self)
        for k, image in enumerate(self, start=1):
            images[image - 1] = k
        return Permutation(images)

    @property
    def length(self) -> int:
        """Coxeter length, the number of inversions."""
        return sum(1 for i, j in itertools.combinations(range(len(self)), 2) if self[i] > self[j])

    def times_simple(self, i: int) -> Permutation:
        """Return ``w * s_i``: the values ``i`` and ``i+1`` are exchanged."""
        return Permutation(i + 1 if x == i else (i if x == i + 1 else x) for x in self)

    def ascends_at(self, i: int) -> bool:
        """True iff ``l(w s_i) > l(w)``, i.e. the value ``i`` comes before ``i+1``."""
        return self.index(i) < self.index(i + 1)

    def reduced_word(self) -> tuple[int, ...]:
        """Indices ``(i_1, ..., i_k)`` with ``w = s_i1 * ... * s_ik`` and ``k = l(w)``."""
        return _reduced_word(tuple(self))

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


@lru_cache(maxsize=None)
def _reduced_word(images: tuple[int, ...]) -> tuple[int, ...]:
    w = Permutation(images)
    for i in range(1, len(images)):
        if not w.ascends_at(i):
            return _reduced_word(tuple(w.times_simple(i))) + (i,)
    return ()


def all_permutations(r: int) -> list[Permutation]:
    """``S_r`` in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, r + 1))]


def _blocks(lam: Sequence[int]) -> list[range]:
    blocks, start = [], 1
    for part in lam:
        blocks.append(range(start, start + part))
        start += part
    return blocks


def young_subgroup(lam: Sequence[int]) -> list[Permutation]:
    """
    Elements of the Young subgroup ``S_lambda`` of ``S_r``, ``r = |lambda|``.

    ``lam`` may be any composition; zero parts contribute nothing.
    """
    blocks = [b for b in _blocks(lam) if len(b) > 0]
    r = sum(lam)
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = [0] * r
        for block, perm in zip(blocks, choice):
            for k, image in zip(block, perm):
                images[k - 1] = image
        out.append(Permutation(images))
    return sorted(out) if r else [Permutation(())]


def young_generators(lam: Sequence[int]) -> list[int]:
    """Indices ``i`` such that ``s_i`` lies in ``S_lambda``."""
    return [i for block in _blocks(lam) for i in list(block)[:-1]]


def longest_element(lam: Sequence[int]) -> Permutation:
    """The longest element of ``S_lambda``: each block reversed."""
    images: list[int] = []
    for block in _blocks(lam):
        images.extend(reversed(block))
    return Permutation(images)


class StdTableau:
    """
    A standard tableau: a filling of a Young diagram by ``1..r`` increasing along rows and down
    columns.
    """

    __slots__ = ("shape", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.shape = Partition(len(row) for row in self.rows)
        r = self.shape.size
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, r + 1)):
            raise DomainError(f"Tableau {self.rows} is not filled by 1..{r}.")
        for row in self.rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise DomainError(f"Tableau {self.rows} does not increase along rows.")
        for i in range(len(self.rows) - 1):
            if any(self.rows[i][j] >= self.rows[i + 1][j] for j in range(len(self.rows[i + 1]))):
                raise DomainError(f"Tableau {self.rows} does not increase down columns.")

    def entry(self, row: int, col: int) -> int:
        """Entry in the 1-based cell ``(row, col)``."""
        return self.rows[row - 1][col - 1]

    def position(self, k: int) -> tuple[int, int]:
        """Cell ``(row, col)`` holding ``k``."""
        for i, row in enumerate(self.rows, start=1):
            if k in row:
                return (i, row.index(k) + 1)
        raise DomainError(f"{k} does not appear in {self.rows}.")

    def reading_word(self) -> tuple[int, ...]:
        """Entries read left to right along successive rows."""
        return tuple(x for row in self.rows for x in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StdTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __lt__(self, other: StdTableau) -> bool:
        return self.rows < other.rows

    def __repr__(self) -> str:
        return f"StdTableau({[list(row) for row in self.rows]})"


def superstandard_tableau(lam: Partition) -> StdTableau:
    """The tableau ``t^lambda`` filled by ``1..r`` along successive rows."""
    rows, start = [], 1
    for part in lam:
        rows.append(range(start, start + part))
        start += part
    return StdTableau(rows)


def residue(lam: Partition, s: int) -> Monomial:
    """
    Residue ``a q^(2(j-i))`` of the cell ``(i, j)`` holding ``s`` in ``t^lambda``.

    Raises
    ------
    DomainError
        If ``s`` is not in ``1..|lambda|``.
    """
    if not 1 <= s <= lam.size:
        raise DomainError(f"Residue index {s} is outside 1..{lam.size}.")
    i, j = superstandard_tableau(lam).position(s)
    return Monomial(1, 1, 2 * (j - i))


@lru_cache(maxsize=None)
def _std_tableaux(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    r = sum(shape)
    if r == 0:
        return ((),)
    out = []
    # the largest entry sits in a removable corner
    for i, part in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if part > below:
            smaller = list(shape)
            smaller[i] -= 1
            smaller_shape = tuple(p for p in smaller if p)
            for rows in _std_tableaux(smaller_shape):
                grown = [list(row) for row in rows]
                if i == len(grown):
                    grown.append([])
                grown[i].append(r)
                out.append(tuple(tuple(row) for row in grown))
    return tuple(sorted(out))


def std_tableaux(lam: Partition) -> list[StdTableau]:
    """All standard tableaux of shape ``lambda``, sorted by their rows."""
    return [StdTableau(rows) for rows in _std_tableaux(tuple(lam))]


def d_of(t: StdTableau) -> Permutation:
    """
    The permutation ``d(t)`` with ``t = t^lambda d(t)``: ``d(t)`` sends each entry of
    ``t^lambda`` to the entry of ``t`` in the same cell.

    ``d(t)`` is the minimal length representative of its coset ``S_lambda d(t)``.
    """
    return Permutation(t.reading_word())


def apply_to_tableau(lam: Partition, w: Permutation) -> tuple[tuple[int, ...], ...]:
    """Rows obtained by replacing every entry ``k`` of ``t^lambda`` with ``w(k)``."""
    return tuple(tuple(w(k) for k in row) for row in superstandard_tableau(lam).rows)
