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
The finite Hecke algebra ``H(r)`` on the ``T_w`` basis, Murphy operators and the Murphy basis,
the evaluation map from affine words, and membership in the ideal spanned by Murphy basis
elements of strictly dominant shapes.

The quadratic relation is ``(T_i + 1)(T_i - q^2) = 0``.
"""

from __future__ import annotations

import logging
import threading
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence

from sympy import QQ, symbols
from sympy.polys.matrices import DomainMatrix

from qschur.smallreps.combinatorics import (
    Partition,
    Permutation,
    StdTableau,
    all_permutations,
    d_of,
    dominates_strictly,
    partitions,
    residue,
    std_tableaux,
    superstandard_tableau,
    young_subgroup,
)
from qschur.smallreps.exceptions import DomainError
from qschur.smallreps.ring import ONE, ZERO, LaurentQA, Scalar, a_pow, q_pow

Q2_MINUS_1 = LaurentQA({(0, 2): 1, (0, 0): -1})
Q2 = q_pow(2)


class HeckeElt:
    """
    An element of ``H(r)``: a finitely supported combination of ``T_w``, ``w`` in ``S_r``,
    with ``LaurentQA`` coefficients.
    """

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Permutation, LaurentQA] | None = None) -> None:
        """
        Parameters
        ----------
        rank : int
            The ``r`` of ``H(r)``.
        terms : Mapping[Permutation, LaurentQA] | None
            Coefficients by permutation. Zero coefficients are dropped.

        Raises
        ------
        DomainError
            If a permutation has a rank other than ``rank``.
        """
        clean = {}
        for w, coeff in (terms or {}).items():
            w = w if isinstance(w, Permutation) else Permutation(w)
            if w.rank != rank:
                raise DomainError(f"{w} does not belong to S_{rank}.")
            coeff = LaurentQA.coerce(coeff)
            if coeff:
                clean[w] = coeff
        self.rank = rank
        self._terms = clean

    @classmethod
    def _wrap(cls, rank: int, terms: Dict[Permutation, LaurentQA]) -> HeckeElt:
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, w: Permutation) -> HeckeElt:
        """The basis element ``T_w``."""
        return cls._wrap(w.rank, {w: ONE})

    @classmethod
    def identity(cls, r: int) -> HeckeElt:
        """``T_e``"""
        return cls.basis(Permutation.identity(r))

    @classmethod
    def scalar(cls, value: LaurentQA | Scalar, r: int) -> HeckeElt:
        """``value * T_e``"""
        return cls(r, {Permutation.identity(r): LaurentQA.coerce(value)})

    @classmethod
    def generator(cls, i: int, r: int) -> HeckeElt:
        """``T_i = T_{s_i}``"""
        return cls.basis(Permutation.simple(i, r))

    def terms(self) -> list[tuple[Permutation, LaurentQA]]:
        """Terms sorted by permutation."""
        return sorted(self._terms.items())

    def coefficient(self, w: Permutation) -> LaurentQA:
        """Coefficient of ``T_w``."""
        return self._terms.get(w, ZERO)

    def support(self) -> list[Permutation]:
        """Permutations with a nonzero coefficient, sorted."""
        return sorted(self._terms)

    def is_zero(self) -> bool:
        """True for the zero element."""
        return not self._terms

    def _check_rank(self, other: HeckeElt) -> None:
        if other.rank != self.rank:
            raise DomainError(f"Cannot combine elements of H({self.rank}) and H({other.rank}).")

    def __add__(self, other: HeckeElt) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for w, coeff in other._terms.items():
            total = out.get(w, ZERO) + coeff
            if total:
                out[w] = total
            else:
                out.pop(w, None)
        return HeckeElt._wrap(self.rank, out)

    def __neg__(self) -> HeckeElt:
        return HeckeElt._wrap(self.rank, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: HeckeElt) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self + (-other)

    def scale(self, value: LaurentQA | Scalar) -> HeckeElt:
        """Multiply every coefficient by ``value``."""
        value = LaurentQA.coerce(value)
        if not value:
            return HeckeElt._wrap(self.rank, {})
        return HeckeElt._wrap(self.rank, {w: c * value for w, c in self._terms.items()})

    def times_generator(self, i: int) -> HeckeElt:
        """Right multiplication by ``T_i``."""
        if not 1 <= i < self.rank:
            raise DomainError(f"T_{i} is not a generator of H({self.rank}).")
        return HeckeElt._wrap(self.rank, _times_generator(self._terms, i))

    def __mul__(self, other: HeckeElt | LaurentQA | Scalar) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            if isinstance(other, (LaurentQA, int, Fraction)):
                return self.scale(other)
            return NotImplemented
        return hecke_mul(self, other)

    def __rmul__(self, other: LaurentQA | Scalar) -> HeckeElt:
        if isinstance(other, (LaurentQA, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def a_degrees(self) -> list[int]:
        """Exponents of ``a`` occurring in any coefficient."""
        return sorted({e for c in self._terms.values() for e in c.a_degrees()})

    def a_component(self, e_a: int) -> HeckeElt:
        """The part of every coefficient with ``a``-exponent ``e_a``."""
        out = {}
        for w, coeff in self._terms.items():
            part = coeff.a_component(e_a)
            if part:
                out[w] = part
        return HeckeElt._wrap(self.rank, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"HeckeElt({self.rank}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for w, coeff in self.terms():
            name = "T[" + ",".join(str(x) for x in w) + "]"
            pieces.append(name if coeff == ONE else f"({coeff})*{name}")
        return " + ".join(pieces)


def _times_generator(
    terms: Mapping[Permutation, LaurentQA], i: int
) -> Dict[Permutation, LaurentQA]:
    out: Dict[Permutation, LaurentQA] = {}

    def _acc(w: Permutation, coeff: LaurentQA) -> None:
        total = out.get(w, ZERO) + coeff
        if total:
            out[w] = total
        else:
            out.pop(w, None)

    for w, coeff in terms.items():
        ws = w.times_simple(i)
        if w.ascends_at(i):
            _acc(ws, coeff)
        else:
            _acc(w, coeff * Q2_MINUS_1)
            _acc(ws, coeff.shift(0, 2))
    return out


def hecke_mul(x: HeckeElt, y: HeckeElt) -> HeckeElt:
    """
    Product in ``H(r)``.

    Each ``T_w`` of ``y`` is expanded along a reduced word and applied with
    ``T_w T_s = T_ws`` when ``l(ws) > l(w)``, else ``(q^2-1) T_w + q^2 T_ws``.

    Raises
    ------
    DomainError
        If the ranks differ.
    """
    if x.rank != y.rank:
        raise DomainError(f"Cannot multiply elements of H({x.rank}) and H({y.rank}).")
    result = HeckeElt._wrap(x.rank, {})
    for w, coeff in y._terms.items():
        partial = x._terms
        for i in w.reduced_word():
            partial = _times_generator(partial, i)
        result = result + HeckeElt._wrap(x.rank, partial).scale(coeff)
    return result


def hecke_inv_gen(i: int, r: int) -> HeckeElt:
    """``T_i^-1 = q^-2 T_i + (q^-2 - 1) T_e``"""
    if not 1 <= i < r:
        raise DomainError(f"T_{i} is not a generator of H({r}).")
    return HeckeElt(
        r,
        {
            Permutation.simple(i, r): q_pow(-2),
            Permutation.identity(r): q_pow(-2) - ONE,
        },
    )


def star(x: HeckeElt) -> HeckeElt:
    """The anti-involution fixing every ``T_i``: ``T_w -> T_{w^-1}``."""
    return HeckeElt._wrap(x.rank, {w.inverse(): c for w, c in x._terms.items()})


def x_lambda(lam: Sequence[int]) -> HeckeElt:
    """``x_lambda``, the sum of ``T_w`` over the Young subgroup ``S_lambda``."""
    r = sum(lam)
    return HeckeElt(r, {w: ONE for w in young_subgroup(lam)})


def y_lambda(lam: Sequence[int]) -> HeckeElt:
    """``y_lambda``, the sum of ``(-q^2)^(-l(w)) T_w`` over ``S_lambda``."""
    r = sum(lam)
    return HeckeElt(
        r, {w: q_pow(-2 * w.length).scale((-1) ** w.length) for w in young_subgroup(lam)}
    )


def _word_product(word: Iterable[int], r: int) -> HeckeElt:
    result = HeckeElt.identity(r)
    for i in word:
        result = result.times_generator(i)
    return result


@lru_cache(maxsize=None)
def murphy_L(j: int, r: int) -> HeckeElt:
    """
    The Murphy operator ``L_j = a q^(-2(j-1)) T_{j-1} ... T_1 T_1 ... T_{j-1}``.

    Raises
    ------
    DomainError
        If ``j`` is not in ``1..r``.
    """
    if not 1 <= j <= r:
        raise DomainError(f"L_{j} is not defined in H({r}).")
    word = list(range(j - 1, 0, -1)) + list(range(1, j))
    return _word_product(word, r).scale(a_pow(1).shift(0, -2 * (j - 1)))


@lru_cache(maxsize=None)
def murphy_L_inverse(j: int, r: int) -> HeckeElt:
    """``L_j^-1 = a^-1 q^(2(j-1)) T_{j-1}^-1 ... T_1^-1 T_1^-1 ... T_{j-1}^-1``"""
    if not 1 <= j <= r:
        raise DomainError(f"L_{j} is not defined in H({r}).")
    result = HeckeElt.identity(r)
    for i in list(range(j - 1, 0, -1)) + list(range(1, j)):
        result = result * hecke_inv_gen(i, r)
    return result.scale(a_pow(-1).shift(0, 2 * (j - 1)))


@lru_cache(maxsize=None)
def murphy_power(j: int, r: int, t: int) -> HeckeElt:
    """``L_j^t`` for any integer ``t``."""
    if t == 0:
        return HeckeElt.identity(r)
    factor = murphy_L(j, r) if t > 0 else murphy_L_inverse(j, r)
    return murphy_power(j, r, t - 1 if t > 0 else t + 1) * factor


AffineLetter = namedtuple("AffineLetter", ["kind", "index", "power"])
"""A letter of an affine word: ``kind`` is ``"T"`` or ``"X"``, ``power`` is +1 or -1."""


class AffineWord:
    """
    A scalar times a word in the affine Hecke generators ``T_i`` and ``X_j^{+-1}``.
    """

    __slots__ = ("scalar", "letters")

    def __init__(self, letters: Iterable[AffineLetter], scalar: LaurentQA | Scalar = 1) -> None:
        self.scalar = LaurentQA.coerce(scalar)
        self.letters = tuple(AffineLetter(*letter) for letter in letters)
        for letter in self.letters:
            if letter.kind not in ("T", "X"):
                raise DomainError(f"Unknown affine generator {letter.kind}.")
            if letter.power not in (1, -1) or (letter.kind == "T" and letter.power != 1):
                raise DomainError(f"Invalid power {letter.power} for {letter.kind}.")

    def validate(self, r: int) -> None:
        """
        Check the letter indices against the rank.

        Raises
        ------
        DomainError
            If a ``T_i`` has ``i`` outside ``1..r-1`` or an ``X_j`` has ``j`` outside ``1..r``.
        """
        for letter in self.letters:
            bound = r - 1 if letter.kind == "T" else r
            if not 1 <= letter.index <= bound:
                raise DomainError(f"{letter.kind}{letter.index} is out of range for rank {r}.")

    def __add__(self, other: AffineWord) -> AffineWord:
        return AffineWord(self.letters + other.letters, self.scalar * other.scalar)

    def __repr__(self) -> str:
        body = " ".join(
            f"{l.kind}{l.index}" + ("^-1" if l.power == -1 else "") for l in self.letters
        )
        return f"AffineWord({self.scalar}; {body})"


def ev_a(word: AffineWord, r: int) -> HeckeElt:
    """
    Evaluate an affine word in ``H(r)``: ``T_i -> T_i``, ``X_j -> L_j``,
    ``X_j^-1 -> L_j^-1``, extended multiplicatively.
    """
    word.validate(r)
    result = HeckeElt.scalar(word.scalar, r)
    for letter in word.letters:
        if letter.kind == "T":
            result = result.times_generator(letter.index)
        elif letter.power == 1:
            result = result * murphy_L(letter.index, r)
        else:
            result = result * murphy_L_inverse(letter.index, r)
    return result


def murphy_basis_elt(lam: Partition, s: StdTableau, t: StdTableau) -> HeckeElt:
    """
    The Murphy basis element ``x_st = T_{d(s)}^* x_lambda T_{d(t)}``.

    Raises
    ------
    DomainError
        If ``s`` or ``t`` does not have shape ``lambda``.
    """
    if s.shape != lam or t.shape != lam:
        raise DomainError(f"Tableaux {s} and {t} must both have shape {lam}.")
    left = star(HeckeElt.basis(d_of(s)))
    return left * x_lambda(lam) * HeckeElt.basis(d_of(t))


_Q = symbols("q")
_QQ_Q = QQ[_Q]

MurphyEntry = namedtuple("MurphyEntry", ["shape", "s", "t", "element"])


def _to_poly(coeff: LaurentQA):
    terms = {}
    for e_a, e_q, c in coeff.terms():
        if e_a != 0:
            raise DomainError(f"Coefficient {coeff} still depends on a.")
        c = Fraction(c)
        terms[(e_q,)] = QQ(c.numerator, c.denominator)
    return _QQ_Q.ring.from_dict(terms) if terms else _QQ_Q.zero


def _from_poly(poly) -> LaurentQA:
    terms = {}
    for (e_q,), c in poly.terms():
        terms[(0, int(e_q))] = Fraction(int(c.numerator), int(c.denominator))
    return LaurentQA(terms)


class MurphyBasis:
    """
    The Murphy basis of ``H(r)`` and its transition matrix to the ``T_w`` basis.

    Every Murphy basis element has coefficients in ``Z[q^2]``, so the elimination runs over
    ``QQ[q]`` with sympy's fraction-free row reduction.
    """

    def __init__(self, r: int) -> None:
        self.rank = r
        self.permutations = all_permutations(r)
        self._column = {w: k for k, w in enumerate(self.permutations)}
        self.entries: list[MurphyEntry] = []
        for lam in partitions(r):
            tableaux = std_tableaux(lam)
            for s in tableaux:
                for t in tableaux:
                    self.entries.append(MurphyEntry(lam, s, t, murphy_basis_elt(lam, s, t)))
        self._echelon_cache: Dict[Partition, tuple] = {}
        self._lock = threading.Lock()
        logging.debug("Built the Murphy basis of H(%s) with %s elements.", r, len(self.entries))

    def _row(self, h: HeckeElt, e_a: int = 0, shift: int = 0) -> list:
        row = [_QQ_Q.zero] * len(self.permutations)
        for w, coeff in h.terms():
            row[self._column[w]] = _to_poly(coeff.shift(-e_a, shift))
        return row

    def entries_above(self, lam: Partition) -> list[MurphyEntry]:
        """Murphy basis elements whose shape strictly dominates ``lambda``."""
        return [e for e in self.entries if dominates_strictly(e.shape, lam)]

    def _echelon(self, lam: Partition) -> tuple[list[list], object, list[int]]:
        """Fraction-free reduced echelon form of the rows above ``lambda``, built once."""
        with self._lock:
            cached = self._echelon_cache.get(lam)
            if cached is None:
                rows = [self._row(e.element) for e in self.entries_above(lam)]
                matrix = DomainMatrix(rows, (len(rows), len(self.permutations)), _QQ_Q)
                reduced, den, pivots = matrix.rref_den()
                cached = (reduced.to_list(), den, list(pivots))
                self._echelon_cache[lam] = cached
                logging.debug("Echelon form above %s has rank %s.", lam, len(pivots))
        return cached

    def transition_determinant(self) -> LaurentQA:
        """Determinant of the matrix expressing the Murphy basis in the ``T_w`` basis."""
        rows = [self._row(e.element) for e in self.entries]
        size = len(rows)
        det = DomainMatrix(rows, (size, size), _QQ_Q).det()
        return _from_poly(det)

    def contains_above(self, lam: Partition, h: HeckeElt) -> bool:
        """
        Decide whether ``h`` lies in the span of the Murphy basis elements of shapes strictly
        dominating ``lambda``.

        The Murphy basis does not involve ``a``, so every ``a``-homogeneous part of ``h`` is
        reduced separately, after clearing negative powers of ``q``, against the echelon form
        of the rows above ``lambda``.
        """
        if h.rank != self.rank:
            raise DomainError(f"Element of H({h.rank}) tested against the basis of H({self.rank}).")
        if not self.entries_above(lam):
            return h.is_zero()
        reduced, den, pivots = self._echelon(lam)
        for e_a in h.a_degrees():
            part = h.a_component(e_a)
            low = min(e_q for _, c in part.terms() for _, e_q, _ in c.terms())
            vector = self._row(part, e_a, -min(low, 0))
            for row, col in zip(reduced, pivots):
                if vector[col]:
                    factor = vector[col]
                    vector = [den * x - factor * y for x, y in zip(vector, row)]
            if any(vector):
                return False
        return True


_BASES: Dict[int, MurphyBasis] = {}
_BASES_LOCK = threading.Lock()


def murphy_basis(r: int) -> MurphyBasis:
    """The memoized Murphy basis of ``H(r)``; built once per ``r``."""
    basis = _BASES.get(r)
    if basis is None:
        with _BASES_LOCK:
            basis = _BASES.get(r)
            if basis is None:
                basis = MurphyBasis(r)
                _BASES[r] = basis
    return basis


def in_ideal_above(lam: Partition, h: HeckeElt) -> bool:
    """
    True iff ``h`` lies in ``H^{>lambda}``, the span of Murphy basis elements ``x_st`` of
    shapes strictly dominating ``lambda``.

    Raises
    ------
    DomainError
        If ``|lambda|`` differs from the rank of ``h``.
    """
    if lam.size != h.rank:
        raise DomainError(f"Partition {lam} does not have size {h.rank}.")
    if h.is_zero():
        return True
    return murphy_basis(h.rank).contains_above(lam, h)


def residue_congruence(lam: Partition, s: int, t: int, sign: int) -> bool:
    """
    Test ``x_lambda L_s^(sign t) = res(s)^(sign t) x_lambda`` modulo ``H^{>lambda}``.
    """
    if sign not in (1, -1):
        raise DomainError(f"Sign must be +1 or -1, got {sign}.")
    r = lam.size
    if not 1 <= s <= r:
        raise DomainError(f"Index {s} is outside 1..{r}.")
    x = x_lambda(lam)
    eigen = residue(lam, s) ** (sign * t)
    return in_ideal_above(lam, x * murphy_power(s, r, sign * t) - x.scale(eigen.to_laurent()))


def superstandard_murphy(lam: Partition) -> HeckeElt:
    """``x_{t^lambda t^lambda}``, which equals ``x_lambda``."""
    tab = superstandard_tableau(lam)
    return murphy_basis_elt(lam, tab, tab)
