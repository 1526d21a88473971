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
The tensor space over the basis ``omega_i``, ``i`` in ``Z``, with the left action of quantum
affine ``gl_n`` through iterated comultiplication and the right action of the affine Hecke
algebra.
"""

from __future__ import annotations

import itertools
import logging
from collections import namedtuple
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from qschur.smallreps.combinatorics import as_composition
from qschur.smallreps.exceptions import DomainError
from qschur.smallreps.hecke import (
    Q2_MINUS_1,
    AffineLetter,
    AffineWord,
    HeckeElt,
    murphy_power,
)
from qschur.smallreps.ring import ONE, ZERO, LaurentQA, Scalar, a_pow, q_pow

IndexTuple = Tuple[int, ...]
Weight = Tuple[int, ...]


class GenKind(Enum):
    """
    Kinds of generators of quantum affine ``gl_n`` acting on the left.
    """

    E = "E"
    F = "F"
    KPLUS = "Kplus"
    KMINUS = "Kminus"
    ZPLUS = "Zplus"
    ZMINUS = "Zminus"


GenLabel = namedtuple("GenLabel", ["kind", "index"])
"""A generator: ``index`` is ``i`` in ``1..n`` for E, F and K, ``t >= 1`` for the central z."""


class Mutation(Enum):
    """
    Deliberate defects injected in the actions, used to check that the verification suites are
    sensitive to them.
    """

    T_MIDDLE_SIGN = "t-middle-sign"
    E_COPRODUCT_SIDE = "e-coproduct-side"
    NAIVE_AFFINE_T = "naive-affine-t"


class TensorElt:
    """
    A finite linear combination of pure tensors ``omega_i``, ``i`` in ``Z^r``.
    """

    __slots__ = ("rank", "modulus", "_terms")

    def __init__(
        self,
        rank: int,
        modulus: int,
        terms: Mapping[Sequence[int], LaurentQA | Scalar] | None = None,
    ) -> None:
        """
        Parameters
        ----------
        rank : int
            Number of tensor factors ``r``.
        modulus : int
            The ``n`` of quantum affine ``gl_n``.
        terms : Mapping[Sequence[int], LaurentQA | Scalar] | None
            Coefficients by index tuple. Zero coefficients are dropped.

        Raises
        ------
        DomainError
            If an index tuple does not have length ``rank``.
        """
        if rank < 1 or modulus < 2:
            raise DomainError(f"Tensor space needs r >= 1 and n >= 2, got r={rank}, n={modulus}.")
        clean: Dict[IndexTuple, LaurentQA] = {}
        for idx, coeff in (terms or {}).items():
            idx = tuple(int(x) for x in idx)
            if len(idx) != rank:
                raise DomainError(f"Index {idx} does not have length {rank}.")
            coeff = LaurentQA.coerce(coeff)
            if coeff:
                clean[idx] = clean.get(idx, ZERO) + coeff
        self.rank = rank
        self.modulus = modulus
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _wrap(cls, rank: int, modulus: int, terms: Dict[IndexTuple, LaurentQA]) -> TensorElt:
        obj = cls.__new__(cls)
        obj.rank = rank
        obj.modulus = modulus
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, idx: Sequence[int], modulus: int) -> TensorElt:
        """The pure tensor ``omega_idx``."""
        return cls(len(idx), modulus, {tuple(idx): ONE})

    def terms(self) -> list[tuple[IndexTuple, LaurentQA]]:
        """Terms sorted by index tuple."""
        return sorted(self._terms.items())

    def coefficient(self, idx: Sequence[int]) -> LaurentQA:
        """Coefficient of ``omega_idx``."""
        return self._terms.get(tuple(idx), ZERO)

    def support(self) -> list[IndexTuple]:
        """Index tuples with a nonzero coefficient, sorted."""
        return sorted(self._terms)

    def is_zero(self) -> bool:
        """True for the zero vector."""
        return not self._terms

    def _check(self, other: TensorElt) -> None:
        if (self.rank, self.modulus) != (other.rank, other.modulus):
            raise DomainError(
                f"Cannot combine tensors of rank {self.rank} mod {self.modulus} and rank "
                f"{other.rank} mod {other.modulus}."
            )

    def __add__(self, other: TensorElt) -> TensorElt:
        if not isinstance(other, TensorElt):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for idx, coeff in other._terms.items():
            _accumulate(out, idx, coeff)
        return TensorElt._wrap(self.rank, self.modulus, out)

    def __neg__(self) -> TensorElt:
        return TensorElt._wrap(self.rank, self.modulus, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: TensorElt) -> TensorElt:
        if not isinstance(other, TensorElt):
            return NotImplemented
        return self + (-other)

    def scale(self, value: LaurentQA | Scalar) -> TensorElt:
        """Multiply every coefficient by ``value``."""
        value = LaurentQA.coerce(value)
        if not value:
            return TensorElt._wrap(self.rank, self.modulus, {})
        return TensorElt._wrap(
            self.rank, self.modulus, {k: c * value for k, c in self._terms.items()}
        )

    def __rmul__(self, other: LaurentQA | Scalar) -> TensorElt:
        if isinstance(other, (LaurentQA, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def tensor(self, other: TensorElt) -> TensorElt:
        """The tensor product ``self (x) other``."""
        if self.modulus != other.modulus:
            raise DomainError("Tensor factors must share the modulus.")
        out: Dict[IndexTuple, LaurentQA] = {}
        for i, c1 in self._terms.items():
            for j, c2 in other._terms.items():
                _accumulate(out, i + j, c1 * c2)
        return TensorElt._wrap(self.rank + other.rank, self.modulus, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElt):
            return NotImplemented
        return (self.rank, self.modulus, self._terms) == (other.rank, other.modulus, other._terms)

    def __hash__(self) -> int:
        return hash((self.rank, self.modulus, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TensorElt({self.rank}, {self.modulus}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, coeff in self.terms():
            name = "w[" + ",".join(str(x) for x in idx) + "]"
            pieces.append(name if coeff == ONE else f"({coeff})*{name}")
        return " + ".join(pieces)


def _accumulate(out: Dict, key, coeff: LaurentQA) -> None:
    total = out.get(key, ZERO) + coeff
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def bar(s: int, n: int) -> int:
    """Representative of ``s`` modulo ``n`` in ``1..n``."""
    return (s - 1) % n + 1


def weight_of(idx: Sequence[int], n: int) -> Weight:
    """
    Weight of ``omega_idx``: entry ``j`` counts the factors with residue ``j`` modulo ``n``.
    """
    counts = [0] * n
    for s in idx:
        counts[bar(s, n) - 1] += 1
    return tuple(counts)


def u_lambda_j(lam: Sequence[int], j: int) -> IndexTuple:
    """
    The index of
    ``omega_1^(j-1) omega_n omega_1^(lambda_1-j) omega_2^lambda_2 ... omega_n^lambda_n``,
    ``n`` being the length of ``lam``.

    Raises
    ------
    DomainError
        If ``j`` is not in ``1..lambda_1``.
    """
    lam = as_composition(lam)
    n = len(lam)
    if not lam or not 1 <= j <= lam[0]:
        raise DomainError(f"u_(lambda, j) needs 1 <= j <= lambda_1, got j={j}, lambda={lam}.")
    idx = [1] * (j - 1) + [n] + [1] * (lam[0] - j)
    for value, part in enumerate(lam[1:], start=2):
        idx.extend([value] * part)
    return tuple(idx)


def _shift_index(idx: IndexTuple, shifts: Sequence[int], n: int) -> IndexTuple:
    """``omega_idx . X^shifts``: entry ``t`` moves by ``-n * shifts[t]``."""
    return tuple(i - n * e for i, e in zip(idx, shifts))


class TensorSpace:
    """
    The tensor space of rank ``r`` for quantum affine ``gl_n`` and the affine Hecke algebra.

    Parameters
    ----------
    n : int
        Modulus, ``n >= 2``.
    r : int
        Number of tensor factors, ``r >= 1``.
    mutations : Iterable[Mutation]
        Defects to inject, empty for the correct actions.
    """

    def __init__(self, n: int, r: int, mutations: Iterable[Mutation] = ()) -> None:
        if n < 2 or r < 1:
            raise DomainError(f"Tensor space needs n >= 2 and r >= 1, got n={n}, r={r}.")
        self.n = n
        self.r = r
        self.mutations = frozenset(mutations)
        if self.mutations:
            logging.debug("Tensor space n=%s r=%s with mutations %s", n, r, sorted(
                m.value for m in self.mutations))
        self._eps_cache: Dict[Tuple[int, ...], HeckeElt] = {}

    def basis(self, idx: Sequence[int]) -> TensorElt:
        """The pure tensor ``omega_idx``, checking its length."""
        if len(idx) != self.r:
            raise DomainError(f"Index {tuple(idx)} does not have length {self.r}.")
        return TensorElt.basis(idx, self.n)

    def zero(self) -> TensorElt:
        """The zero vector."""
        return TensorElt._wrap(self.r, self.n, {})

    def window_basis(self, lo: int, hi: int) -> Iterator[IndexTuple]:
        """All index tuples with entries in ``lo..hi``, lexicographically; empty if ``lo > hi``."""
        return itertools.product(range(lo, hi + 1), repeat=self.r)

    def finite_basis(self) -> Iterator[IndexTuple]:
        """Index tuples of ``Omega_n^(x)r``, entries in ``1..n``."""
        return self.window_basis(1, self.n)

    def is_finite(self, v: TensorElt) -> bool:
        """True iff ``v`` is supported on ``[1, n]^r``."""
        return self.restrict(v) == v

    def restrict(self, v: TensorElt) -> TensorElt:
        """The part of ``v`` supported on ``[1, n]^r``."""
        self._check_vector(v)
        return TensorElt._wrap(
            self.r,
            self.n,
            {k: c for k, c in v._terms.items() if all(1 <= i <= self.n for i in k)},
        )

    def weight_of(self, idx: Sequence[int]) -> Weight:
        """See :func:`weight_of`."""
        return weight_of(idx, self.n)

    def _check_vector(self, v: TensorElt) -> None:
        if (v.rank, v.modulus) != (self.r, self.n):
            raise DomainError(
                f"Vector of rank {v.rank} mod {v.modulus} given to the space "
                f"n={self.n}, r={self.r}."
            )

    def _check_label(self, g: GenLabel) -> GenKind:
        kind = GenKind(g.kind)
        if kind in (GenKind.ZPLUS, GenKind.ZMINUS):
            if g.index < 1:
                raise DomainError(f"Central generator index must be >= 1, got {g.index}.")
        elif not 1 <= g.index <= self.n:
            raise DomainError(f"Generator index {g.index} is outside 1..{self.n}.")
        return kind

    def _ktilde_exp(self, i: int, s: int) -> int:
        """Exponent of ``q`` for ``K_i K_{i+1}^-1`` on ``omega_s``."""
        res = bar(s, self.n)
        return int(res == i) - int(res == bar(i + 1, self.n))

    def act_left(self, g: GenLabel, v: TensorElt) -> TensorElt:
        """
        Left action of a generator on ``v`` through the iterated coproduct.

        ``E_i`` acts on one slot with ``K_i K_{i+1}^-1`` on the later slots, ``F_i`` acts on one
        slot with ``(K_i K_{i+1}^-1)^-1`` on the earlier slots, ``K_i^(+-1)`` act on every slot
        and ``z_t^(+-)`` shift one slot by ``-+tn`` at a time.
        """
        self._check_vector(v)
        kind = self._check_label(g)
        out: Dict[IndexTuple, LaurentQA] = {}
        for idx, coeff in v._terms.items():
            for new_idx, factor in self._left_on_basis(kind, g.index, idx):
                _accumulate(out, new_idx, coeff * factor)
        return TensorElt._wrap(self.r, self.n, out)

    def _left_on_basis(self, kind: GenKind, i: int, idx: IndexTuple):
        n = self.n
        if kind in (GenKind.KPLUS, GenKind.KMINUS):
            exp = sum(1 for s in idx if bar(s, n) == i)
            yield idx, q_pow(exp if kind is GenKind.KPLUS else -exp)
            return
        if kind in (GenKind.ZPLUS, GenKind.ZMINUS):
            step = -i * n if kind is GenKind.ZPLUS else i * n
            for slot in range(len(idx)):
                yield idx[:slot] + (idx[slot] + step,) + idx[slot + 1:], ONE
            return
        exps = [self._ktilde_exp(i, s) for s in idx]
        for slot, s in enumerate(idx):
            if kind is GenKind.E:
                if bar(s, n) != bar(i + 1, n):
                    continue
                if Mutation.E_COPRODUCT_SIDE in self.mutations:
                    power = sum(exps[:slot])
                else:
                    power = sum(exps[slot + 1:])
                yield idx[:slot] + (s - 1,) + idx[slot + 1:], q_pow(power)
            else:
                if bar(s, n) != i:
                    continue
                yield idx[:slot] + (s + 1,) + idx[slot + 1:], q_pow(-sum(exps[:slot]))

    def act_left_split(self, g: GenLabel, v: TensorElt) -> TensorElt:
        """
        Left action computed on rank ``r-1`` (x) rank 1 with the two-fold coproduct, for
        comparison with :meth:`act_left`.
        """
        self._check_vector(v)
        kind = self._check_label(g)
        if self.r == 1:
            return self.act_left(g, v)
        head_space = TensorSpace(self.n, self.r - 1, self.mutations)
        tail_space = TensorSpace(self.n, 1, self.mutations)
        total = self.zero()
        for idx, coeff in v.terms():
            head = TensorElt.basis(idx[:-1], self.n)
            tail = TensorElt.basis(idx[-1:], self.n)
            if kind is GenKind.E:
                ktilde = tail.scale(q_pow(self._ktilde_exp(g.index, idx[-1])))
                part = head_space.act_left(g, head).tensor(ktilde) + head.tensor(
                    tail_space.act_left(g, tail)
                )
            elif kind is GenKind.F:
                head_exp = sum(self._ktilde_exp(g.index, s) for s in idx[:-1])
                part = head_space.act_left(g, head).tensor(tail) + head.scale(
                    q_pow(-head_exp)
                ).tensor(tail_space.act_left(g, tail))
            elif kind in (GenKind.KPLUS, GenKind.KMINUS):
                part = head_space.act_left(g, head).tensor(tail_space.act_left(g, tail))
            else:
                part = head_space.act_left(g, head).tensor(tail) + head.tensor(
                    tail_space.act_left(g, tail)
                )
            total = total + part.scale(coeff)
        return total

    def act_right(self, h: AffineLetter, v: TensorElt) -> TensorElt:
        """
        Right action of ``T_k``, ``X_t`` or ``X_t^-1``.

        ``X_t^(-+1)`` moves entry ``t`` by ``+-n``. ``T_k`` follows the three-case rule on
        ``[1, n]^r`` and extends to ``Z^r`` through ``f T_k = T_k s_k(f) +
        (q^2-1)(f - s_k f)/(1 - X_k X_{k+1}^-1)``.
        """
        self._check_vector(v)
        h = AffineLetter(*h)
        bound = self.r - 1 if h.kind == "T" else self.r
        if h.kind not in ("T", "X") or not 1 <= h.index <= bound:
            raise DomainError(f"{h.kind}{h.index} does not act on rank {self.r}.")
        out: Dict[IndexTuple, LaurentQA] = {}
        for idx, coeff in v._terms.items():
            if h.kind == "X":
                t = h.index - 1
                new_idx = idx[:t] + (idx[t] - h.power * self.n,) + idx[t + 1:]
                _accumulate(out, new_idx, coeff)
                continue
            for new_idx, factor in self._t_on_basis(h.index, idx):
                _accumulate(out, new_idx, coeff * factor)
        return TensorElt._wrap(self.r, self.n, out)

    def _three_case(self, k: int, idx: IndexTuple):
        a, b = idx[k - 1], idx[k]
        swapped = idx[: k - 1] + (b, a) + idx[k + 1:]
        if a == b:
            yield idx, q_pow(-2 if Mutation.T_MIDDLE_SIGN in self.mutations else 2)
        elif a < b:
            yield swapped, q_pow(1)
        else:
            yield swapped, q_pow(1)
            yield idx, Q2_MINUS_1

    def _t_on_basis(self, k: int, idx: IndexTuple):
        if Mutation.NAIVE_AFFINE_T in self.mutations:
            yield from self._three_case(k, idx)
            return
        n = self.n
        base = tuple(bar(i, n) for i in idx)
        exps = [(j - i) // n for i, j in zip(idx, base)]
        if not any(exps):
            yield from self._three_case(k, idx)
            return
        swapped_exps = list(exps)
        swapped_exps[k - 1], swapped_exps[k] = exps[k], exps[k - 1]
        for new_idx, factor in self._three_case(k, base):
            yield _shift_index(new_idx, swapped_exps, n), factor
        a, b = exps[k - 1], exps[k]
        if a == b:
            return
        if a > b:
            sign, pairs = -1, [(b + p, a - p) for p in range(a - b)]
        else:
            sign, pairs = 1, [(a + p, b - p) for p in range(b - a)]
        for first, second in pairs:
            mono = list(exps)
            mono[k - 1], mono[k] = first, second
            yield _shift_index(base, mono, n), Q2_MINUS_1.scale(sign)

    def apply_word(self, v: TensorElt, word: AffineWord) -> TensorElt:
        """``v`` acted on by every letter of ``word`` in turn, then scaled."""
        word.validate(self.r)
        for letter in word.letters:
            v = self.act_right(letter, v)
        return v.scale(word.scalar)

    def act_hecke(self, v: TensorElt, h: HeckeElt) -> TensorElt:
        """
        ``v . h`` for ``h`` in the finite Hecke algebra: ``T_w`` acts along a reduced word of
        ``w``, the first letter first.
        """
        self._check_vector(v)
        if h.rank != self.r:
            raise DomainError(f"Element of H({h.rank}) acting on rank {self.r}.")
        total = self.zero()
        for w, coeff in h.terms():
            part = v
            for i in w.reduced_word():
                part = self.act_right(AffineLetter("T", i, 1), part)
            total = total + part.scale(coeff)
        return total

    def _ev_monomial(self, exps: Tuple[int, ...]) -> HeckeElt:
        cached = self._eps_cache.get(exps)
        if cached is None:
            cached = HeckeElt.identity(self.r)
            for t, e in enumerate(exps, start=1):
                if e:
                    cached = cached * murphy_power(t, self.r, e)
            self._eps_cache[exps] = cached
        return cached

    def eps_a(self, v: TensorElt) -> TensorElt:
        """
        Push ``v`` into ``Omega_n^(x)r``: ``omega_i = omega_j X^e`` with ``j`` in ``[1, n]^r``
        maps to ``omega_j . ev_a(X^e)``.
        """
        self._check_vector(v)
        total = self.zero()
        for idx, coeff in v.terms():
            base = tuple(bar(i, self.n) for i in idx)
            exps = tuple((j - i) // self.n for i, j in zip(idx, base))
            image = TensorElt.basis(base, self.n)
            if any(exps):
                image = self.act_hecke(image, self._ev_monomial(exps))
            total = total + image.scale(coeff)
        return total

    def apply_fk(self, k: int, v: TensorElt) -> TensorElt:
        """
        ``f_2 = F_1`` and ``f_k = F_{k-1} f_{k-1} - q^-1 f_{k-1} F_{k-1}``.
        """
        if not 2 <= k <= self.n:
            raise DomainError(f"f_{k} needs 2 <= k <= {self.n}.")
        gen = GenLabel(GenKind.F, k - 1)
        if k == 2:
            return self.act_left(gen, v)
        return self.act_left(gen, self.apply_fk(k - 1, v)) - self.apply_fk(
            k - 1, self.act_left(gen, v)
        ).scale(q_pow(-1))

    def apply_en(self, k: int, v: TensorElt) -> TensorElt:
        """
        ``e_2 = E_1`` and ``e_k = e_{k-1} E_{k-1} - q E_{k-1} e_{k-1}``.
        """
        if not 2 <= k <= self.n:
            raise DomainError(f"e_{k} needs 2 <= k <= {self.n}.")
        gen = GenLabel(GenKind.E, k - 1)
        if k == 2:
            return self.act_left(gen, v)
        return self.apply_en(k - 1, self.act_left(gen, v)) - self.act_left(
            gen, self.apply_en(k - 1, v)
        ).scale(q_pow(1))

    def _require_finite(self, v: TensorElt) -> None:
        if not self.is_finite(v):
            raise DomainError(f"{v} is not supported on [1, {self.n}]^{self.r}.")

    def apply_ev_en(self, v: TensorElt) -> TensorElt:
        """The image of ``E_n`` under evaluation: ``a q^-1 f_n(K_1 K_n v)``."""
        self._require_finite(v)
        kk = self.act_left(
            GenLabel(GenKind.KPLUS, 1), self.act_left(GenLabel(GenKind.KPLUS, self.n), v)
        )
        return self.apply_fk(self.n, kk).scale(a_pow(1).shift(0, -1))

    def apply_ev_fn(self, v: TensorElt) -> TensorElt:
        """The image of ``F_n`` under evaluation: ``a^-1 q e_n((K_1 K_n)^-1 v)``."""
        self._require_finite(v)
        kk = self.act_left(
            GenLabel(GenKind.KMINUS, 1), self.act_left(GenLabel(GenKind.KMINUS, self.n), v)
        )
        return self.apply_en(self.n, kk).scale(a_pow(-1).shift(0, 1))


@lru_cache(maxsize=None)
def tensor_space(n: int, r: int, mutations: frozenset = frozenset()) -> TensorSpace:
    """Shared :class:`TensorSpace` per ``(n, r, mutations)``."""
    return TensorSpace(n, r, mutations)
