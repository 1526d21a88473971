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
Exact arithmetic: rationals, Laurent polynomials in the two formal variables ``a`` and ``q``,
q-integers, Gaussian binomials and polynomials in ``u`` with Laurent coefficients.

Both ``q`` and ``a`` are kept formal. A generic ``q`` is therefore never specialised and every
identity is checked with exact rational coefficients.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, Mapping, Tuple, Union

from sympy import QQ, Integer, Poly, Rational, symbols

from qschur.smallreps.exceptions import DomainError, UnsupportedInputError

Rat = Fraction
Scalar = Union[int, Fraction]
ExpKey = Tuple[int, int]

_A, _Q, _U = symbols("a q u")
_FRACTIONS = QQ.frac_field(_A, _Q)


def _canon(coeff: Scalar) -> Scalar:
    """Integral rationals are stored as ``int``."""
    if isinstance(coeff, Fraction):
        return coeff.numerator if coeff.denominator == 1 else coeff
    if isinstance(coeff, int) and not isinstance(coeff, bool):
        return coeff
    raise DomainError(f"Coefficients must be integers or fractions, got {type(coeff).__name__}.")


def _format_exp(var: str, exp: int) -> str:
    if exp == 1:
        return var
    return f"{var}^{exp}"


class LaurentQA:
    """
    Exact Laurent polynomial in ``a`` and ``q`` with rational coefficients.

    Values are immutable. The term map never stores a zero coefficient, so two values are equal
    exactly when their term maps are.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExpKey, Scalar] | None = None) -> None:
        """
        Parameters
        ----------
        terms : Mapping[tuple[int, int], int | Fraction] | None
            Association from exponent pairs ``(e_a, e_q)`` to coefficients. Zero coefficients are
            dropped.
        """
        clean: Dict[ExpKey, Scalar] = {}
        for (e_a, e_q), coeff in (terms or {}).items():
            coeff = _canon(coeff)
            if coeff:
                clean[(int(e_a), int(e_q))] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[ExpKey, Scalar]) -> LaurentQA:
        # terms must already be canonical and free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, coeff: Scalar) -> LaurentQA:
        """Embed a rational number."""
        return cls({(0, 0): coeff})

    @classmethod
    def monomial(cls, coeff: Scalar, e_a: int = 0, e_q: int = 0) -> LaurentQA:
        """Return ``coeff * a^e_a * q^e_q``."""
        return cls({(e_a, e_q): coeff})

    @classmethod
    def coerce(cls, value: LaurentQA | Monomial | Scalar) -> LaurentQA:
        """Convert rationals and monomials into Laurent polynomials, pass Laurent values through."""
        if isinstance(value, LaurentQA):
            return value
        if isinstance(value, Monomial):
            return value.to_laurent()
        return cls.constant(value)

    def terms(self) -> list[tuple[int, int, Scalar]]:
        """
        Return the terms sorted lexicographically by ``(e_a, e_q)``.

        Returns
        -------
        list[tuple[int, int, int | Fraction]]
            Triples ``(e_a, e_q, coefficient)``.
        """
        return [(e_a, e_q, self._terms[(e_a, e_q)]) for e_a, e_q in sorted(self._terms)]

    def coefficient(self, e_a: int, e_q: int) -> Scalar:
        """Return the coefficient of ``a^e_a q^e_q`` (zero when absent)."""
        return self._terms.get((e_a, e_q), 0)

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        """True when the value has exactly one term."""
        return len(self._terms) == 1

    def as_monomial(self) -> Monomial:
        """
        Return the single term of this value.

        Raises
        ------
        DomainError
            If the value does not have exactly one term.
        """
        if len(self._terms) != 1:
            raise DomainError(f"{self} is not a monomial.")
        ((e_a, e_q), coeff) = next(iter(self._terms.items()))
        return Monomial(coeff, e_a, e_q)

    def a_degrees(self) -> list[int]:
        """Distinct exponents of ``a``, ascending."""
        return sorted({e_a for e_a, _ in self._terms})

    def a_component(self, e_a: int) -> LaurentQA:
        """The part of this value whose ``a``-exponent equals ``e_a``."""
        return LaurentQA._wrap({k: c for k, c in self._terms.items() if k[0] == e_a})

    def shift(self, e_a: int, e_q: int) -> LaurentQA:
        """Multiply by ``a^e_a q^e_q``."""
        if e_a == 0 and e_q == 0:
            return self
        return LaurentQA._wrap({(k[0] + e_a, k[1] + e_q): c for k, c in self._terms.items()})

    def scale(self, coeff: Scalar) -> LaurentQA:
        """Multiply by a rational number."""
        coeff = _canon(coeff)
        if not coeff:
            return ZERO
        return LaurentQA._wrap({k: _canon(c * coeff) for k, c in self._terms.items()})

    def __add__(self, other: LaurentQA | Scalar) -> LaurentQA:
        if not isinstance(other, LaurentQA):
            if isinstance(other, (int, Fraction)):
                other = LaurentQA.constant(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            total = out.get(key, 0) + coeff
            if total:
                out[key] = _canon(total)
            else:
                out.pop(key, None)
        return LaurentQA._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentQA:
        return LaurentQA._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: LaurentQA | Scalar) -> LaurentQA:
        if not isinstance(other, (LaurentQA, int, Fraction)):
            return NotImplemented
        return self + (-LaurentQA.coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentQA:
        return LaurentQA.coerce(other) - self

    def __mul__(self, other: LaurentQA | Scalar) -> LaurentQA:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, LaurentQA):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            ((e_a, e_q), coeff) = next(iter(other._terms.items()))
            return self.shift(e_a, e_q).scale(coeff) if coeff != 1 else self.shift(e_a, e_q)
        out: Dict[ExpKey, Scalar] = {}
        for (a1, q1), c1 in self._terms.items():
            for (a2, q2), c2 in other._terms.items():
                key = (a1 + a2, q1 + q2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentQA._wrap({k: _canon(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentQA:
        if exponent < 0:
            if not self.is_monomial():
                raise DomainError(f"Only monomials can be raised to negative powers, got {self}.")
            return self.as_monomial().inverse().to_laurent() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divide(self, other: LaurentQA) -> LaurentQA | None:
        """
        Exact division in the Laurent ring.

        Parameters
        ----------
        other : LaurentQA
            The divisor.

        Returns
        -------
        LaurentQA | None
            The quotient when ``other`` divides this value exactly, None otherwise.

        Raises
        ------
        DomainError
            If ``other`` is zero.
        """
        if not other._terms:
            raise DomainError("Division by the zero Laurent polynomial.")
        if not self._terms:
            return ZERO
        if other.is_monomial():
            inv = other.as_monomial().inverse()
            return (self * inv.to_laurent()) if inv.coeff != 1 else self.shift(inv.e_a, inv.e_q)
        # the quotient's exponents are confined to the difference of bounding boxes
        lo_a = min(k[0] for k in self._terms) - min(k[0] for k in other._terms)
        hi_a = max(k[0] for k in self._terms) - max(k[0] for k in other._terms)
        lo_q = min(k[1] for k in self._terms) - min(k[1] for k in other._terms)
        hi_q = max(k[1] for k in self._terms) - max(k[1] for k in other._terms)
        lead_key = max(other._terms)
        lead_coeff = other._terms[lead_key]
        remainder = dict(self._terms)
        quotient: Dict[ExpKey, Scalar] = {}
        while remainder:
            top = max(remainder)
            key = (top[0] - lead_key[0], top[1] - lead_key[1])
            if not (lo_a <= key[0] <= hi_a and lo_q <= key[1] <= hi_q):
                return None
            coeff = _canon(Fraction(remainder[top]) / lead_coeff)
            quotient[key] = coeff
            for (e_a, e_q), c in other._terms.items():
                k = (e_a + key[0], e_q + key[1])
                value = remainder.get(k, 0) - coeff * c
                if value:
                    remainder[k] = _canon(value)
                else:
                    remainder.pop(k, None)
        return LaurentQA._wrap(quotient)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentQA):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentQA.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentQA({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e_a, e_q in sorted(self._terms, reverse=True):
            coeff = self._terms[(e_a, e_q)]
            variables = [_format_exp("a", e_a)] if e_a else []
            if e_q:
                variables.append(_format_exp("q", e_q))
            magnitude = abs(coeff)
            if variables and magnitude == 1:
                body = "*".join(variables)
            else:
                body = "*".join([str(magnitude)] + variables)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = f"-{body}" if sign == "-" else body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


ZERO = LaurentQA()
ONE = LaurentQA.constant(1)


class Monomial:
    """
    A single nonzero term ``coeff * a^e_a * q^e_q``.

    Monomials are the centers of segments and the inverse roots of Drinfeld polynomials.
    """

    __slots__ = ("coeff", "e_a", "e_q")

    def __init__(self, coeff: Scalar = 1, e_a: int = 0, e_q: int = 0) -> None:
        coeff = _canon(coeff)
        if coeff == 0:
            raise DomainError("A monomial must have a nonzero coefficient.")
        self.coeff = coeff
        self.e_a = int(e_a)
        self.e_q = int(e_q)

    def to_laurent(self) -> LaurentQA:
        """Embed this monomial as a single-term Laurent polynomial."""
        return LaurentQA._wrap({(self.e_a, self.e_q): self.coeff})

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self.coeff * other.coeff, self.e_a + other.e_a, self.e_q + other.e_q)

    def inverse(self) -> Monomial:
        """Return the multiplicative inverse."""
        return Monomial(1 / Fraction(self.coeff), -self.e_a, -self.e_q)

    def __pow__(self, exponent: int) -> Monomial:
        base = self if exponent >= 0 else self.inverse()
        return Monomial(Fraction(base.coeff) ** abs(exponent), base.e_a * abs(exponent),
                        base.e_q * abs(exponent))

    def shift_q(self, e_q: int) -> Monomial:
        """Multiply by ``q^e_q``."""
        return Monomial(self.coeff, self.e_a, self.e_q + e_q)

    def sort_key(self) -> tuple[int, int, Scalar]:
        """Key ordering monomials by ``(e_a, e_q, coeff)``."""
        return (self.e_a, self.e_q, self.coeff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return (self.coeff, self.e_a, self.e_q) == (other.coeff, other.e_a, other.e_q)

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash((self.coeff, self.e_a, self.e_q))

    def __repr__(self) -> str:
        return f"Monomial({self.coeff!r}, {self.e_a}, {self.e_q})"

    def __str__(self) -> str:
        return str(self.to_laurent())


def a_pow(e_a: int) -> LaurentQA:
    """``a^e_a``"""
    return LaurentQA._wrap({(e_a, 0): 1})


def q_pow(e_q: int) -> LaurentQA:
    """``q^e_q``"""
    return LaurentQA._wrap({(0, e_q): 1})


_LAURENT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "eq": operator.eq,
}


def laurent_arith(op: str, x: LaurentQA, y: LaurentQA | None = None) -> LaurentQA | bool:
    """
    Dispatch a ring operation by name.

    Parameters
    ----------
    op : str
        One of ``add``, ``sub``, ``mul``, ``neg`` and ``eq``.
    x : LaurentQA
        First operand.
    y : LaurentQA | None
        Second operand, ignored by ``neg``.

    Returns
    -------
    LaurentQA | bool
        The canonical result, or a boolean for ``eq``.
    """
    if op == "neg":
        return -x
    if op not in _LAURENT_OPS:
        raise DomainError(f"Unknown Laurent operation {op}.")
    return _LAURENT_OPS[op](x, y)


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentQA:
    """
    The balanced q-integer ``[n]_q = (q^n - q^-n) / (q - q^-1)``.

    Negative arguments are allowed, ``[-n]_q = -[n]_q``.
    """
    if n < 0:
        return -qint(-n)
    return LaurentQA({(0, n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def qbinom(n: int, m: int) -> LaurentQA:
    """
    Gaussian binomial coefficient, computed as an exact quotient of q-integer products.

    Parameters
    ----------
    n : int
        Upper argument, nonnegative.
    m : int
        Lower argument, ``0 <= m <= n``.

    Returns
    -------
    LaurentQA
        The Laurent polynomial ``[n]_q ... [n-m+1]_q / ([m]_q ... [1]_q)``.

    Raises
    ------
    DomainError
        If ``m > n`` or an argument is negative.
    """
    if n < 0 or m < 0:
        raise DomainError(f"qbinom needs nonnegative arguments, got ({n}, {m}).")
    if m > n:
        raise DomainError(f"qbinom({n}, {m}) is undefined since {m} > {n}.")
    numerator = reduce(operator.mul, (qint(n - k) for k in range(m)), ONE)
    denominator = reduce(operator.mul, (qint(k + 1) for k in range(m)), ONE)
    quotient = numerator.divide(denominator)
    if quotient is None:
        raise DomainError(f"qbinom({n}, {m}) did not divide exactly.")
    return quotient


class UPoly:
    """
    Polynomial in ``u`` with ``LaurentQA`` coefficients, stored by ascending power of ``u``.

    The highest stored coefficient is nonzero; the zero polynomial stores nothing and has degree
    -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[LaurentQA | Scalar] = ()) -> None:
        values = [LaurentQA.coerce(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        self._coeffs = tuple(values)

    @property
    def coeffs(self) -> tuple[LaurentQA, ...]:
        """Coefficients by ascending power of ``u``."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in ``u``, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._coeffs

    def coefficient(self, k: int) -> LaurentQA:
        """Coefficient of ``u^k``."""
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else ZERO

    def constant_term(self) -> LaurentQA:
        """Coefficient of ``u^0``."""
        return self.coefficient(0)

    def __add__(self, other: UPoly) -> UPoly:
        if not isinstance(other, UPoly):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return UPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __neg__(self) -> UPoly:
        return UPoly(-c for c in self._coeffs)

    def __sub__(self, other: UPoly) -> UPoly:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: UPoly | LaurentQA | Scalar) -> UPoly:
        if not isinstance(other, UPoly):
            if isinstance(other, (LaurentQA, int, Fraction)):
                scalar = LaurentQA.coerce(other)
                return UPoly(c * scalar for c in self._coeffs)
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UPoly()
        out = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, c1 in enumerate(self._coeffs):
            for j, c2 in enumerate(other._coeffs):
                out[i + j] = out[i + j] + c1 * c2
        return UPoly(out)

    __rmul__ = __mul__

    def substitute_scale(self, m: Monomial | LaurentQA) -> UPoly:
        """
        Return ``f(m u)``: the coefficient of ``u^k`` is multiplied by ``m^k``.
        """
        scale = LaurentQA.coerce(m)
        power = ONE
        out = []
        for coeff in self._coeffs:
            out.append(coeff * power)
            power = power * scale
        return UPoly(out)

    def exact_divide(self, other: UPoly) -> UPoly | None:
        """
        Divide by ``other`` when the quotient is a polynomial with Laurent coefficients.

        Parameters
        ----------
        other : UPoly
            Nonzero divisor.

        Returns
        -------
        UPoly | None
            The quotient, or None when ``other`` does not divide this polynomial over the fraction
            field of the Laurent ring.

        Raises
        ------
        DomainError
            If ``other`` is the zero polynomial.
        UnsupportedInputError
            If the division is exact over the fraction field but the quotient has coefficients
            outside the Laurent ring.
        """
        if other.is_zero():
            raise DomainError("Division by the zero polynomial.")
        if self.is_zero():
            return UPoly()
        if self.degree < other.degree:
            return None
        lead = other._coeffs[-1]
        remainder = list(self._coeffs)
        quotient = [ZERO] * (self.degree - other.degree + 1)
        for k in range(len(quotient) - 1, -1, -1):
            top = remainder[k + other.degree]
            if top.is_zero():
                continue
            factor = top.divide(lead)
            if factor is None:
                return self._divide_over_fractions(other)
            quotient[k] = factor
            for i, coeff in enumerate(other._coeffs):
                remainder[k + i] = remainder[k + i] - factor * coeff
        if any(not c.is_zero() for c in remainder):
            return None
        return UPoly(quotient)

    def _to_sympy(self) -> Poly:
        expr = Integer(0)
        for k, coeff in enumerate(self._coeffs):
            for e_a, e_q, c in coeff.terms():
                expr += Rational(c.numerator, c.denominator) * _A**e_a * _Q**e_q * _U**k
        return Poly(expr, _U, domain=_FRACTIONS)

    def _divide_over_fractions(self, other: UPoly) -> None:
        _, remainder = self._to_sympy().div(other._to_sympy())
        if not remainder.is_zero:
            return None
        raise UnsupportedInputError(
            f"{self} divided by {other} has coefficients outside the Laurent ring."
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for k, coeff in enumerate(self._coeffs):
            if coeff.is_zero():
                continue
            power = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if not power:
                pieces.append(str(coeff))
            elif coeff == ONE:
                pieces.append(power)
            elif coeff.is_monomial():
                pieces.append(f"{coeff}*{power}")
            else:
                pieces.append(f"({coeff})*{power}")
        return " + ".join(pieces).replace("+ -", "- ")


U_ONE = UPoly([ONE])


def upoly_arith(op: str, f: UPoly, g: UPoly | Monomial | LaurentQA) -> UPoly | bool | None:
    """
    Dispatch a polynomial operation by name.

    ``op`` is one of ``add``, ``mul``, ``eq``, ``substitute_scale`` (``g`` is the scale) and
    ``exact_divide`` (returns None when the division is not exact).
    """
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "eq":
        return f == g
    if op == "substitute_scale":
        return f.substitute_scale(g)
    if op == "exact_divide":
        return f.exact_divide(g)
    raise DomainError(f"Unknown polynomial operation {op}.")


def poly_from_inverse_roots(roots: Iterable[Monomial]) -> UPoly:
    """
    Return ``prod_i (1 - rho_i u)`` for the listed inverse roots ``rho_i``.

    The geometric zero in ``u`` of each factor is ``rho_i^-1``.
    """
    result = U_ONE
    for root in roots:
        result = result * UPoly([ONE, -root.to_laurent()])
    return result
