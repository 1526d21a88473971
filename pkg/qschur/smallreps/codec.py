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
JSON encodings of the library values and parsers for the strings accepted on the command line.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from qschur.smallreps.combinatorics import Partition, Permutation
from qschur.smallreps.drinfeld import DrinfeldTuple, Multisegment, Segment
from qschur.smallreps.exceptions import DomainError, ParseError
from qschur.smallreps.hecke import AffineLetter, AffineWord, HeckeElt
from qschur.smallreps.ring import LaurentQA, Monomial, Scalar, UPoly
from qschur.smallreps.tensor import TensorElt
from qschur.smallreps.verify import Report

composition_regex = re.compile(r"^\s*(\d+\s*(,\s*\d+\s*)*)?$")
pure_tensor_regex = re.compile(r"^\s*w\[\s*(-?\d+\s*(,\s*-?\d+\s*)*)\]\s*$")
window_regex = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
letter_regex = re.compile(r"^(?:T(\d+)|X(\d+)(\^(-?1))?)$")
rational_regex = re.compile(r"^-?\d+(/\d+)?$")

SIGNS = {"plus": 1, "+": 1, "minus": -1, "-": -1}


def parse_composition(text: str) -> tuple[int, ...]:
    """
    Parse ``"3,1"`` into ``(3, 1)``; the empty string is the empty composition.

    Raises
    ------
    ParseError
        If the string is not a comma separated list of nonnegative integers.
    """
    if composition_regex.match(text) is None:
        raise ParseError(f"'{text}' is not a comma separated list of nonnegative integers.")
    return tuple(int(part) for part in text.split(",")) if text.strip() else ()


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"`` into a :class:`Partition`."""
    parts = parse_composition(text)
    try:
        return Partition(parts)
    except DomainError as exc:
        raise ParseError(exc.msg) from exc


def parse_pure_tensor(text: str) -> tuple[int, ...]:
    """Parse ``"w[3,1,2]"`` into the index tuple ``(3, 1, 2)``."""
    match = pure_tensor_regex.match(text)
    if match is None:
        raise ParseError(f"'{text}' is not a pure tensor of the form w[i1,...,ir].")
    return tuple(int(part) for part in match.group(1).split(","))


def parse_window(text: str) -> tuple[int, int]:
    """Parse ``"LO..HI"``; negative bounds are allowed."""
    match = window_regex.match(text)
    if match is None:
        raise ParseError(f"'{text}' is not a window of the form LO..HI.")
    return int(match.group(1)), int(match.group(2))


def parse_affine_word(text: str) -> AffineWord:
    """
    Parse a whitespace separated word such as ``"T1 X2 X2^-1"``.

    Raises
    ------
    ParseError
        If a token is neither ``Ti`` nor ``Xj`` with an optional ``^1`` or ``^-1``.
    """
    letters = []
    for token in text.split():
        match = letter_regex.match(token)
        if match is None:
            raise ParseError(f"'{token}' is not an affine Hecke generator.")
        if match.group(1) is not None:
            letters.append(AffineLetter("T", int(match.group(1)), 1))
        else:
            power = int(match.group(4)) if match.group(4) else 1
            letters.append(AffineLetter("X", int(match.group(2)), power))
    return AffineWord(letters)


def parse_sign(text: str) -> int:
    """``plus``/``+`` is 1 and ``minus``/``-`` is -1."""
    if text not in SIGNS:
        raise ParseError(f"'{text}' is not a sign, expected plus or minus.")
    return SIGNS[text]


def format_rational(value: Scalar) -> str:
    """``"p"`` or ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _parse_rational(text: Any) -> Fraction:
    if not isinstance(text, str) or rational_regex.match(text) is None:
        raise ParseError(f"{text!r} is not a rational number.")
    value = Fraction(text)
    return value


def _expect(data: Any, kind: type, what: str) -> Any:
    if not isinstance(data, kind):
        raise ParseError(f"Expected a JSON {kind.__name__} for {what}, got {type(data).__name__}.")
    return data


def _field(data: dict, key: str, what: str) -> Any:
    if key not in data:
        raise ParseError(f"Missing field '{key}' in {what}.")
    return data[key]


def _int(data: Any, what: str) -> int:
    if isinstance(data, bool) or not isinstance(data, int):
        raise ParseError(f"Expected an integer for {what}, got {data!r}.")
    return data


def encode_laurent(x: LaurentQA) -> list[dict]:
    """Terms sorted by ``(ea, eq)`` as ``{"ea", "eq", "num", "den"}``."""
    out = []
    for e_a, e_q, coeff in x.terms():
        coeff = Fraction(coeff)
        out.append(
            {"ea": e_a, "eq": e_q, "num": str(coeff.numerator), "den": str(coeff.denominator)}
        )
    return out


def decode_laurent(data: Any) -> LaurentQA:
    """Inverse of :func:`encode_laurent`."""
    terms = {}
    for term in _expect(data, list, "a Laurent polynomial"):
        term = _expect(term, dict, "a Laurent term")
        num = _parse_rational(_field(term, "num", "a Laurent term"))
        den = _parse_rational(_field(term, "den", "a Laurent term"))
        if den == 0:
            raise ParseError("Zero denominator in a Laurent term.")
        key = (_int(_field(term, "ea", "a Laurent term"), "ea"),
               _int(_field(term, "eq", "a Laurent term"), "eq"))
        if key in terms:
            raise ParseError(f"Repeated exponent pair {key}.")
        terms[key] = num / den
    return LaurentQA(terms)


def encode_upoly(f: UPoly) -> list[list[dict]]:
    """Coefficients by ascending power of ``u``."""
    return [encode_laurent(c) for c in f.coeffs]


def decode_upoly(data: Any) -> UPoly:
    """Inverse of :func:`encode_upoly`."""
    return UPoly(decode_laurent(c) for c in _expect(data, list, "a polynomial in u"))


def encode_monomial(m: Monomial) -> dict:
    """``{"coeff": "p/q", "ea": int, "eq": int}``"""
    return {"coeff": format_rational(m.coeff), "ea": m.e_a, "eq": m.e_q}


def decode_monomial(data: Any) -> Monomial:
    """Inverse of :func:`encode_monomial`."""
    data = _expect(data, dict, "a monomial")
    coeff = _parse_rational(_field(data, "coeff", "a monomial"))
    try:
        return Monomial(coeff, _int(_field(data, "ea", "a monomial"), "ea"),
                        _int(_field(data, "eq", "a monomial"), "eq"))
    except DomainError as exc:
        raise ParseError(exc.msg) from exc


def encode_hecke(h: HeckeElt) -> list[dict]:
    """``[{"perm": one-line, "coeff": Laurent}]`` sorted by permutation."""
    return [{"perm": list(w), "coeff": encode_laurent(c)} for w, c in h.terms()]


def decode_hecke(data: Any, r: int) -> HeckeElt:
    """Inverse of :func:`encode_hecke` for ``H(r)``."""
    terms = {}
    for term in _expect(data, list, "a Hecke algebra element"):
        term = _expect(term, dict, "a Hecke term")
        try:
            w = Permutation(_expect(_field(term, "perm", "a Hecke term"), list, "perm"))
        except DomainError as exc:
            raise ParseError(exc.msg) from exc
        terms[w] = decode_laurent(_field(term, "coeff", "a Hecke term"))
    try:
        return HeckeElt(r, terms)
    except DomainError as exc:
        raise ParseError(exc.msg) from exc


def encode_tensor(v: TensorElt) -> list[dict]:
    """``[{"idx": [ints], "coeff": Laurent}]`` sorted by index."""
    return [{"idx": list(idx), "coeff": encode_laurent(c)} for idx, c in v.terms()]


def decode_tensor(data: Any, n: int, r: int) -> TensorElt:
    """Inverse of :func:`encode_tensor` in rank ``r`` modulo ``n``."""
    terms = {}
    for term in _expect(data, list, "a tensor"):
        term = _expect(term, dict, "a tensor term")
        raw = _expect(_field(term, "idx", "a tensor term"), list, "idx")
        idx = tuple(_int(i, "idx") for i in raw)
        terms[idx] = decode_laurent(_field(term, "coeff", "a tensor term"))
    try:
        return TensorElt(r, n, terms)
    except DomainError as exc:
        raise ParseError(exc.msg) from exc


def encode_drinfeld(Q: DrinfeldTuple) -> dict:
    """Polynomials, degrees and, when known, the inverse roots of each entry."""
    return {
        "polys": [encode_upoly(p) for p in Q.polys],
        "degrees": list(Q.degrees),
        "factored": None
        if Q.factored is None
        else [[encode_monomial(m) for m in roots] for roots in Q.factored],
    }


def decode_drinfeld(data: Any) -> DrinfeldTuple:
    """Inverse of :func:`encode_drinfeld`; ``degrees`` is recomputed and ignored."""
    data = _expect(data, dict, "a Drinfeld tuple")
    raw = _expect(_field(data, "polys", "a Drinfeld tuple"), list, "polys")
    polys = [decode_upoly(p) for p in raw]
    factored = data.get("factored")
    if factored is not None:
        factored = [
            [decode_monomial(m) for m in _expect(roots, list, "roots")]
            for roots in _expect(factored, list, "factored")
        ]
    try:
        return DrinfeldTuple(polys, factored)
    except DomainError as exc:
        raise ParseError(exc.msg) from exc


def encode_multisegment(ms: Multisegment) -> list[dict]:
    """``[{"center": monomial, "length": k}]`` in canonical order."""
    return [{"center": encode_monomial(s.center), "length": s.length} for s in ms]


def decode_multisegment(data: Any) -> Multisegment:
    """Inverse of :func:`encode_multisegment`."""
    segments = []
    for item in _expect(data, list, "a multisegment"):
        item = _expect(item, dict, "a segment")
        try:
            segments.append(
                Segment(
                    decode_monomial(_field(item, "center", "a segment")),
                    _int(_field(item, "length", "a segment"), "length"),
                )
            )
        except DomainError as exc:
            raise ParseError(exc.msg) from exc
    return Multisegment(segments)


def encode_report(report: Report) -> dict:
    """The JSON report object."""
    return report.to_dict()


def decode_report(data: Any) -> Report:
    """Inverse of :func:`encode_report`."""
    return Report.from_dict(data)
